//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each and
//! exits non-zero if any failed.

use std::process::ExitCode;
use std::time::Instant;

use num_complex::Complex64;
use rand::Rng;

use bicomplex::choi::{map_from_kraus, KrausSet, MatrixMap};
use bicomplex::dsp::{self, OpCounter};
use bicomplex::linalg::{self, CMatrix};
use bicomplex::positivity::{self, PositivityMethod};
use bicomplex::random::{self, BcRng};
use bicomplex::tensor::{self, TensorRoute};
use bicomplex::{BcError, BicomplexMatrix, BicomplexScalar, InverseMethod};

type Outcome = Result<String, String>;
type Criterion<'a> = Box<dyn FnOnce(&mut BcRng) -> Outcome + 'a>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn gaussian_matrix(rows: usize, entries: &[(i32, i32)]) -> CMatrix {
    let cols = entries.len() / rows;
    CMatrix::from_row_slice(
        rows,
        cols,
        &entries
            .iter()
            .map(|&(re, im)| Complex64::new(re as f64, im as f64))
            .collect::<Vec<_>>(),
    )
}

/// Entry-wise distance after checking that every entry is a Gaussian integer.
fn integer_distance(got: &CMatrix, want: &CMatrix) -> f64 {
    got.iter()
        .zip(want.iter())
        .map(|(g, w)| {
            let rounded = Complex64::new(g.re.round(), g.im.round());
            (g - rounded).norm().max((rounded - w).norm())
        })
        .fold(0.0, f64::max)
}

fn golden_example() -> Outcome {
    let start = Instant::now();
    let a = BicomplexMatrix::from_cartesian(
        &gaussian_matrix(2, &[(1, 0), (1, 1), (0, 0), (0, 1)]),
        &gaussian_matrix(2, &[(0, 1), (1, 0), (1, 0), (0, 1)]),
    )
    .unwrap();
    let b = BicomplexMatrix::from_cartesian(
        &gaussian_matrix(2, &[(0, 0), (0, 1), (0, 1), (1, 0)]),
        &gaussian_matrix(2, &[(1, 0), (0, 0), (1, 0), (1, 1)]),
    )
    .unwrap();
    #[rustfmt::skip]
    let c1 = gaussian_matrix(4, &[
        (0, -1), (0, 1), (-1, 0), (-1, 1),
        (0, 0), (2, -1), (-2, 1), (0, 0),
        (-1, 0), (0, 0), (0, -1), (-1, 0),
        (-1, 0), (-1, -1), (-1, -1), (1, 0),
    ]);
    #[rustfmt::skip]
    let c2 = gaussian_matrix(4, &[
        (1, 0), (-1, 0), (1, 1), (0, 1),
        (0, 0), (1, 2), (1, 2), (1, 2),
        (0, 0), (0, 1), (0, 1), (-1, 0),
        (0, 1), (1, 0), (-1, 1), (-1, 2),
    ]);
    #[rustfmt::skip]
    let e1 = gaussian_matrix(4, &[
        (0, -2), (0, 2), (0, -1), (0, 1),
        (0, 0), (4, -2), (0, 0), (2, -1),
        (-1, 0), (1, 0), (1, -1), (-1, 1),
        (0, 0), (-1, -2), (0, 0), (3, 1),
    ]);
    #[rustfmt::skip]
    let e2 = gaussian_matrix(4, &[
        (0, 0), (0, 0), (-2, 1), (-2, 1),
        (0, 0), (0, 0), (-4, 2), (-2, 1),
        (-1, 0), (-1, 0), (-1, -1), (-1, -1),
        (-2, 0), (-1, 0), (-2, -2), (-1, -1),
    ]);
    let mut worst: f64 = 0.0;
    for route in [TensorRoute::Cartesian, TensorRoute::Idempotent] {
        let t = tensor::tensor(&a, &b, route);
        let (x1, x2) = t.to_cartesian();
        worst = worst
            .max(integer_distance(&x1, &c1))
            .max(integer_distance(&x2, &c2))
            .max(integer_distance(t.c1(), &e1))
            .max(integer_distance(t.c2(), &e2));
    }
    let elapsed = start.elapsed();
    ensure(worst <= 1e-12, || format!("max deviation {worst:.3e}"))?;
    ensure(elapsed.as_secs_f64() < 1.0, || format!("took {elapsed:?}"))?;
    Ok(format!(
        "both routes match, max deviation {worst:.1e}, {elapsed:?}"
    ))
}

fn route_equivalence(rng: &mut BcRng) -> Outcome {
    let mut worst: f64 = 0.0;
    for _ in 0..200 {
        let mut dims = || (rng.random_range(1..=4), rng.random_range(1..=4));
        let ((ar, ac), (br, bc)) = (dims(), dims());
        let a = random::matrix(rng, ar, ac);
        let b = random::matrix(rng, br, bc);
        worst = worst
            .max(tensor::tensor_cartesian(&a, &b).max_abs_diff(&tensor::tensor_idempotent(&a, &b)));
    }
    ensure(worst <= 1e-12, || format!("max difference {worst:.3e}"))?;
    Ok(format!("200 pairs, max difference {worst:.1e}"))
}

/// The Gram instances shared by criteria 3 and 4.
fn gram_suite(rng: &mut BcRng) -> Vec<BicomplexMatrix> {
    (0..100)
        .map(|_| {
            let n = rng.random_range(1..=5);
            let rank = rng.random_range(1..=n);
            positivity::random_gram(n, rank, rng.random()).unwrap()
        })
        .collect()
}

fn positivity_suite(rng: &mut BcRng, grams: &[BicomplexMatrix]) -> Outcome {
    let tol = positivity::DEFAULT_TOL;
    let mut disagreements = Vec::new();
    for (k, g) in grams.iter().enumerate() {
        for method in PositivityMethod::ALL {
            if !positivity::is_hyperbolic_positive(g, tol, method).unwrap() {
                disagreements.push(format!("gram {k} rejected by {}", method.name()));
            }
        }
    }
    for k in 0..100 {
        let n = rng.random_range(1..=5);
        let positive =
            |rng: &mut BcRng| -> Vec<f64> { (0..n).map(|_| rng.random_range(0.0..3.0)).collect() };
        let mut s1 = positive(rng);
        let mut s2 = positive(rng);
        let negative = -rng.random_range(0.1..2.0);
        let slot = rng.random_range(0..n);
        if rng.random::<bool>() {
            s1[slot] = negative;
        } else {
            s2[slot] = negative;
        }
        let a = random::with_spectra(rng, &s1, &s2);
        for method in PositivityMethod::ALL {
            if positivity::is_hyperbolic_positive(&a, tol, method).unwrap() {
                disagreements.push(format!("indefinite {k} accepted by {}", method.name()));
            }
        }
    }
    ensure(disagreements.is_empty(), || disagreements.join("; "))?;

    let mut worst: f64 = 0.0;
    for g in grams.iter().take(50) {
        for _ in 0..50 {
            let c = random::vector(rng, g.rows());
            let q = positivity::quadratic_form(g, &c).unwrap();
            worst = worst
                .max(q.l1.im.abs())
                .max(q.l2.im.abs())
                .max(-q.l1.re)
                .max(-q.l2.re);
        }
    }
    ensure(worst <= 1e-10, || {
        format!("quadratic form leaves D+ by {worst:.3e}")
    })?;
    Ok(format!(
        "200 instances x 3 methods agree, 2500 witnesses in D+ (slack {worst:.1e})"
    ))
}

fn component_residual(a: &BicomplexMatrix, b: &BicomplexMatrix) -> f64 {
    let d = a.checked_sub(b).unwrap();
    let (f1, f2) = d.component_frobenius();
    f1.max(f2)
}

fn factorizations(grams: &[BicomplexMatrix]) -> Outcome {
    let tol = positivity::DEFAULT_TOL;
    let mut worst: f64 = 0.0;
    for g in grams {
        let n = g.rows();
        let u = positivity::cholesky(g, tol).unwrap();
        let l = positivity::cholesky_lower(g, tol).unwrap();
        for r in 0..n {
            for c in 0..r {
                ensure(u.get(r, c) == BicomplexScalar::ZERO, || {
                    "upper factor not triangular".into()
                })?;
                ensure(l.get(c, r) == BicomplexScalar::ZERO, || {
                    "lower factor not triangular".into()
                })?;
            }
        }
        worst = worst.max(component_residual(
            &u.star_transpose().matmul(&u).unwrap(),
            g,
        ));
        worst = worst.max(component_residual(
            &l.star_transpose().matmul(&l).unwrap(),
            g,
        ));
        let mut sum = BicomplexMatrix::zeros(n, n);
        for v in positivity::rank_one_decomposition(g, tol).unwrap() {
            sum = sum.checked_add(&v.outer_star()).unwrap();
        }
        worst = worst.max(component_residual(&sum, g));
    }
    ensure(worst <= 1e-10, || {
        format!("reconstruction residual {worst:.3e}")
    })?;
    Ok(format!(
        "100 Gram matrices, max Frobenius residual {worst:.1e}"
    ))
}

fn algebraic_laws(rng: &mut BcRng) -> Outcome {
    let mut worst: f64 = 0.0;
    let mut track = |x: &BicomplexMatrix, y: &BicomplexMatrix| worst = worst.max(x.max_abs_diff(y));
    for _ in 0..100 {
        let (n, m) = (rng.random_range(1..=3), rng.random_range(1..=3));
        let a = random::well_conditioned(rng, n);
        let a2 = random::well_conditioned(rng, n);
        let b = random::well_conditioned(rng, m);
        let b2 = random::well_conditioned(rng, m);
        let c = random::well_conditioned(rng, n);
        let d = random::well_conditioned(rng, m);
        let (alpha, beta) = (random::scalar(rng), random::scalar(rng));
        let t = tensor::tensor_idempotent;

        let lhs = t(&a.scale(alpha).checked_add(&a2.scale(beta)).unwrap(), &b);
        let rhs = t(&a, &b)
            .scale(alpha)
            .checked_add(&t(&a2, &b).scale(beta))
            .unwrap();
        track(&lhs, &rhs);
        let lhs = t(&a, &b.scale(alpha).checked_add(&b2.scale(beta)).unwrap());
        let rhs = t(&a, &b)
            .scale(alpha)
            .checked_add(&t(&a, &b2).scale(beta))
            .unwrap();
        track(&lhs, &rhs);

        let lhs = t(&a.matmul(&c).unwrap(), &b.matmul(&d).unwrap());
        let rhs = t(&a, &b).matmul(&t(&c, &d)).unwrap();
        track(&lhs, &rhs);

        let lhs = t(&a, &b).inverse(InverseMethod::Componentwise).unwrap();
        let rhs = t(
            &a.inverse(InverseMethod::Componentwise).unwrap(),
            &b.inverse(InverseMethod::Componentwise).unwrap(),
        );
        track(&lhs, &rhs);

        track(
            &a.inverse(InverseMethod::Componentwise).unwrap(),
            &a.inverse(InverseMethod::Cartesian).unwrap(),
        );
    }
    ensure(worst <= 1e-9, || format!("max law violation {worst:.3e}"))?;
    Ok(format!("100 instances, max violation {worst:.1e}"))
}

fn state_preservation(rng: &mut BcRng) -> Outcome {
    let mut worst: f64 = 0.0;
    for k in 0..50 {
        let (n, m) = (rng.random_range(1..=3), rng.random_range(1..=3));
        let a = random::state(rng, n);
        let b = random::state(rng, m);
        let t = tensor::tensor_idempotent(&a, &b);
        ensure(
            positivity::is_state(&t, positivity::DEFAULT_TOL).unwrap(),
            || format!("pair {k}: product is not a state"),
        )?;
        worst = worst.max(
            t.trace()
                .unwrap()
                .max_component_distance(&BicomplexScalar::ONE),
        );
    }
    ensure(worst <= 1e-12, || format!("|trace - 1| = {worst:.3e}"))?;
    Ok(format!("50 pairs, max |trace - 1| {worst:.1e}"))
}

fn recovery(rng: &mut BcRng) -> Outcome {
    let mut worst: f64 = 0.0;
    for _ in 0..50 {
        let a = random::state(rng, 2);
        let b = random::state(rng, 3);
        let m = tensor::tensor_idempotent(&a, &b);
        let f = tensor::recover_factors(&m, 2, 3, positivity::DEFAULT_TOL).unwrap();
        // states already satisfy the trace gauge on the second factor
        worst = worst.max(f.a.max_abs_diff(&a)).max(f.b.max_abs_diff(&b));
    }
    ensure(worst <= 1e-8, || format!("factor error {worst:.3e}"))?;
    match tensor::recover_factors(&tensor::bell_projector(), 2, 2, positivity::DEFAULT_TOL) {
        Err(BcError::NotProduct { residual }) if residual > 1e-3 => {
            Ok(format!("50 pairs, max factor error {worst:.1e}; Bell pattern rejected (residual {residual:.3})"))
        }
        other => Err(format!("Bell pattern: expected NotProduct with residual > 1e-3, got {other:?}")),
    }
}

fn choi_theorem(rng: &mut BcRng) -> Outcome {
    let tol = positivity::DEFAULT_TOL;
    let mut worst: f64 = 0.0;
    let mut maps = Vec::new();
    for k in 0..50 {
        let (n, m) = (rng.random_range(1..=3), rng.random_range(1..=3));
        let count = rng.random_range(1..=4);
        let ops = (0..count).map(|_| random::matrix(rng, m, n)).collect();
        let map = map_from_kraus(&KrausSet::new(ops).unwrap());
        ensure(map.is_completely_positive(tol), || {
            format!("map {k} not CP")
        })?;
        let extracted = map.kraus_decomposition(tol).unwrap();
        worst = worst.max(map.max_abs_diff(&map_from_kraus(&extracted)));
        maps.push(map);
    }
    ensure(worst <= 1e-8, || {
        format!("Kraus reconstruction error {worst:.3e}")
    })?;

    let transpose = MatrixMap::transpose(2);
    ensure(!transpose.is_completely_positive(tol), || {
        "transpose map accepted".into()
    })?;
    let choi = transpose.choi_matrix();
    for ell in 1..=2 {
        let (values, _) = linalg::hermitian_eigen(choi.component(ell));
        let min = values.iter().copied().fold(f64::INFINITY, f64::min);
        ensure((min + 1.0).abs() <= 1e-10, || {
            format!("component {ell} min eigenvalue {min}")
        })?;
    }

    let product = maps[0].tensor(&maps[1]);
    ensure(product.is_completely_positive(tol), || {
        "tensor of CP maps not CP".into()
    })?;
    Ok(format!(
        "50 maps CP, Kraus error {worst:.1e}; transpose has eigenvalue -1; tensor of CP maps is CP"
    ))
}

fn norm_sharpness(rng: &mut BcRng) -> Outcome {
    let e1 = BicomplexScalar::E1;
    let lhs = (e1 * e1).euclidean_norm();
    let rhs = std::f64::consts::SQRT_2 * e1.euclidean_norm().powi(2);
    let target = std::f64::consts::FRAC_1_SQRT_2;
    ensure(
        (lhs - target).abs() <= 1e-15 && (rhs - target).abs() <= 1e-15,
        || format!("|e1 e1| = {lhs}, sqrt2 |e1|^2 = {rhs}"),
    )?;
    for _ in 0..1000 {
        let (z, w) = (random::scalar(rng), random::scalar(rng));
        let bound = std::f64::consts::SQRT_2 * z.euclidean_norm() * w.euclidean_norm();
        let product = (z * w).euclidean_norm();
        ensure(product <= bound * (1.0 + 1e-15), || {
            format!("{product} > {bound}")
        })?;
    }
    Ok("equality at e1 e1, inequality on 1000 samples".into())
}

fn dsp_products(rng: &mut BcRng) -> Outcome {
    let mut worst: f64 = 0.0;
    for _ in 0..100 {
        let (s, r) = (rng.random_range(1..=6), rng.random_range(1..=6));
        let a = random::matrix(rng, s, s);
        let b = random::matrix(rng, r, r);
        let x = random::vector(rng, s * r);
        let f = dsp::apply_factored(&a, &b, &x, &mut OpCounter::new()).unwrap();
        let d = dsp::apply_direct(&a, &b, &x, &mut OpCounter::new()).unwrap();
        worst = worst.max(f.max_abs_diff(&d));
    }
    ensure(worst <= 1e-10, || format!("factored vs direct {worst:.3e}"))?;
    let a = random::matrix(rng, 8, 8);
    let b = random::matrix(rng, 8, 8);
    let x = random::vector(rng, 64);
    let (mut factored, mut direct) = (OpCounter::new(), OpCounter::new());
    dsp::apply_factored(&a, &b, &x, &mut factored).unwrap();
    dsp::apply_direct(&a, &b, &x, &mut direct).unwrap();
    ensure(
        factored.mults == [1024, 1024] && direct.mults == [4096, 4096],
        || {
            format!(
                "counts {:?} factored vs {:?} direct",
                factored.mults, direct.mults
            )
        },
    )?;
    Ok(format!(
        "100 instances, max difference {worst:.1e}; n=64: 1024 vs 4096 mults per component"
    ))
}

fn main() -> ExitCode {
    let start = Instant::now();
    let mut rng = random::rng_from_seed(0x5eed);
    let grams = gram_suite(&mut rng);
    let criteria: Vec<(&str, Criterion)> = vec![
        ("golden tensor example", Box::new(|_| golden_example())),
        ("route equivalence", Box::new(route_equivalence)),
        (
            "positivity equivalence",
            Box::new(|rng| positivity_suite(rng, &grams)),
        ),
        ("factorizations", Box::new(|_| factorizations(&grams))),
        ("algebraic laws", Box::new(algebraic_laws)),
        ("state preservation", Box::new(state_preservation)),
        ("factor recovery", Box::new(recovery)),
        ("Choi theorem", Box::new(choi_theorem)),
        ("norm sharpness", Box::new(norm_sharpness)),
        ("tensor-factored products", Box::new(dsp_products)),
    ];
    let mut failed = 0;
    for (k, (name, check)) in criteria.into_iter().enumerate() {
        match check(&mut rng) {
            Ok(detail) => println!("acceptance {:>2} PASS  {name}: {detail}", k + 1),
            Err(detail) => {
                failed += 1;
                println!("acceptance {:>2} FAIL  {name}: {detail}", k + 1);
            }
        }
    }
    println!(
        "acceptance: {} of 10 passed in {:?}",
        10 - failed,
        start.elapsed()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
