use proptest::prelude::*;

use bicomplex::choi::{map_from_kraus, KrausSet};
use bicomplex::dsp::{self, OpCounter, StridePermutation};
use bicomplex::io::{self, Repr};
use bicomplex::positivity::{self, PositivityMethod};
use bicomplex::random;
use bicomplex::tensor;
use bicomplex::{BicomplexMatrix, BicomplexScalar, InverseMethod};

// Instances come from the seeded generators; proptest drives seeds and sizes.
fn rng(seed: u64) -> random::BcRng {
    random::rng_from_seed(seed)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn routes_agree(seed in any::<u64>(), ar in 1usize..4, ac in 1usize..4, br in 1usize..4, bc in 1usize..4) {
        let mut r = rng(seed);
        let a = random::matrix(&mut r, ar, ac);
        let b = random::matrix(&mut r, br, bc);
        let t = tensor::tensor_cartesian(&a, &b);
        prop_assert_eq!(t.shape(), (ar * br, ac * bc));
        prop_assert!(t.max_abs_diff(&tensor::tensor_idempotent(&a, &b)) < 1e-12);
    }

    #[test]
    fn tensor_is_associative(seed in any::<u64>(), n in 1usize..3, m in 1usize..3, k in 1usize..3) {
        let mut r = rng(seed);
        let a = random::matrix(&mut r, n, n);
        let b = random::matrix(&mut r, m, m);
        let c = random::matrix(&mut r, k, k);
        let left = tensor::tensor_idempotent(&tensor::tensor_idempotent(&a, &b), &c);
        let right = tensor::tensor_idempotent(&a, &tensor::tensor_idempotent(&b, &c));
        prop_assert!(left.max_abs_diff(&right) < 1e-12);
    }

    #[test]
    fn trace_is_multiplicative(seed in any::<u64>(), n in 1usize..4, m in 1usize..4) {
        let mut r = rng(seed);
        let a = random::matrix(&mut r, n, n);
        let b = random::matrix(&mut r, m, m);
        let lhs = tensor::tensor_idempotent(&a, &b).trace().unwrap();
        let rhs = a.trace().unwrap() * b.trace().unwrap();
        prop_assert!(lhs.max_component_distance(&rhs) < 1e-10 * (1.0 + rhs.euclidean_norm()));
    }

    #[test]
    fn star_transpose_distributes(seed in any::<u64>(), n in 1usize..4, m in 1usize..4) {
        let mut r = rng(seed);
        let a = random::matrix(&mut r, n, n);
        let b = random::matrix(&mut r, m, m);
        let lhs = tensor::tensor_idempotent(&a, &b).star_transpose();
        let rhs = tensor::tensor_idempotent(&a.star_transpose(), &b.star_transpose());
        prop_assert_eq!(lhs, rhs);
        let c = random::matrix(&mut r, n, n);
        let ac = a.matmul(&c).unwrap().star_transpose();
        let ca = c.star_transpose().matmul(&a.star_transpose()).unwrap();
        prop_assert!(ac.max_abs_diff(&ca) < 1e-12);
    }

    #[test]
    fn hyperbolic_matrices_stay_hyperbolic(seed in any::<u64>(), n in 1usize..4, m in 1usize..4) {
        // real components make a hyperbolic matrix; ⊗_j keeps them real
        let mut r = rng(seed);
        let a = random::matrix(&mut r, n, n).map_components(|c| c.map(|z| num_complex::Complex64::new(z.re, 0.0)));
        let b = random::matrix(&mut r, m, m).map_components(|c| c.map(|z| num_complex::Complex64::new(z.re, 0.0)));
        prop_assert!(a.is_hyperbolic(0.0) && b.is_hyperbolic(0.0));
        prop_assert!(tensor::tensor_idempotent(&a, &b).is_hyperbolic(0.0));
    }

    #[test]
    fn block_representation_is_multiplicative(seed in any::<u64>(), n in 1usize..4) {
        let mut r = rng(seed);
        let a = random::matrix(&mut r, n, n);
        let b = random::matrix(&mut r, n, n);
        let lhs = tensor::block_representation(&a.matmul(&b).unwrap());
        let rhs = tensor::block_representation(&a) * tensor::block_representation(&b);
        prop_assert!(bicomplex::linalg::max_abs_diff(&lhs, &rhs) < 1e-12);
    }

    #[test]
    fn inverse_law(seed in any::<u64>(), n in 1usize..4, m in 1usize..4) {
        let mut r = rng(seed);
        let a = random::well_conditioned(&mut r, n);
        let b = random::well_conditioned(&mut r, m);
        let t = tensor::tensor_idempotent(&a, &b);
        for method in [InverseMethod::Componentwise, InverseMethod::Cartesian] {
            let inv = t.inverse(method).unwrap();
            let id = t.matmul(&inv).unwrap();
            prop_assert!(id.max_abs_diff(&BicomplexMatrix::identity(n * m)) < 1e-10);
        }
    }

    #[test]
    fn positivity_methods_agree(seed in any::<u64>(), n in 1usize..5, neg in prop::option::of(0usize..2)) {
        let mut r = rng(seed);
        let mut s1: Vec<f64> = (0..n).map(|k| 0.5 + k as f64).collect();
        let mut s2 = s1.clone();
        match neg {
            Some(0) => s1[0] = -0.5,
            Some(_) => s2[n - 1] = -0.5,
            None => {}
        }
        let a = random::with_spectra(&mut r, &s1, &s2);
        let verdicts: Vec<bool> = PositivityMethod::ALL
            .iter()
            .map(|&m| positivity::is_hyperbolic_positive(&a, 1e-10, m).unwrap())
            .collect();
        prop_assert!(verdicts.iter().all(|&v| v == neg.is_none()), "{:?}", verdicts);
    }

    #[test]
    fn gram_factors_reconstruct(seed in any::<u64>(), n in 1usize..5, rank_frac in 0.0f64..1.0) {
        let rank = 1 + ((n - 1) as f64 * rank_frac) as usize;
        let g = positivity::random_gram(n, rank, seed).unwrap();
        let vectors = positivity::rank_one_decomposition(&g, 1e-10).unwrap();
        prop_assert!(vectors.len() <= rank);
        let sum = vectors
            .iter()
            .fold(BicomplexMatrix::zeros(n, n), |acc, v| acc.checked_add(&v.outer_star()).unwrap());
        prop_assert!(sum.max_abs_diff(&g) < 1e-10);
        for (i, u) in vectors.iter().enumerate() {
            for w in &vectors[i + 1..] {
                let ip = u.d_inner_product(w).unwrap();
                prop_assert!(ip.max_component_distance(&BicomplexScalar::ZERO) < 1e-9);
            }
        }
    }

    #[test]
    fn kraus_maps_apply_consistently(seed in any::<u64>(), n in 1usize..4, m in 1usize..4, count in 1usize..4) {
        let mut r = rng(seed);
        let ops: Vec<_> = (0..count).map(|_| random::matrix(&mut r, m, n)).collect();
        let kraus = KrausSet::new(ops).unwrap();
        let map = map_from_kraus(&kraus);
        let x = random::matrix(&mut r, n, n);
        prop_assert!(map.apply(&x).unwrap().max_abs_diff(&kraus.apply(&x).unwrap()) < 1e-10);
        prop_assert!(map.is_completely_positive(1e-10));
        let extracted = map.kraus_decomposition(1e-10).unwrap();
        prop_assert!(extracted.len() <= n * m);
        prop_assert!(map_from_kraus(&extracted).max_abs_diff(&map) < 1e-8);
    }

    #[test]
    fn factored_product_matches_direct(seed in any::<u64>(), s in 1usize..6, r_dim in 1usize..6) {
        let mut r = rng(seed);
        let a = random::matrix(&mut r, s, s);
        let b = random::matrix(&mut r, r_dim, r_dim);
        let x = random::vector(&mut r, s * r_dim);
        let (mut cf, mut cd) = (OpCounter::new(), OpCounter::new());
        let f = dsp::apply_factored(&a, &b, &x, &mut cf).unwrap();
        let d = dsp::apply_direct(&a, &b, &x, &mut cd).unwrap();
        prop_assert!(f.max_abs_diff(&d) < 1e-10);
        let expected = (s * r_dim * r_dim + r_dim * s * s) as u64;
        prop_assert_eq!(cf.mults, [expected; 2]);
        prop_assert_eq!(cd.mults, [((s * r_dim) * (s * r_dim)) as u64; 2]);
    }

    #[test]
    fn stride_permutations_compose(s in 1usize..7, r_dim in 1usize..7) {
        // P_{n,s} P_{n,r} = I
        let n = s * r_dim;
        let p = StridePermutation::new(n, s).unwrap();
        let q = StridePermutation::new(n, r_dim).unwrap();
        let x: Vec<usize> = (0..n).collect();
        prop_assert_eq!(p.apply(&q.apply(&x)), x);
    }

    #[test]
    fn json_round_trip(seed in any::<u64>(), rows in 1usize..4, cols in 1usize..4) {
        let mut r = rng(seed);
        let m = random::matrix(&mut r, rows, cols);
        for repr in [Repr::Idempotent, Repr::Cartesian] {
            let back = io::parse_matrix(&io::matrix_to_string(&m, repr)).unwrap();
            prop_assert!(back.max_abs_diff(&m) < 1e-14);
        }
        let canonical = io::matrix_to_string(&m, Repr::Idempotent);
        let again = io::matrix_to_string(&io::parse_matrix(&canonical).unwrap(), Repr::Idempotent);
        prop_assert_eq!(canonical, again);
    }
}
