//! Hyperbolic positivity of bicomplex matrices.
//!
//! `A` is hyperbolic positive when `(c^*)^t A c ∈ D+` for every `c ∈ BC^n`.
//! This holds exactly when both idempotent components are positive semidefinite
//! complex matrices, which is what every test here ultimately checks, through
//! three independent routes.

use num_complex::Complex64;

use crate::error::{BcError, Result};
use crate::linalg::{self, CMatrix, CVector};
use crate::matrix::{BicomplexMatrix, BicomplexVector};
use crate::random;
use crate::scalar::BicomplexScalar;

/// Default tolerance for positivity decisions.
pub const DEFAULT_TOL: f64 = 1e-10;

const I: Complex64 = Complex64::new(0.0, 1.0);

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PositivityMethod {
    /// Both idempotent components are positive semidefinite.
    Components,
    /// `A1 >= 0`, `A2` skew-Hermitian and `-A1 <= i A2 <= A1`.
    Cartesian,
    /// Every eigenvalue of each component is real and non-negative.
    Eigen,
}

impl PositivityMethod {
    pub const ALL: [PositivityMethod; 3] = [
        PositivityMethod::Components,
        PositivityMethod::Cartesian,
        PositivityMethod::Eigen,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            PositivityMethod::Components => "components",
            PositivityMethod::Cartesian => "cartesian",
            PositivityMethod::Eigen => "eigen",
        }
    }
}

/// Unpaired spectra of the two idempotent components.
#[derive(Clone, Debug, PartialEq)]
pub struct EigenPairList {
    pub spectrum1: Vec<Complex64>,
    pub spectrum2: Vec<Complex64>,
}

/// `(c^*)^t A c`.
pub fn quadratic_form(a: &BicomplexMatrix, c: &BicomplexVector) -> Result<BicomplexScalar> {
    a.require_square()?;
    let ac = a.matvec(c)?;
    c.d_inner_product(&ac)
}

pub fn is_hyperbolic_positive(
    a: &BicomplexMatrix,
    tol: f64,
    method: PositivityMethod,
) -> Result<bool> {
    a.require_square()?;
    Ok(match method {
        PositivityMethod::Components => linalg::is_psd(a.c1(), tol) && linalg::is_psd(a.c2(), tol),
        PositivityMethod::Cartesian => cartesian_test(a, tol),
        PositivityMethod::Eigen => eigen_test(a.c1(), tol) && eigen_test(a.c2(), tol),
    })
}

fn cartesian_test(a: &BicomplexMatrix, tol: f64) -> bool {
    let (a1, a2) = a.to_cartesian();
    let scale = 1.0 + linalg::max_abs(&a1).max(linalg::max_abs(&a2));
    let skew = linalg::max_abs(&(&a2 + a2.adjoint()));
    if skew > tol * scale {
        return false;
    }
    let ia2 = &a2 * I;
    // -A1 <= iA2 <= A1  <=>  A1 - iA2 >= 0 and A1 + iA2 >= 0
    linalg::is_psd(&a1, tol)
        && linalg::is_psd(&(&a1 - &ia2), tol)
        && linalg::is_psd(&(&a1 + &ia2), tol)
}

fn eigen_test(m: &CMatrix, tol: f64) -> bool {
    if !linalg::is_hermitian(m, tol) {
        return false;
    }
    let values = linalg::general_eigenvalues(m);
    let radius = values.iter().fold(0.0f64, |acc, z| acc.max(z.norm()));
    let slack = tol * (1.0 + radius);
    values.iter().all(|z| z.im.abs() <= slack && z.re >= -slack)
}

/// Component spectra. Hermitian components use the Hermitian solver and come
/// back real and ascending.
pub fn bc_eigenvalues(a: &BicomplexMatrix) -> Result<EigenPairList> {
    a.require_square()?;
    let spectrum = |m: &CMatrix| -> Vec<Complex64> {
        if linalg::is_hermitian(m, 1e-12) {
            linalg::hermitian_eigen(m)
                .0
                .into_iter()
                .map(|v| Complex64::new(v, 0.0))
                .collect()
        } else {
            linalg::general_eigenvalues(m)
        }
    };
    Ok(EigenPairList {
        spectrum1: spectrum(a.c1()),
        spectrum2: spectrum(a.c2()),
    })
}

/// `B^{*t} B` for a random `rank x n` bicomplex `B`.
pub fn random_gram(n: usize, rank: usize, seed: u64) -> Result<BicomplexMatrix> {
    if rank == 0 || rank > n {
        return Err(BcError::BadRank { rank, n });
    }
    let mut rng = random::rng_from_seed(seed);
    let b = random::matrix(&mut rng, rank, n);
    b.star_transpose().matmul(&b)
}

fn require_positive(a: &BicomplexMatrix, tol: f64) -> Result<()> {
    if is_hyperbolic_positive(a, tol, PositivityMethod::Components)? {
        Ok(())
    } else {
        Err(BcError::NotPositive)
    }
}

/// Upper triangular `U` with `A = U^{*t} U`.
pub fn cholesky(a: &BicomplexMatrix, tol: f64) -> Result<BicomplexMatrix> {
    require_positive(a, tol)?;
    Ok(a.map_components(linalg::psd_upper_factor))
}

/// Lower triangular `L` with `A = L^{*t} L`, obtained from the upper factor of
/// the index-reversed matrix.
pub fn cholesky_lower(a: &BicomplexMatrix, tol: f64) -> Result<BicomplexMatrix> {
    require_positive(a, tol)?;
    let n = a.rows();
    let reverse = |m: &CMatrix| CMatrix::from_fn(n, n, |r, c| m[(n - 1 - r, n - 1 - c)]);
    Ok(a.map_components(|m| reverse(&linalg::psd_upper_factor(&reverse(m)))))
}

/// Pairwise orthogonal `a_1, …, a_r` with `A = Σ a_i a_i^{*t}`.
///
/// Component `ℓ` contributes `√μ q` for each eigenpair `(μ, q)` above the rank
/// cutoff; the shorter list is zero-padded so `r = max(rank 𝒜1, rank 𝒜2)`.
pub fn rank_one_decomposition(a: &BicomplexMatrix, tol: f64) -> Result<Vec<BicomplexVector>> {
    require_positive(a, tol)?;
    let n = a.rows();
    let scaled_eigenvectors = |m: &CMatrix| -> Vec<CVector> {
        let (values, vectors) = linalg::hermitian_eigen(m);
        let cutoff = tol * (1.0 + linalg::spectral_radius_hermitian(&values));
        values
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, &v)| v > cutoff)
            .map(|(k, &v)| {
                let mut q = vectors.column(k).into_owned();
                linalg::fix_phase(&mut q);
                q * Complex64::new(v.sqrt(), 0.0)
            })
            .collect()
    };
    let b = scaled_eigenvectors(a.c1());
    let c = scaled_eigenvectors(a.c2());
    let r = b.len().max(c.len());
    let pick =
        |list: &[CVector], k: usize| list.get(k).cloned().unwrap_or_else(|| CVector::zeros(n));
    (0..r)
        .map(|k| BicomplexVector::from_components(pick(&b, k), pick(&c, k)))
        .collect()
}

/// Hyperbolic positive with trace 1.
pub fn is_state(a: &BicomplexMatrix, tol: f64) -> Result<bool> {
    a.require_square()?;
    let bicomplex = is_hyperbolic_positive(a, tol, PositivityMethod::Eigen)?
        && a.trace()?.max_component_distance(&BicomplexScalar::ONE) <= tol;
    let complex_state =
        |m: &CMatrix| linalg::is_psd(m, tol) && (linalg::trace(m) - 1.0).norm() <= tol;
    let componentwise = complex_state(a.c1()) && complex_state(a.c2());
    debug_assert_eq!(bicomplex, componentwise, "state characterisations disagree");
    Ok(bicomplex && componentwise)
}
