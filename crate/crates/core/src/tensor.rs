//! The bicomplex tensor product `⊗_j` and recovery of its factors.
//!
//! For `A = A1 + j A2` and `B = B1 + j B2` the product is
//!
//! ```text
//! A ⊗_j B = (A1 ⊗ B1 - A2 ⊗ B2) + j (A1 ⊗ B2 + A2 ⊗ B1)
//!         = (𝒜1 ⊗ ℬ1) e1 + (𝒜2 ⊗ ℬ2) e2.
//! ```
//!
//! Both formulas are implemented independently; the complex Kronecker product
//! uses the row-major block layout of [`crate::linalg::kron`].

use num_complex::Complex64;

use crate::error::{BcError, Result};
use crate::linalg::{self, CMatrix};
use crate::matrix::BicomplexMatrix;

/// Which formula computes `⊗_j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum TensorRoute {
    Cartesian,
    #[default]
    Idempotent,
}

/// `⊗_j` from the cartesian parts.
pub fn tensor_cartesian(a: &BicomplexMatrix, b: &BicomplexMatrix) -> BicomplexMatrix {
    let (a1, a2) = a.to_cartesian();
    let (b1, b2) = b.to_cartesian();
    let c1 = linalg::kron(&a1, &b1) - linalg::kron(&a2, &b2);
    let c2 = linalg::kron(&a1, &b2) + linalg::kron(&a2, &b1);
    BicomplexMatrix::from_cartesian(&c1, &c2).expect("kronecker parts share a shape")
}

/// `⊗_j` component-wise on the idempotent decomposition.
pub fn tensor_idempotent(a: &BicomplexMatrix, b: &BicomplexMatrix) -> BicomplexMatrix {
    BicomplexMatrix::from_components(linalg::kron(a.c1(), b.c1()), linalg::kron(a.c2(), b.c2()))
        .expect("kronecker components share a shape")
}

pub fn tensor(a: &BicomplexMatrix, b: &BicomplexMatrix, route: TensorRoute) -> BicomplexMatrix {
    match route {
        TensorRoute::Cartesian => tensor_cartesian(a, b),
        TensorRoute::Idempotent => tensor_idempotent(a, b),
    }
}

/// Complex `2n x 2m` block matrix `[[A1, -A2], [A2, A1]]` of `A = A1 + j A2`.
pub fn block_representation(a: &BicomplexMatrix) -> CMatrix {
    let (a1, a2) = a.to_cartesian();
    let (n, m) = a.shape();
    let mut out = CMatrix::zeros(2 * n, 2 * m);
    out.view_mut((0, 0), (n, m)).copy_from(&a1);
    out.view_mut((0, m), (n, m)).copy_from(&(-&a2));
    out.view_mut((n, 0), (n, m)).copy_from(&a2);
    out.view_mut((n, m), (n, m)).copy_from(&a1);
    out
}

/// Factors returned by [`recover_factors`].
///
/// The factorisation `M = A ⊗_j B` is unique only up to reciprocal scalars per
/// component. The gauge fixed here is `Tr ℬℓ = 1`, hence `Tr 𝒜ℓ = Tr ℳℓ`.
#[derive(Clone, Debug)]
pub struct RecoveredFactors {
    pub a: BicomplexMatrix,
    pub b: BicomplexMatrix,
    /// Frobenius reconstruction residual per component.
    pub residual: (f64, f64),
}

impl RecoveredFactors {
    pub const GAUGE: &'static str = "trace of each idempotent component of b equals 1";
}

/// Partial trace over the second (`m`-dimensional) factor:
/// `out[a, b] = Σ_k M[(a,k), (b,k)]`.
fn trace_out_second(m: &CMatrix, n: usize, dim2: usize) -> CMatrix {
    CMatrix::from_fn(n, n, |r, c| {
        (0..dim2).map(|k| m[(r * dim2 + k, c * dim2 + k)]).sum()
    })
}

/// Partial trace over the first (`n`-dimensional) factor:
/// `out[a, b] = Σ_k M[(k,a), (k,b)]`.
fn trace_out_first(m: &CMatrix, n: usize, dim2: usize) -> CMatrix {
    CMatrix::from_fn(dim2, dim2, |r, c| {
        (0..n).map(|k| m[(k * dim2 + r, k * dim2 + c)]).sum()
    })
}

fn recover_component(
    m: &CMatrix,
    n: usize,
    dim2: usize,
    tol: f64,
    ell: usize,
) -> Result<(CMatrix, CMatrix, f64)> {
    let tr = linalg::trace(m);
    if tr.norm() <= tol {
        return Err(BcError::ZeroTrace { component: ell });
    }
    // With M = X ⊗ Y: tracing out Y gives Tr(Y) X, tracing out X gives Tr(X) Y.
    let a = trace_out_second(m, n, dim2);
    let b = trace_out_first(m, n, dim2) / tr;
    let residual = linalg::frobenius(&(linalg::kron(&a, &b) - m));
    Ok((a, b, residual))
}

/// Recovers `A (n x n)` and `B (m x m)` from `M = A ⊗_j B`.
pub fn recover_factors(
    mat: &BicomplexMatrix,
    n: usize,
    m: usize,
    tol: f64,
) -> Result<RecoveredFactors> {
    if n == 0 || m == 0 || mat.shape() != (n * m, n * m) {
        return Err(BcError::ShapeMismatch(format!(
            "expected a {0}x{0} matrix for factors {n} and {m}, got {1:?}",
            n * m,
            mat.shape()
        )));
    }
    let (a1, b1, r1) = recover_component(mat.c1(), n, m, tol, 1)?;
    let (a2, b2, r2) = recover_component(mat.c2(), n, m, tol, 2)?;
    let (f1, f2) = mat.component_frobenius();
    for (residual, norm) in [(r1, f1), (r2, f2)] {
        if residual > tol * (1.0 + norm) {
            return Err(BcError::NotProduct { residual });
        }
    }
    Ok(RecoveredFactors {
        a: BicomplexMatrix::from_components(a1, a2)?,
        b: BicomplexMatrix::from_components(b1, b2)?,
        residual: (r1, r2),
    })
}

/// `½(E00 + E03 + E30 + E33)` in both components: the maximally entangled
/// two-qubit projector, which is not a tensor product.
pub fn bell_projector() -> BicomplexMatrix {
    let mut m = CMatrix::zeros(4, 4);
    for (r, c) in [(0, 0), (0, 3), (3, 0), (3, 3)] {
        m[(r, c)] = Complex64::new(0.5, 0.0);
    }
    BicomplexMatrix::from_complex(m)
}
