//! Complex matrix kernels shared by both idempotent components.
//!
//! Everything bicomplex in this crate reduces to a pair of complex problems;
//! the routines here solve one such problem over `C(i)` with nalgebra.

use nalgebra::{Cholesky, DMatrix, DVector, Schur, SymmetricEigen, QR};
use num_complex::Complex64;

pub type CMatrix = DMatrix<Complex64>;
pub type CVector = DVector<Complex64>;

/// Relative singular-value threshold for invertibility.
pub const SINGULAR_TOL: f64 = 1e-10;

pub fn max_abs(m: &CMatrix) -> f64 {
    m.iter().fold(0.0, |acc, z| acc.max(z.norm()))
}

pub fn max_abs_diff(a: &CMatrix, b: &CMatrix) -> f64 {
    assert_eq!(a.shape(), b.shape());
    a.iter()
        .zip(b.iter())
        .fold(0.0, |acc, (x, y)| acc.max((x - y).norm()))
}

pub fn frobenius(m: &CMatrix) -> f64 {
    m.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

pub fn hermitian_part(m: &CMatrix) -> CMatrix {
    (m + m.adjoint()) * Complex64::new(0.5, 0.0)
}

/// Hermitian within `tol * (1 + max|m_ij|)`. Non-square input is never Hermitian.
pub fn is_hermitian(m: &CMatrix, tol: f64) -> bool {
    m.is_square() && max_abs_diff(m, &m.adjoint()) <= tol * (1.0 + max_abs(m))
}

/// Eigen-decomposition of the Hermitian part of `m`, eigenvalues ascending and
/// eigenvectors in the matching columns.
pub fn hermitian_eigen(m: &CMatrix) -> (Vec<f64>, CMatrix) {
    let n = m.nrows();
    if n == 0 {
        return (Vec::new(), CMatrix::zeros(0, 0));
    }
    let eig = SymmetricEigen::new(hermitian_part(m));
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
    let values = order.iter().map(|&k| eig.eigenvalues[k]).collect();
    let vectors = CMatrix::from_fn(n, n, |r, c| eig.eigenvectors[(r, order[c])]);
    (values, vectors)
}

pub fn spectral_radius_hermitian(values: &[f64]) -> f64 {
    values.iter().fold(0.0, |acc, v| acc.max(v.abs()))
}

/// Positive semidefinite: Hermitian within `tol` and every eigenvalue at least
/// `-tol * (1 + spectral radius)`.
pub fn is_psd(m: &CMatrix, tol: f64) -> bool {
    if !is_hermitian(m, tol) {
        return false;
    }
    let (values, _) = hermitian_eigen(m);
    let floor = -tol * (1.0 + spectral_radius_hermitian(&values));
    values.iter().all(|&v| v >= floor)
}

/// Eigenvalues of a general complex square matrix via the complex Schur form.
pub fn general_eigenvalues(m: &CMatrix) -> Vec<Complex64> {
    if m.nrows() == 0 {
        return Vec::new();
    }
    let schur = Schur::new(m.clone());
    let (_, t) = schur.unpack();
    t.diagonal().iter().copied().collect()
}

/// Singular values in descending order.
pub fn singular_values(m: &CMatrix) -> Vec<f64> {
    if m.is_empty() {
        return Vec::new();
    }
    let mut s: Vec<f64> = m.singular_values().iter().copied().collect();
    s.sort_by(|a, b| b.total_cmp(a));
    s
}

/// True when the smallest singular value exceeds
/// `SINGULAR_TOL * (largest singular value + 1)`.
pub fn is_well_conditioned(m: &CMatrix) -> bool {
    let s = singular_values(m);
    match (s.first(), s.last()) {
        (Some(&max), Some(&min)) => min > SINGULAR_TOL * (max + 1.0),
        _ => true,
    }
}

pub fn inverse(m: &CMatrix) -> Option<CMatrix> {
    if !m.is_square() || !is_well_conditioned(m) {
        return None;
    }
    m.clone().try_inverse()
}

/// Kronecker product with the row-major block layout
/// `(a ⊗ b)[i1*m1 + i2, j1*m2 + j2] = a[i1, j1] * b[i2, j2]`.
pub fn kron(a: &CMatrix, b: &CMatrix) -> CMatrix {
    a.kronecker(b)
}

/// Upper triangular `U` with `m = U^H U` for a positive semidefinite `m`.
///
/// Positive definite input goes through a plain Cholesky factorization. If that
/// fails or loses accuracy (semidefinite input), the factor is rebuilt from the
/// eigenvalue square root `B = Λ^{1/2} Q^H` and re-triangularised with a QR
/// step: `B = Q' R` gives `B^H B = R^H R`.
pub fn psd_upper_factor(m: &CMatrix) -> CMatrix {
    let h = hermitian_part(m);
    let scale = 1.0 + frobenius(&h);
    if let Some(chol) = Cholesky::new(h.clone()) {
        let u = chol.l().adjoint();
        if frobenius(&(u.adjoint() * &u - &h)) <= 1e-12 * scale {
            return u;
        }
    }
    let n = h.nrows();
    let (values, vectors) = hermitian_eigen(&h);
    let mut b = vectors.adjoint();
    for (r, &v) in values.iter().enumerate() {
        let root = Complex64::new(v.max(0.0).sqrt(), 0.0);
        for c in 0..n {
            b[(r, c)] *= root;
        }
    }
    QR::new(b).r()
}

pub fn unit_vector(n: usize, k: usize) -> CVector {
    let mut v = CVector::zeros(n);
    v[k] = Complex64::new(1.0, 0.0);
    v
}

/// Matrix unit `E_jk` of size `n x n`.
pub fn matrix_unit(n: usize, j: usize, k: usize) -> CMatrix {
    let mut e = CMatrix::zeros(n, n);
    e[(j, k)] = Complex64::new(1.0, 0.0);
    e
}

pub fn trace(m: &CMatrix) -> Complex64 {
    m.diagonal().iter().sum()
}

/// Rotates the phase of `v` so its largest-modulus entry is real and positive.
pub fn fix_phase(v: &mut CVector) {
    let pivot = v
        .iter()
        .copied()
        .max_by(|a, b| a.norm().total_cmp(&b.norm()))
        .unwrap_or_default();
    if pivot.norm() > 0.0 {
        let phase = pivot.conj() / pivot.norm();
        v.iter_mut().for_each(|z| *z *= phase);
    }
}
