//! Seeded random instances for tests, benchmarks and the CLI.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use num_complex::Complex64;

use crate::linalg::{self, CMatrix};
use crate::matrix::{BicomplexMatrix, BicomplexVector};
use crate::scalar::BicomplexScalar;

pub type BcRng = ChaCha8Rng;

pub fn rng_from_seed(seed: u64) -> BcRng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn complex<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

pub fn complex_matrix<R: Rng + ?Sized>(rng: &mut R, rows: usize, cols: usize) -> CMatrix {
    CMatrix::from_fn(rows, cols, |_, _| complex(rng))
}

pub fn scalar<R: Rng + ?Sized>(rng: &mut R) -> BicomplexScalar {
    BicomplexScalar::idempotent(complex(rng), complex(rng))
}

pub fn matrix<R: Rng + ?Sized>(rng: &mut R, rows: usize, cols: usize) -> BicomplexMatrix {
    BicomplexMatrix::from_components(
        complex_matrix(rng, rows, cols),
        complex_matrix(rng, rows, cols),
    )
    .expect("components share a shape")
}

pub fn vector<R: Rng + ?Sized>(rng: &mut R, n: usize) -> BicomplexVector {
    let entries: Vec<_> = (0..n).map(|_| scalar(rng)).collect();
    BicomplexVector::from_scalars(&entries)
}

/// A square matrix whose components are diagonally shifted Gaussians, so both
/// are comfortably invertible.
pub fn well_conditioned<R: Rng + ?Sized>(rng: &mut R, n: usize) -> BicomplexMatrix {
    let shift = Complex64::new(3.0 * (n as f64).sqrt() + 1.0, 0.0);
    let mut shifted = || complex_matrix(rng, n, n) + CMatrix::identity(n, n) * shift;
    let c1 = shifted();
    let c2 = shifted();
    BicomplexMatrix::from_components(c1, c2).expect("components share a shape")
}

/// Haar-ish unitary from the QR factor of a complex Gaussian matrix.
pub fn unitary<R: Rng + ?Sized>(rng: &mut R, n: usize) -> CMatrix {
    nalgebra::QR::new(complex_matrix(rng, n, n)).q()
}

/// Positive semidefinite complex matrix with unit trace.
pub fn complex_state<R: Rng + ?Sized>(rng: &mut R, n: usize) -> CMatrix {
    let g = complex_matrix(rng, n, n);
    let p = &g * g.adjoint();
    let tr = linalg::trace(&p);
    p / tr
}

/// Bicomplex state: both components are complex states.
pub fn state<R: Rng + ?Sized>(rng: &mut R, n: usize) -> BicomplexMatrix {
    let c1 = complex_state(rng, n);
    let c2 = complex_state(rng, n);
    BicomplexMatrix::from_components(c1, c2).expect("components share a shape")
}

/// `*`-Hermitian matrix with a prescribed component spectrum.
pub fn with_spectra<R: Rng + ?Sized>(
    rng: &mut R,
    spectrum1: &[f64],
    spectrum2: &[f64],
) -> BicomplexMatrix {
    let build = |rng: &mut R, spectrum: &[f64]| {
        let n = spectrum.len();
        let u = unitary(rng, n);
        let d = CMatrix::from_diagonal(&nalgebra::DVector::from_iterator(
            n,
            spectrum.iter().map(|&v| Complex64::new(v, 0.0)),
        ));
        linalg::hermitian_part(&(&u * d * u.adjoint()))
    };
    let c1 = build(rng, spectrum1);
    let c2 = build(rng, spectrum2);
    BicomplexMatrix::from_components(c1, c2).expect("spectra must have equal length")
}
