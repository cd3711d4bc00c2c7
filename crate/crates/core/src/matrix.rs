//! Bicomplex matrices and vectors.
//!
//! A matrix `A = 𝒜1 e1 + 𝒜2 e2` is stored by its two complex idempotent
//! components. The cartesian form `A = A1 + j A2` is a conversion:
//!
//! ```text
//! A1 = (𝒜1 + 𝒜2)/2,   A2 = -(i/2)(𝒜2 - 𝒜1),   𝒜1 = A1 - i A2,   𝒜2 = A1 + i A2.
//! ```

use num_complex::Complex64;

use crate::error::{BcError, Result};
use crate::linalg::{self, CMatrix, CVector};
use crate::scalar::{BicomplexScalar, HyperbolicScalar};

const I: Complex64 = Complex64::new(0.0, 1.0);
const HALF: Complex64 = Complex64::new(0.5, 0.0);

/// How to compute a bicomplex inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InverseMethod {
    /// Invert each idempotent component.
    Componentwise,
    /// Build `Ã1 = ½(𝒜1⁻¹ + 𝒜2⁻¹)`, `Ã2 = -(i/2)(𝒜2⁻¹ - 𝒜1⁻¹)` from the
    /// cartesian parts and return `Ã1 + j Ã2`.
    Cartesian,
}

#[derive(Clone, Debug, PartialEq)]
pub struct BicomplexMatrix {
    c1: CMatrix,
    c2: CMatrix,
}

impl BicomplexMatrix {
    /// Builds `c1 e1 + c2 e2`.
    pub fn from_components(c1: CMatrix, c2: CMatrix) -> Result<Self> {
        if c1.shape() != c2.shape() {
            return Err(BcError::ShapeMismatch(format!(
                "idempotent components {:?} and {:?}",
                c1.shape(),
                c2.shape()
            )));
        }
        Ok(Self { c1, c2 })
    }

    /// Builds `a1 + j a2` from its cartesian parts over `C(i)`.
    pub fn from_cartesian(a1: &CMatrix, a2: &CMatrix) -> Result<Self> {
        if a1.shape() != a2.shape() {
            return Err(BcError::ShapeMismatch(format!(
                "cartesian parts {:?} and {:?}",
                a1.shape(),
                a2.shape()
            )));
        }
        let ia2 = a2 * I;
        Ok(Self {
            c1: a1 - &ia2,
            c2: a1 + &ia2,
        })
    }

    /// Embeds a complex matrix (both components equal).
    pub fn from_complex(m: CMatrix) -> Self {
        Self {
            c1: m.clone(),
            c2: m,
        }
    }

    pub fn from_fn(
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> BicomplexScalar,
    ) -> Self {
        let mut c1 = CMatrix::zeros(rows, cols);
        let mut c2 = CMatrix::zeros(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                let z = f(r, c);
                c1[(r, c)] = z.l1;
                c2[(r, c)] = z.l2;
            }
        }
        Self { c1, c2 }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            c1: CMatrix::zeros(rows, cols),
            c2: CMatrix::zeros(rows, cols),
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_complex(CMatrix::identity(n, n))
    }

    /// `z * I_n`.
    pub fn scalar_identity(n: usize, z: BicomplexScalar) -> Self {
        Self::identity(n).scale(z)
    }

    pub fn rows(&self) -> usize {
        self.c1.nrows()
    }

    pub fn cols(&self) -> usize {
        self.c1.ncols()
    }

    pub fn shape(&self) -> (usize, usize) {
        self.c1.shape()
    }

    pub fn is_square(&self) -> bool {
        self.rows() == self.cols()
    }

    pub fn c1(&self) -> &CMatrix {
        &self.c1
    }

    pub fn c2(&self) -> &CMatrix {
        &self.c2
    }

    /// Idempotent component `ell` (1 or 2).
    pub fn component(&self, ell: usize) -> &CMatrix {
        match ell {
            1 => &self.c1,
            2 => &self.c2,
            _ => panic!("idempotent component index must be 1 or 2, got {ell}"),
        }
    }

    pub fn into_components(self) -> (CMatrix, CMatrix) {
        (self.c1, self.c2)
    }

    /// Cartesian parts `(A1, A2)` with `A = A1 + j A2`.
    pub fn to_cartesian(&self) -> (CMatrix, CMatrix) {
        let a1 = (&self.c1 + &self.c2) * HALF;
        let a2 = (&self.c2 - &self.c1) * (-I * 0.5);
        (a1, a2)
    }

    pub fn get(&self, r: usize, c: usize) -> BicomplexScalar {
        BicomplexScalar::idempotent(self.c1[(r, c)], self.c2[(r, c)])
    }

    pub fn set(&mut self, r: usize, c: usize, z: BicomplexScalar) {
        self.c1[(r, c)] = z.l1;
        self.c2[(r, c)] = z.l2;
    }

    /// Applies a complex map to each component.
    pub fn map_components(&self, mut f: impl FnMut(&CMatrix) -> CMatrix) -> Self {
        Self {
            c1: f(&self.c1),
            c2: f(&self.c2),
        }
    }

    fn check_same_shape(&self, other: &Self, what: &str) -> Result<()> {
        if self.shape() != other.shape() {
            return Err(BcError::ShapeMismatch(format!(
                "{what}: {:?} vs {:?}",
                self.shape(),
                other.shape()
            )));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other, "addition")?;
        Ok(Self {
            c1: &self.c1 + &other.c1,
            c2: &self.c2 + &other.c2,
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other, "subtraction")?;
        Ok(Self {
            c1: &self.c1 - &other.c1,
            c2: &self.c2 - &other.c2,
        })
    }

    pub fn matmul(&self, other: &Self) -> Result<Self> {
        if self.cols() != other.rows() {
            return Err(BcError::ShapeMismatch(format!(
                "product of {:?} and {:?}",
                self.shape(),
                other.shape()
            )));
        }
        Ok(Self {
            c1: &self.c1 * &other.c1,
            c2: &self.c2 * &other.c2,
        })
    }

    pub fn matvec(&self, x: &BicomplexVector) -> Result<BicomplexVector> {
        if self.cols() != x.len() {
            return Err(BcError::ShapeMismatch(format!(
                "{:?} matrix times vector of length {}",
                self.shape(),
                x.len()
            )));
        }
        Ok(BicomplexVector {
            v1: &self.c1 * &x.v1,
            v2: &self.c2 * &x.v2,
        })
    }

    pub fn scale(&self, z: BicomplexScalar) -> Self {
        Self {
            c1: &self.c1 * z.l1,
            c2: &self.c2 * z.l2,
        }
    }

    /// `(A^*)^t`: conjugate transpose of each idempotent component.
    pub fn star_transpose(&self) -> Self {
        Self {
            c1: self.c1.adjoint(),
            c2: self.c2.adjoint(),
        }
    }

    pub fn transpose(&self) -> Self {
        Self {
            c1: self.c1.transpose(),
            c2: self.c2.transpose(),
        }
    }

    pub fn trace(&self) -> Result<BicomplexScalar> {
        self.require_square()?;
        Ok(BicomplexScalar::idempotent(
            linalg::trace(&self.c1),
            linalg::trace(&self.c2),
        ))
    }

    pub(crate) fn require_square(&self) -> Result<()> {
        if !self.is_square() {
            return Err(BcError::NotSquare {
                rows: self.rows(),
                cols: self.cols(),
            });
        }
        Ok(())
    }

    pub fn inverse(&self, method: InverseMethod) -> Result<Self> {
        self.require_square()?;
        match method {
            InverseMethod::Componentwise => {
                let c1 = linalg::inverse(&self.c1).ok_or(BcError::Singular { component: 1 })?;
                let c2 = linalg::inverse(&self.c2).ok_or(BcError::Singular { component: 2 })?;
                Ok(Self { c1, c2 })
            }
            InverseMethod::Cartesian => {
                let (a1, a2) = self.to_cartesian();
                let ia2 = &a2 * I;
                let inv1 =
                    linalg::inverse(&(&a1 - &ia2)).ok_or(BcError::Singular { component: 1 })?;
                let inv2 =
                    linalg::inverse(&(&a1 + &ia2)).ok_or(BcError::Singular { component: 2 })?;
                let t1 = (&inv1 + &inv2) * HALF;
                let t2 = (&inv2 - &inv1) * (-I * 0.5);
                Self::from_cartesian(&t1, &t2)
            }
        }
    }

    /// Frobenius norm of each idempotent component.
    pub fn component_frobenius(&self) -> (f64, f64) {
        (linalg::frobenius(&self.c1), linalg::frobenius(&self.c2))
    }

    /// Euclidean (Frobenius) norm of the matrix viewed as a real array of
    /// cartesian coefficients.
    pub fn frobenius(&self) -> f64 {
        let (f1, f2) = self.component_frobenius();
        (0.5 * (f1 * f1 + f2 * f2)).sqrt()
    }

    /// Largest entrywise idempotent-component distance.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!(self.shape(), other.shape(), "shape mismatch in comparison");
        linalg::max_abs_diff(&self.c1, &other.c1).max(linalg::max_abs_diff(&self.c2, &other.c2))
    }

    /// True when both components are real matrices within `tol`.
    pub fn is_hyperbolic(&self, tol: f64) -> bool {
        self.c1
            .iter()
            .chain(self.c2.iter())
            .all(|z| z.im.abs() <= tol)
    }

    /// Column `c` as a vector.
    pub fn column(&self, c: usize) -> BicomplexVector {
        BicomplexVector {
            v1: self.c1.column(c).into_owned(),
            v2: self.c2.column(c).into_owned(),
        }
    }
}

/// A vector of `BC^n`, stored by idempotent components.
#[derive(Clone, Debug, PartialEq)]
pub struct BicomplexVector {
    v1: CVector,
    v2: CVector,
}

impl BicomplexVector {
    pub fn from_components(v1: CVector, v2: CVector) -> Result<Self> {
        if v1.len() != v2.len() {
            return Err(BcError::ShapeMismatch(format!(
                "vector components of length {} and {}",
                v1.len(),
                v2.len()
            )));
        }
        Ok(Self { v1, v2 })
    }

    pub fn from_scalars(entries: &[BicomplexScalar]) -> Self {
        Self {
            v1: CVector::from_iterator(entries.len(), entries.iter().map(|z| z.l1)),
            v2: CVector::from_iterator(entries.len(), entries.iter().map(|z| z.l2)),
        }
    }

    pub fn zeros(n: usize) -> Self {
        Self {
            v1: CVector::zeros(n),
            v2: CVector::zeros(n),
        }
    }

    pub fn len(&self) -> usize {
        self.v1.len()
    }

    pub fn is_empty(&self) -> bool {
        self.v1.is_empty()
    }

    pub fn v1(&self) -> &CVector {
        &self.v1
    }

    pub fn v2(&self) -> &CVector {
        &self.v2
    }

    pub fn component(&self, ell: usize) -> &CVector {
        match ell {
            1 => &self.v1,
            2 => &self.v2,
            _ => panic!("idempotent component index must be 1 or 2, got {ell}"),
        }
    }

    pub fn get(&self, k: usize) -> BicomplexScalar {
        BicomplexScalar::idempotent(self.v1[k], self.v2[k])
    }

    /// As an `n x 1` matrix.
    pub fn to_column(&self) -> BicomplexMatrix {
        BicomplexMatrix {
            c1: CMatrix::from_column_slice(self.len(), 1, self.v1.as_slice()),
            c2: CMatrix::from_column_slice(self.len(), 1, self.v2.as_slice()),
        }
    }

    /// `a a^{*t}`.
    pub fn outer_star(&self) -> BicomplexMatrix {
        BicomplexMatrix {
            c1: &self.v1 * self.v1.adjoint(),
            c2: &self.v2 * self.v2.adjoint(),
        }
    }

    /// The hyperbolic-valued inner product
    /// `⟨X, Y⟩ = ⟨X1, Y1⟩ e1 + ⟨X2, Y2⟩ e2`, conjugate-linear in `X`.
    ///
    /// Each component is a complex Hermitian inner product, so the value is
    /// bicomplex in general; it lies in `D+` when `X = Y`.
    pub fn d_inner_product(&self, other: &Self) -> Result<BicomplexScalar> {
        if self.len() != other.len() {
            return Err(BcError::ShapeMismatch(format!(
                "inner product of vectors of length {} and {}",
                self.len(),
                other.len()
            )));
        }
        Ok(BicomplexScalar::idempotent(
            self.v1.dotc(&other.v1),
            self.v2.dotc(&other.v2),
        ))
    }

    /// `‖X1‖ e1 + ‖X2‖ e2`.
    pub fn d_norm(&self) -> HyperbolicScalar {
        HyperbolicScalar::idempotent(self.v1.norm(), self.v2.norm())
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!(self.len(), other.len());
        self.v1
            .iter()
            .zip(other.v1.iter())
            .chain(self.v2.iter().zip(other.v2.iter()))
            .fold(0.0, |acc, (a, b)| acc.max((a - b).norm()))
    }
}
