//! Bicomplex and hyperbolic scalars.
//!
//! A bicomplex number `Z = z1 + j z2` (with `z1, z2` in `C(i)`) is stored by its
//! idempotent components `Z = λ1 e1 + λ2 e2`, where
//!
//! ```text
//! λ1 = z1 - i z2,   λ2 = z1 + i z2,   e1 = (1 + k)/2,   e2 = (1 - k)/2.
//! ```
//!
//! Addition, multiplication and inversion act on `(λ1, λ2)` independently. The
//! cartesian coefficients `x1 + i x2 + j x3 + k x4` are a derived view.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::error::{BcError, Result};

/// Additive tolerance for `D+` membership and the hyperbolic partial order.
pub const ORDER_TOL: f64 = 1e-12;

/// Relative tolerance under which an idempotent component counts as zero.
pub const ZERO_DIVISOR_TOL: f64 = 1e-12;

const I: Complex64 = Complex64::new(0.0, 1.0);

/// A bicomplex number in idempotent coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Default)]
pub struct BicomplexScalar {
    pub l1: Complex64,
    pub l2: Complex64,
}

/// The three bicomplex conjugations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Conjugation {
    /// `z̄1 + j z̄2`: swaps and conjugates the idempotent components.
    Bar,
    /// `z1 - j z2`: swaps the idempotent components.
    Dagger,
    /// `z̄1 - j z̄2`: conjugates each idempotent component in place.
    Star,
}

impl BicomplexScalar {
    pub const ZERO: Self = Self::idempotent(Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0));
    pub const ONE: Self = Self::idempotent(Complex64::new(1.0, 0.0), Complex64::new(1.0, 0.0));
    pub const E1: Self = Self::idempotent(Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0));
    pub const E2: Self = Self::idempotent(Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0));
    pub const I: Self = Self::idempotent(I, I);
    pub const J: Self = Self::idempotent(Complex64::new(0.0, -1.0), Complex64::new(0.0, 1.0));
    pub const K: Self = Self::idempotent(Complex64::new(1.0, 0.0), Complex64::new(-1.0, 0.0));

    /// Builds `λ1 e1 + λ2 e2`.
    pub const fn idempotent(l1: Complex64, l2: Complex64) -> Self {
        Self { l1, l2 }
    }

    /// Builds `x1 + i x2 + j x3 + k x4`.
    pub fn from_cartesian(x1: f64, x2: f64, x3: f64, x4: f64) -> Self {
        Self {
            l1: Complex64::new(x1 + x4, x2 - x3),
            l2: Complex64::new(x1 - x4, x2 + x3),
        }
    }

    /// Builds `z1 + j z2` from its complex pair.
    pub fn from_complex_pair(z1: Complex64, z2: Complex64) -> Self {
        Self {
            l1: z1 - I * z2,
            l2: z1 + I * z2,
        }
    }

    /// Embeds a complex number of `C(i)`.
    pub fn complex(z: Complex64) -> Self {
        Self { l1: z, l2: z }
    }

    pub fn real(x: f64) -> Self {
        Self::complex(Complex64::new(x, 0.0))
    }

    /// Returns the idempotent components `(λ1, λ2)`.
    pub fn idempotent_split(&self) -> (Complex64, Complex64) {
        (self.l1, self.l2)
    }

    /// Inverse of [`Self::idempotent_split`].
    pub fn idempotent_join(l1: Complex64, l2: Complex64) -> Self {
        Self::idempotent(l1, l2)
    }

    /// Returns `(z1, z2)` with `Z = z1 + j z2`.
    pub fn complex_pair(&self) -> (Complex64, Complex64) {
        ((self.l1 + self.l2) * 0.5, I * (self.l1 - self.l2) * 0.5)
    }

    /// Returns the cartesian coefficients `[x1, x2, x3, x4]` of `1, i, j, k`.
    pub fn cartesian(&self) -> [f64; 4] {
        let (z1, z2) = self.complex_pair();
        [z1.re, z1.im, z2.re, z2.im]
    }

    pub fn component(&self, ell: usize) -> Complex64 {
        match ell {
            1 => self.l1,
            2 => self.l2,
            _ => panic!("idempotent component index must be 1 or 2, got {ell}"),
        }
    }

    pub fn conjugate(&self, kind: Conjugation) -> Self {
        match kind {
            Conjugation::Bar => Self::idempotent(self.l2.conj(), self.l1.conj()),
            Conjugation::Dagger => Self::idempotent(self.l2, self.l1),
            Conjugation::Star => Self::idempotent(self.l1.conj(), self.l2.conj()),
        }
    }

    pub fn star(&self) -> Self {
        self.conjugate(Conjugation::Star)
    }

    /// Multiplicative inverse. Fails when either idempotent component is within
    /// `1e-12 * (1 + ‖Z‖)` of zero.
    pub fn inverse(&self) -> Result<Self> {
        let tol = ZERO_DIVISOR_TOL * (1.0 + self.euclidean_norm());
        if self.l1.norm() <= tol {
            return Err(BcError::ZeroDivisor { component: 1 });
        }
        if self.l2.norm() <= tol {
            return Err(BcError::ZeroDivisor { component: 2 });
        }
        Ok(Self::idempotent(self.l1.inv(), self.l2.inv()))
    }

    /// Euclidean norm of `Z` seen as a vector of `R^4`, computed from the
    /// idempotent components: `(1/√2) √(|λ1|² + |λ2|²)`.
    pub fn euclidean_norm(&self) -> f64 {
        (0.5 * (self.l1.norm_sqr() + self.l2.norm_sqr())).sqrt()
    }

    /// Euclidean norm computed from the cartesian coefficients.
    pub fn euclidean_norm_cartesian(&self) -> f64 {
        self.cartesian().iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    /// Hyperbolic-valued norm `|λ1| e1 + |λ2| e2`.
    pub fn d_norm(&self) -> HyperbolicScalar {
        HyperbolicScalar::idempotent(self.l1.norm(), self.l2.norm())
    }

    /// Returns the hyperbolic number when both idempotent components are real
    /// within `tol`.
    pub fn as_hyperbolic(&self, tol: f64) -> Option<HyperbolicScalar> {
        (self.l1.im.abs() <= tol && self.l2.im.abs() <= tol)
            .then(|| HyperbolicScalar::idempotent(self.l1.re, self.l2.re))
    }

    /// Largest idempotent component modulus of `self - other`.
    pub fn max_component_distance(&self, other: &Self) -> f64 {
        (self.l1 - other.l1).norm().max((self.l2 - other.l2).norm())
    }
}

impl Add for BicomplexScalar {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::idempotent(self.l1 + rhs.l1, self.l2 + rhs.l2)
    }
}

impl Sub for BicomplexScalar {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::idempotent(self.l1 - rhs.l1, self.l2 - rhs.l2)
    }
}

impl Mul for BicomplexScalar {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self::idempotent(self.l1 * rhs.l1, self.l2 * rhs.l2)
    }
}

impl Mul<f64> for BicomplexScalar {
    type Output = Self;
    fn mul(self, rhs: f64) -> Self {
        Self::idempotent(self.l1 * rhs, self.l2 * rhs)
    }
}

impl Neg for BicomplexScalar {
    type Output = Self;
    fn neg(self) -> Self {
        Self::idempotent(-self.l1, -self.l2)
    }
}

impl From<HyperbolicScalar> for BicomplexScalar {
    fn from(h: HyperbolicScalar) -> Self {
        Self::idempotent(Complex64::new(h.s, 0.0), Complex64::new(h.t, 0.0))
    }
}

impl fmt::Display for BicomplexScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [x1, x2, x3, x4] = self.cartesian();
        write!(f, "{x1} + {x2}i + {x3}j + {x4}k")
    }
}

/// A hyperbolic number `x + k y`, stored as `s e1 + t e2` with `s = x + y`,
/// `t = x - y`.
#[derive(Clone, Copy, Debug, PartialEq, Default)]
pub struct HyperbolicScalar {
    pub s: f64,
    pub t: f64,
}

impl HyperbolicScalar {
    pub const ZERO: Self = Self::idempotent(0.0, 0.0);
    pub const ONE: Self = Self::idempotent(1.0, 1.0);
    pub const E1: Self = Self::idempotent(1.0, 0.0);
    pub const E2: Self = Self::idempotent(0.0, 1.0);
    pub const K: Self = Self::idempotent(1.0, -1.0);

    pub const fn idempotent(s: f64, t: f64) -> Self {
        Self { s, t }
    }

    pub fn from_xy(x: f64, y: f64) -> Self {
        Self { s: x + y, t: x - y }
    }

    pub fn real(x: f64) -> Self {
        Self { s: x, t: x }
    }

    pub fn x(&self) -> f64 {
        0.5 * (self.s + self.t)
    }

    pub fn y(&self) -> f64 {
        0.5 * (self.s - self.t)
    }

    /// Hyperbolic conjugate `x - k y`.
    pub fn diamond(&self) -> Self {
        Self {
            s: self.t,
            t: self.s,
        }
    }

    /// `x² - y²`, evaluated as `s·t`.
    pub fn modulus_sq(&self) -> f64 {
        self.s * self.t
    }

    /// `x² - y²`, evaluated from the cartesian coefficients.
    pub fn modulus_sq_cartesian(&self) -> f64 {
        let (x, y) = (self.x(), self.y());
        x * x - y * y
    }

    /// Membership in `D+ = { s e1 + t e2 : s, t >= 0 }` with boundary tolerance.
    pub fn is_nonnegative(&self) -> bool {
        self.s >= -ORDER_TOL && self.t >= -ORDER_TOL
    }

    /// The partial order `self ⪯ other` iff `other - self ∈ D+`.
    pub fn d_leq(&self, other: &Self) -> bool {
        (*other - *self).is_nonnegative()
    }
}

impl Add for HyperbolicScalar {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::idempotent(self.s + rhs.s, self.t + rhs.t)
    }
}

impl Sub for HyperbolicScalar {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::idempotent(self.s - rhs.s, self.t - rhs.t)
    }
}

impl Mul for HyperbolicScalar {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self::idempotent(self.s * rhs.s, self.t * rhs.t)
    }
}

impl fmt::Display for HyperbolicScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}k", self.x(), self.y())
    }
}
