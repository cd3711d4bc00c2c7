//! Bicomplex and hyperbolic numerical linear algebra.
//!
//! Bicomplex numbers `BC = C(i) + j C(i)` split into two complex idempotent
//! components, `Z = λ1 e1 + λ2 e2`. Every structure in this crate is stored in
//! that form, so matrix arithmetic, positivity, tensor products and linear maps
//! all reduce to a pair of independent complex problems.
//!
//! * [`scalar`]: bicomplex and hyperbolic numbers, conjugations, norms, `D+` order
//! * [`matrix`]: bicomplex matrices and vectors, `*`-transpose, trace, inverses
//! * [`positivity`]: hyperbolic positivity tests, triangular and rank-one factorizations, states
//! * [`tensor`]: the bicomplex tensor product and recovery of tensor factors
//! * [`choi`]: Kraus sets, Choi matrices and completely positive maps
//! * [`dsp`]: stride permutations and tensor-factored matrix-vector products
//! * [`io`], [`cli`]: JSON formats and the `bicomplex` command-line tool
//!
//! ```
//! use bicomplex::{BicomplexMatrix, BicomplexScalar, tensor};
//!
//! let a = BicomplexMatrix::scalar_identity(2, BicomplexScalar::E1);
//! let b = BicomplexMatrix::identity(3);
//! let t = tensor::tensor_idempotent(&a, &b);
//! assert_eq!(t, tensor::tensor_cartesian(&a, &b));
//! assert_eq!(t.trace().unwrap(), BicomplexScalar::E1 * BicomplexScalar::real(6.0));
//! ```

pub mod choi;
pub mod cli;
pub mod dsp;
pub mod error;
pub mod io;
pub mod linalg;
pub mod matrix;
pub mod positivity;
pub mod random;
pub mod scalar;
pub mod tensor;

pub use choi::{map_from_kraus, KrausSet, MatrixMap};
pub use error::{BcError, Result};
pub use matrix::{BicomplexMatrix, BicomplexVector, InverseMethod};
pub use positivity::{EigenPairList, PositivityMethod};
pub use scalar::{BicomplexScalar, Conjugation, HyperbolicScalar};
