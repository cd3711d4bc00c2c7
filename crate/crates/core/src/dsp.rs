//! Tensor-factored matrix-vector products.
//!
//! For `C = A_s ⊗_j B_r` acting on `n = r s` inputs,
//!
//! ```text
//! Y = C X = P_{n,s} (I_r ⊗ A_s) P_{n,r} (I_s ⊗ B_r) X,
//! ```
//!
//! which costs `s r² + r s²` multiplications per idempotent component instead
//! of `(r s)²`. `P_{n,s}` is the stride permutation with
//! `P_{n,s}(w ⊗ u) = u ⊗ w` for `u` of length `s`.

use num_complex::Complex64;

use crate::error::{BcError, Result};
use crate::linalg::{CMatrix, CVector};
use crate::matrix::{BicomplexMatrix, BicomplexVector};
use crate::tensor;

/// Stride permutation `P_{n,s}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StridePermutation {
    n: usize,
    s: usize,
    /// `out[k] = in[source[k]]`.
    source: Vec<usize>,
}

impl StridePermutation {
    pub fn new(n: usize, s: usize) -> Result<Self> {
        if s == 0 || !n.is_multiple_of(s) {
            return Err(BcError::BadFactorization { n, s });
        }
        let r = n / s;
        // input index of w ⊗ u is iw*s + iu, output index of u ⊗ w is iu*r + iw
        let mut source = vec![0; n];
        for iw in 0..r {
            for iu in 0..s {
                source[iu * r + iw] = iw * s + iu;
            }
        }
        Ok(Self { n, s, source })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn s(&self) -> usize {
        self.s
    }

    /// `out[k] = x[source[k]]`.
    pub fn source_indices(&self) -> &[usize] {
        &self.source
    }

    pub fn apply<T: Copy>(&self, x: &[T]) -> Vec<T> {
        assert_eq!(x.len(), self.n, "permutation length mismatch");
        self.source.iter().map(|&k| x[k]).collect()
    }

    pub fn apply_vector(&self, x: &BicomplexVector) -> BicomplexVector {
        let p = |v: &CVector| CVector::from_vec(self.apply(v.as_slice()));
        BicomplexVector::from_components(p(x.v1()), p(x.v2())).expect("same length")
    }
}

/// Complex multiplication and addition counts per idempotent component.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct OpCounter {
    pub mults: [u64; 2],
    pub adds: [u64; 2],
}

impl OpCounter {
    pub fn new() -> Self {
        Self::default()
    }

    fn record_matvec(&mut self, ell: usize, rows: usize, cols: usize) {
        self.mults[ell - 1] += (rows * cols) as u64;
        self.adds[ell - 1] += (rows * cols.saturating_sub(1)) as u64;
    }
}

/// `y = m x` with every product counted, no zero or identity skipping.
fn counted_matvec(
    m: &CMatrix,
    x: &[Complex64],
    counter: &mut OpCounter,
    ell: usize,
) -> Vec<Complex64> {
    counter.record_matvec(ell, m.nrows(), m.ncols());
    (0..m.nrows())
        .map(|r| (0..m.ncols()).map(|c| m[(r, c)] * x[c]).sum())
        .collect()
}

/// `(I_count ⊗ m) x`: applies `m` to consecutive blocks of `x`.
fn block_diagonal_apply(
    m: &CMatrix,
    count: usize,
    x: &[Complex64],
    counter: &mut OpCounter,
    ell: usize,
) -> Vec<Complex64> {
    let size = m.ncols();
    (0..count)
        .flat_map(|b| counted_matvec(m, &x[b * size..(b + 1) * size], counter, ell))
        .collect()
}

fn check_factors(
    a: &BicomplexMatrix,
    b: &BicomplexMatrix,
    x: &BicomplexVector,
) -> Result<(usize, usize)> {
    if !a.is_square() || !b.is_square() {
        return Err(BcError::ShapeMismatch(format!(
            "factors must be square, got {:?} and {:?}",
            a.shape(),
            b.shape()
        )));
    }
    let (s, r) = (a.rows(), b.rows());
    if s * r != x.len() {
        return Err(BcError::ShapeMismatch(format!(
            "input of length {} for factors of size {s} and {r}",
            x.len()
        )));
    }
    Ok((s, r))
}

/// `(A_s ⊗_j B_r) X` through the factored stride-permutation identity.
pub fn apply_factored(
    a: &BicomplexMatrix,
    b: &BicomplexMatrix,
    x: &BicomplexVector,
    counter: &mut OpCounter,
) -> Result<BicomplexVector> {
    let (s, r) = check_factors(a, b, x)?;
    let n = s * r;
    let p_s = StridePermutation::new(n, s)?;
    let p_r = StridePermutation::new(n, r)?;
    let mut run = |ell: usize| -> CVector {
        let xs = x.component(ell).as_slice();
        let t = block_diagonal_apply(b.component(ell), s, xs, counter, ell);
        let t = p_r.apply(&t);
        let t = block_diagonal_apply(a.component(ell), r, &t, counter, ell);
        CVector::from_vec(p_s.apply(&t))
    };
    let y1 = run(1);
    let y2 = run(2);
    BicomplexVector::from_components(y1, y2)
}

/// `(A_s ⊗_j B_r) X` by materialising the tensor product.
pub fn apply_direct(
    a: &BicomplexMatrix,
    b: &BicomplexMatrix,
    x: &BicomplexVector,
    counter: &mut OpCounter,
) -> Result<BicomplexVector> {
    check_factors(a, b, x)?;
    let c = tensor::tensor_idempotent(a, b);
    let mut run = |ell: usize| {
        CVector::from_vec(counted_matvec(
            c.component(ell),
            x.component(ell).as_slice(),
            counter,
            ell,
        ))
    };
    let y1 = run(1);
    let y2 = run(2);
    BicomplexVector::from_components(y1, y2)
}
