//! Linear maps `BC^{n x n} -> BC^{m x m}`, their Choi matrices and Kraus forms.
//!
//! A bicomplex linear map splits as `φ(A) = φ1(𝒜1) e1 + φ2(𝒜2) e2`. It is
//! completely positive exactly when `φ1` and `φ2` are, and then admits a Kraus
//! form `φ(A) = Σ V_i A (V_i^*)^t` with `V_i = 𝒰_i e1 + 𝒱_i e2`.

use num_complex::Complex64;

use crate::error::{BcError, Result};
use crate::linalg::{self, CMatrix};
use crate::matrix::BicomplexMatrix;
use crate::tensor;

/// Kraus operators `V_1..V_r`, each `m x n`.
#[derive(Clone, Debug, PartialEq)]
pub struct KrausSet {
    n: usize,
    m: usize,
    operators: Vec<BicomplexMatrix>,
}

impl KrausSet {
    pub fn new(operators: Vec<BicomplexMatrix>) -> Result<Self> {
        let first = operators.first().ok_or_else(|| {
            BcError::ShapeMismatch("a Kraus set needs at least one operator".into())
        })?;
        let (m, n) = first.shape();
        if let Some(bad) = operators.iter().find(|op| op.shape() != (m, n)) {
            return Err(BcError::ShapeMismatch(format!(
                "Kraus operators of shapes {:?} and {:?}",
                (m, n),
                bad.shape()
            )));
        }
        Ok(Self { n, m, operators })
    }

    /// Input dimension.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Output dimension.
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn operators(&self) -> &[BicomplexMatrix] {
        &self.operators
    }

    pub fn len(&self) -> usize {
        self.operators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.operators.is_empty()
    }

    /// `Σ V_i A (V_i^*)^t` evaluated directly in bicomplex arithmetic.
    pub fn apply(&self, a: &BicomplexMatrix) -> Result<BicomplexMatrix> {
        if a.shape() != (self.n, self.n) {
            return Err(BcError::ShapeMismatch(format!(
                "map expects {0}x{0} input, got {1:?}",
                self.n,
                a.shape()
            )));
        }
        self.operators
            .iter()
            .try_fold(BicomplexMatrix::zeros(self.m, self.m), |acc, v| {
                acc.checked_add(&v.matmul(a)?.matmul(&v.star_transpose())?)
            })
    }

    /// `{V_i ⊗_j W_k}` for all pairs.
    pub fn tensor(&self, other: &KrausSet) -> KrausSet {
        let operators = self
            .operators
            .iter()
            .flat_map(|v| {
                other
                    .operators
                    .iter()
                    .map(move |w| tensor::tensor_idempotent(v, w))
            })
            .collect();
        KrausSet {
            n: self.n * other.n,
            m: self.m * other.m,
            operators,
        }
    }

    /// `Σ (V_i^*)^t V_i`, which equals `I_n` for trace-preserving sets.
    pub fn completeness(&self) -> BicomplexMatrix {
        self.operators
            .iter()
            .fold(BicomplexMatrix::zeros(self.n, self.n), |acc, v| {
                acc.checked_add(&v.star_transpose().matmul(v).expect("square"))
                    .expect("same shape")
            })
    }
}

/// A linear map stored by the images of the matrix units `E_jk`, one list per
/// idempotent component, in row-major `(j, k)` order.
#[derive(Clone, Debug, PartialEq)]
pub struct MatrixMap {
    n: usize,
    m: usize,
    images1: Vec<CMatrix>,
    images2: Vec<CMatrix>,
}

impl MatrixMap {
    pub fn from_unit_images(
        n: usize,
        m: usize,
        images1: Vec<CMatrix>,
        images2: Vec<CMatrix>,
    ) -> Result<Self> {
        for (ell, images) in [(1, &images1), (2, &images2)] {
            if images.len() != n * n {
                return Err(BcError::ShapeMismatch(format!(
                    "component {ell}: expected {} unit images, got {}",
                    n * n,
                    images.len()
                )));
            }
            if let Some(bad) = images.iter().find(|im| im.shape() != (m, m)) {
                return Err(BcError::ShapeMismatch(format!(
                    "component {ell}: unit image of shape {:?}, expected {m}x{m}",
                    bad.shape()
                )));
            }
        }
        Ok(Self {
            n,
            m,
            images1,
            images2,
        })
    }

    /// Builds a map from a function on complex matrix units, applied to both
    /// components: `f(ell, j, k)` returns `φℓ(E_jk)`.
    pub fn from_unit_fn(
        n: usize,
        m: usize,
        mut f: impl FnMut(usize, usize, usize) -> CMatrix,
    ) -> Result<Self> {
        let mut images = |ell| {
            (0..n)
                .flat_map(|j| (0..n).map(move |k| (j, k)))
                .map(|(j, k)| f(ell, j, k))
                .collect::<Vec<_>>()
        };
        let images1 = images(1);
        let images2 = images(2);
        Self::from_unit_images(n, m, images1, images2)
    }

    pub fn identity(n: usize) -> Self {
        Self::from_unit_fn(n, n, |_, j, k| linalg::matrix_unit(n, j, k)).expect("consistent shapes")
    }

    /// Transpose in each component: `E_jk -> E_kj`.
    pub fn transpose(n: usize) -> Self {
        Self::from_unit_fn(n, n, |_, j, k| linalg::matrix_unit(n, k, j)).expect("consistent shapes")
    }

    /// `A -> Tr(A) I_n / n` in each component.
    pub fn depolarizing(n: usize) -> Self {
        let scale = Complex64::new(1.0 / n as f64, 0.0);
        Self::from_unit_fn(n, n, |_, j, k| {
            if j == k {
                CMatrix::identity(n, n) * scale
            } else {
                CMatrix::zeros(n, n)
            }
        })
        .expect("consistent shapes")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Unit images of component `ell`.
    pub fn unit_images(&self, ell: usize) -> &[CMatrix] {
        match ell {
            1 => &self.images1,
            2 => &self.images2,
            _ => panic!("idempotent component index must be 1 or 2, got {ell}"),
        }
    }

    /// `φ(E_jk)` as a bicomplex matrix.
    pub fn unit_image(&self, j: usize, k: usize) -> BicomplexMatrix {
        let idx = j * self.n + k;
        BicomplexMatrix::from_components(self.images1[idx].clone(), self.images2[idx].clone())
            .expect("unit images share a shape")
    }

    fn apply_component(&self, ell: usize, a: &CMatrix) -> CMatrix {
        let images = self.unit_images(ell);
        let mut out = CMatrix::zeros(self.m, self.m);
        for j in 0..self.n {
            for k in 0..self.n {
                let coeff = a[(j, k)];
                if coeff != Complex64::new(0.0, 0.0) {
                    out += &images[j * self.n + k] * coeff;
                }
            }
        }
        out
    }

    /// Linear extension over the unit images, per component.
    pub fn apply(&self, a: &BicomplexMatrix) -> Result<BicomplexMatrix> {
        if a.shape() != (self.n, self.n) {
            return Err(BcError::ShapeMismatch(format!(
                "map expects {0}x{0} input, got {1:?}",
                self.n,
                a.shape()
            )));
        }
        BicomplexMatrix::from_components(
            self.apply_component(1, a.c1()),
            self.apply_component(2, a.c2()),
        )
    }

    /// `φ_N`: applies the map to every `n x n` block of an `Nn x Nn` matrix.
    pub fn block_apply(&self, blocks: &BicomplexMatrix) -> Result<BicomplexMatrix> {
        let (rows, cols) = blocks.shape();
        if rows != cols || rows % self.n != 0 {
            return Err(BcError::ShapeMismatch(format!(
                "block input {:?} is not a square array of {}x{} blocks",
                blocks.shape(),
                self.n,
                self.n
            )));
        }
        let big_n = rows / self.n;
        let (n, m) = (self.n, self.m);
        let per_component = |ell: usize| {
            let src = blocks.component(ell);
            let mut out = CMatrix::zeros(big_n * m, big_n * m);
            for bj in 0..big_n {
                for bk in 0..big_n {
                    let block = src.view((bj * n, bk * n), (n, n)).into_owned();
                    out.view_mut((bj * m, bk * m), (m, m))
                        .copy_from(&self.apply_component(ell, &block));
                }
            }
            out
        };
        BicomplexMatrix::from_components(per_component(1), per_component(2))
    }

    /// `Σ_jk E_jk ⊗ φℓ(E_jk)` in each component (an `nm x nm` matrix).
    pub fn choi_matrix(&self) -> BicomplexMatrix {
        let (n, m) = (self.n, self.m);
        let per_component = |ell: usize| {
            let images = self.unit_images(ell);
            let mut out = CMatrix::zeros(n * m, n * m);
            for j in 0..n {
                for k in 0..n {
                    out.view_mut((j * m, k * m), (m, m))
                        .copy_from(&images[j * n + k]);
                }
            }
            out
        };
        BicomplexMatrix::from_components(per_component(1), per_component(2)).expect("same shape")
    }

    /// Both component Choi matrices are Hermitian and positive semidefinite.
    pub fn is_completely_positive(&self, tol: f64) -> bool {
        let choi = self.choi_matrix();
        linalg::is_psd(choi.c1(), tol) && linalg::is_psd(choi.c2(), tol)
    }

    /// Kraus operators from the eigen-decomposition of each component's Choi
    /// matrix. An eigenvector `v` (eigenvalue `μ`) becomes the operator with
    /// entries `K[a, j] = √μ v[j*m + a]`; the shorter component list is padded
    /// with zero operators.
    pub fn kraus_decomposition(&self, tol: f64) -> Result<KrausSet> {
        if !self.is_completely_positive(tol) {
            return Err(BcError::NotCP);
        }
        let (n, m) = (self.n, self.m);
        let choi = self.choi_matrix();
        let operators_of = |c: &CMatrix| -> Vec<CMatrix> {
            let (values, vectors) = linalg::hermitian_eigen(c);
            let cutoff = tol * (1.0 + linalg::spectral_radius_hermitian(&values));
            values
                .iter()
                .enumerate()
                .rev()
                .filter(|(_, &v)| v > cutoff)
                .map(|(idx, &v)| {
                    let mut q = vectors.column(idx).into_owned();
                    linalg::fix_phase(&mut q);
                    let root = v.sqrt();
                    CMatrix::from_fn(m, n, |a, j| q[j * m + a] * root)
                })
                .collect()
        };
        let us = operators_of(choi.c1());
        let vs = operators_of(choi.c2());
        let r = us.len().max(vs.len()).max(1);
        let pick = |list: &[CMatrix], k: usize| {
            list.get(k).cloned().unwrap_or_else(|| CMatrix::zeros(m, n))
        };
        let operators = (0..r)
            .map(|k| BicomplexMatrix::from_components(pick(&us, k), pick(&vs, k)))
            .collect::<Result<Vec<_>>>()?;
        KrausSet::new(operators)
    }

    /// `Tr φℓ(E_jk) = δ_jk` in both components.
    pub fn is_trace_preserving(&self, tol: f64) -> bool {
        [1, 2].iter().all(|&ell| {
            self.unit_images(ell)
                .iter()
                .enumerate()
                .all(|(idx, image)| {
                    let (j, k) = (idx / self.n, idx % self.n);
                    let expected = if j == k { 1.0 } else { 0.0 };
                    (linalg::trace(image) - expected).norm() <= tol
                })
        })
    }

    /// The product map on `BC^{n1 n2 x n1 n2}`:
    /// `E_{(j1,j2),(k1,k2)} -> φℓ(E_{j1 k1}) ⊗ ψℓ(F_{j2 k2})`.
    pub fn tensor(&self, other: &MatrixMap) -> MatrixMap {
        let (n1, n2) = (self.n, other.n);
        let n = n1 * n2;
        let per_component = |ell: usize| {
            let lhs = self.unit_images(ell);
            let rhs = other.unit_images(ell);
            let mut images = Vec::with_capacity(n * n);
            for row in 0..n {
                for col in 0..n {
                    let (j1, j2) = (row / n2, row % n2);
                    let (k1, k2) = (col / n2, col % n2);
                    images.push(linalg::kron(&lhs[j1 * n1 + k1], &rhs[j2 * n2 + k2]));
                }
            }
            images
        };
        MatrixMap {
            n,
            m: self.m * other.m,
            images1: per_component(1),
            images2: per_component(2),
        }
    }

    /// `next ∘ self`, by pushing each unit image through `next`.
    pub fn then(&self, next: &MatrixMap) -> Result<MatrixMap> {
        if next.n != self.m {
            return Err(BcError::ShapeMismatch(format!(
                "cannot compose a map into {}x{} with a map from {}x{}",
                self.m, self.m, next.n, next.n
            )));
        }
        let images1 = self
            .images1
            .iter()
            .map(|im| next.apply_component(1, im))
            .collect();
        let images2 = self
            .images2
            .iter()
            .map(|im| next.apply_component(2, im))
            .collect();
        Self::from_unit_images(self.n, next.m, images1, images2)
    }

    /// Largest entrywise difference between the unit images of two maps.
    pub fn max_abs_diff(&self, other: &MatrixMap) -> f64 {
        assert_eq!((self.n, self.m), (other.n, other.m), "maps differ in shape");
        self.images1
            .iter()
            .zip(&other.images1)
            .chain(self.images2.iter().zip(&other.images2))
            .fold(0.0, |acc, (a, b)| acc.max(linalg::max_abs_diff(a, b)))
    }
}

impl From<&KrausSet> for MatrixMap {
    fn from(kraus: &KrausSet) -> Self {
        map_from_kraus(kraus)
    }
}

/// Unit images of `A -> Σ V_i A (V_i^*)^t`.
pub fn map_from_kraus(kraus: &KrausSet) -> MatrixMap {
    let (n, m) = (kraus.n, kraus.m);
    MatrixMap::from_unit_fn(n, m, |ell, j, k| {
        // V E_jk V^H = (column j of V)(column k of V)^H
        kraus.operators.iter().fold(CMatrix::zeros(m, m), |acc, v| {
            let c = v.component(ell);
            acc + c.column(j) * c.column(k).adjoint()
        })
    })
    .expect("kraus operators share a shape")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::positivity::{is_hyperbolic_positive, PositivityMethod};
    use crate::random;
    use crate::scalar::BicomplexScalar as Bc;

    const TOL: f64 = 1e-10;

    fn raising() -> KrausSet {
        let v = BicomplexMatrix::from_fn(
            2,
            2,
            |r, c| if (r, c) == (0, 1) { Bc::ONE } else { Bc::ZERO },
        );
        KrausSet::new(vec![v]).unwrap()
    }

    fn unit(n: usize, j: usize, k: usize) -> BicomplexMatrix {
        BicomplexMatrix::from_complex(linalg::matrix_unit(n, j, k))
    }

    #[test]
    fn kraus_set_validation() {
        assert!(KrausSet::new(vec![]).is_err());
        assert!(KrausSet::new(vec![
            BicomplexMatrix::zeros(2, 3),
            BicomplexMatrix::zeros(3, 2)
        ])
        .is_err());
        let k = KrausSet::new(vec![BicomplexMatrix::zeros(2, 3)]).unwrap();
        assert_eq!((k.n(), k.m()), (3, 2));
    }

    #[test]
    fn map_from_kraus_examples() {
        let id = KrausSet::new(vec![BicomplexMatrix::identity(2)]).unwrap();
        assert_eq!(map_from_kraus(&id), MatrixMap::identity(2));

        let phi = map_from_kraus(&raising());
        assert_eq!(phi.unit_image(0, 0), BicomplexMatrix::zeros(2, 2));
        assert_eq!(phi.unit_image(1, 1), unit(2, 0, 0));
        assert_eq!(phi.apply(&unit(2, 1, 1)).unwrap(), unit(2, 0, 0));

        let e1 = KrausSet::new(vec![BicomplexMatrix::scalar_identity(2, Bc::E1)]).unwrap();
        let phi = map_from_kraus(&e1);
        let mut rng = random::rng_from_seed(1);
        let a = random::matrix(&mut rng, 2, 2);
        assert!(phi.apply(&a).unwrap().max_abs_diff(&a.scale(Bc::E1)) < 1e-15);
    }

    #[test]
    fn apply_routes_agree() {
        let mut rng = random::rng_from_seed(2);
        for _ in 0..10 {
            let ops = (0..3).map(|_| random::matrix(&mut rng, 3, 2)).collect();
            let k = KrausSet::new(ops).unwrap();
            let a = random::matrix(&mut rng, 2, 2);
            let direct = k.apply(&a).unwrap();
            let via_units = map_from_kraus(&k).apply(&a).unwrap();
            assert!(direct.max_abs_diff(&via_units) < 1e-11);
        }
        let id = MatrixMap::identity(2);
        let a = random::matrix(&mut rng, 2, 2);
        assert_eq!(id.apply(&a).unwrap(), a);
        assert!(matches!(
            id.apply(&BicomplexMatrix::identity(3)),
            Err(BcError::ShapeMismatch(_))
        ));
    }

    #[test]
    fn block_apply_examples() {
        let mut rng = random::rng_from_seed(3);
        let k = KrausSet::new(vec![
            random::matrix(&mut rng, 2, 2),
            random::matrix(&mut rng, 2, 2),
        ])
        .unwrap();
        let phi = map_from_kraus(&k);
        let a = random::matrix(&mut rng, 2, 2);
        assert_eq!(phi.block_apply(&a).unwrap(), phi.apply(&a).unwrap());

        let big = random::matrix(&mut rng, 6, 6);
        assert_eq!(MatrixMap::identity(2).block_apply(&big).unwrap(), big);
        assert!(matches!(
            phi.block_apply(&BicomplexMatrix::identity(3)),
            Err(BcError::ShapeMismatch(_))
        ));

        let positive = crate::positivity::random_gram(6, 6, 4).unwrap();
        let out = phi.block_apply(&positive).unwrap();
        assert!(is_hyperbolic_positive(&out, TOL, PositivityMethod::Components).unwrap());
    }

    #[test]
    fn choi_examples() {
        assert_eq!(
            MatrixMap::identity(1).choi_matrix(),
            BicomplexMatrix::identity(1)
        );

        let choi = MatrixMap::identity(2).choi_matrix();
        let mut expected = CMatrix::zeros(4, 4);
        for (r, c) in [(0, 0), (0, 3), (3, 0), (3, 3)] {
            expected[(r, c)] = Complex64::new(1.0, 0.0);
        }
        assert_eq!(choi, BicomplexMatrix::from_complex(expected));

        let choi = MatrixMap::transpose(2).choi_matrix();
        let mut swap = CMatrix::zeros(4, 4);
        for (r, c) in [(0, 0), (1, 2), (2, 1), (3, 3)] {
            swap[(r, c)] = Complex64::new(1.0, 0.0);
        }
        assert_eq!(choi, BicomplexMatrix::from_complex(swap));
    }

    #[test]
    fn complete_positivity_examples() {
        assert!(MatrixMap::identity(3).is_completely_positive(TOL));
        assert!(!MatrixMap::transpose(2).is_completely_positive(TOL));
        let (values, _) = linalg::hermitian_eigen(MatrixMap::transpose(2).choi_matrix().c1());
        assert!((values[0] + 1.0).abs() < 1e-10);
        let mut rng = random::rng_from_seed(4);
        let k = KrausSet::new((0..2).map(|_| random::matrix(&mut rng, 3, 3)).collect()).unwrap();
        assert!(map_from_kraus(&k).is_completely_positive(TOL));
    }

    #[test]
    fn kraus_decomposition_examples() {
        let k = MatrixMap::identity(2).kraus_decomposition(TOL).unwrap();
        assert_eq!(k.len(), 1);
        let op = &k.operators()[0];
        for ell in 1..=2 {
            let c = op.component(ell);
            let phase = c[(0, 0)];
            assert!((phase.norm() - 1.0).abs() < 1e-12);
            assert!(linalg::max_abs_diff(c, &(CMatrix::identity(2, 2) * phase)) < 1e-12);
        }
        assert!(map_from_kraus(&k).max_abs_diff(&MatrixMap::identity(2)) < 1e-12);

        let dep = MatrixMap::depolarizing(2);
        let k = dep.kraus_decomposition(TOL).unwrap();
        assert_eq!(k.len(), 4);
        assert!(map_from_kraus(&k).max_abs_diff(&dep) < 1e-10);

        assert!(matches!(
            MatrixMap::transpose(2).kraus_decomposition(TOL),
            Err(BcError::NotCP)
        ));
    }

    #[test]
    fn kraus_decomposition_pads_component_ranks() {
        // component 1 is the identity channel, component 2 fully depolarizing
        let id = MatrixMap::identity(2);
        let dep = MatrixMap::depolarizing(2);
        let mixed = MatrixMap::from_unit_images(
            2,
            2,
            id.unit_images(1).to_vec(),
            dep.unit_images(2).to_vec(),
        )
        .unwrap();
        let k = mixed.kraus_decomposition(TOL).unwrap();
        assert_eq!(k.len(), 4);
        assert!(map_from_kraus(&k).max_abs_diff(&mixed) < 1e-10);
    }

    #[test]
    fn trace_preservation_examples() {
        assert!(MatrixMap::identity(2).is_trace_preserving(TOL));
        let e1 = KrausSet::new(vec![BicomplexMatrix::scalar_identity(2, Bc::E1)]).unwrap();
        assert!(!map_from_kraus(&e1).is_trace_preserving(TOL));
        assert!(!map_from_kraus(&raising()).is_trace_preserving(TOL));
        assert_eq!(raising().completeness(), unit(2, 1, 1));
        assert!(MatrixMap::depolarizing(3).is_trace_preserving(TOL));
    }

    #[test]
    fn tensor_map_examples() {
        let id = MatrixMap::identity(2).tensor(&MatrixMap::identity(3));
        assert_eq!(id, MatrixMap::identity(6));

        let mut rng = random::rng_from_seed(5);
        let k1 = KrausSet::new((0..2).map(|_| random::matrix(&mut rng, 2, 2)).collect()).unwrap();
        let k2 = KrausSet::new((0..3).map(|_| random::matrix(&mut rng, 2, 3)).collect()).unwrap();
        let product = map_from_kraus(&k1).tensor(&map_from_kraus(&k2));
        assert!(product.is_completely_positive(TOL));
        assert!(product.max_abs_diff(&map_from_kraus(&k1.tensor(&k2))) < 1e-9);
        assert_eq!((product.n(), product.m()), (6, 4));
    }

    #[test]
    fn composition_chains_unit_images() {
        let mut rng = random::rng_from_seed(6);
        let k1 = KrausSet::new((0..2).map(|_| random::matrix(&mut rng, 3, 2)).collect()).unwrap();
        let k2 = KrausSet::new((0..2).map(|_| random::matrix(&mut rng, 2, 3)).collect()).unwrap();
        let composed = map_from_kraus(&k1).then(&map_from_kraus(&k2)).unwrap();
        let a = random::matrix(&mut rng, 2, 2);
        let direct = k2.apply(&k1.apply(&a).unwrap()).unwrap();
        assert!(composed.apply(&a).unwrap().max_abs_diff(&direct) < 1e-10);
        assert!(map_from_kraus(&k1).then(&map_from_kraus(&k1)).is_err());
    }
}
