//! JSON interchange formats.
//!
//! * matrix: `{"rows", "cols", "repr": "idempotent" | "cartesian", "entries"}`,
//!   each entry a length-4 array, `[re λ1, im λ1, re λ2, im λ2]` or
//!   `[x1, x2, x3, x4]` depending on `repr`. Vectors are `n x 1` matrices.
//! * Kraus set: `{"n", "m", "operators": [matrix, ...]}`.
//! * matrix map: `{"n", "m", "unit_images_1", "unit_images_2"}`, each a list of
//!   `n²` complex `m x m` matrices (rows of `[re, im]` pairs) in row-major
//!   `(j, k)` order.
//!
//! Floats are written in shortest round-trip form and read with correct
//! rounding, so canonical files survive load/save bit for bit.

use std::fs;
use std::path::Path;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::choi::{KrausSet, MatrixMap};
use crate::error::{BcError, Result};
use crate::linalg::CMatrix;
use crate::matrix::{BicomplexMatrix, BicomplexVector};
use crate::scalar::BicomplexScalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Repr {
    #[default]
    Idempotent,
    Cartesian,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixJson {
    pub rows: usize,
    pub cols: usize,
    pub repr: Repr,
    pub entries: Vec<Vec<[f64; 4]>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct KrausJson {
    pub n: usize,
    pub m: usize,
    pub operators: Vec<MatrixJson>,
}

type ComplexRows = Vec<Vec<[f64; 2]>>;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapJson {
    pub n: usize,
    pub m: usize,
    pub unit_images_1: Vec<ComplexRows>,
    pub unit_images_2: Vec<ComplexRows>,
}

/// Maps `-0.0` to `0.0` so output does not depend on the sign of zero.
fn clean(x: f64) -> f64 {
    x + 0.0
}

pub fn scalar_to_array(z: BicomplexScalar, repr: Repr) -> [f64; 4] {
    let raw = match repr {
        Repr::Idempotent => [z.l1.re, z.l1.im, z.l2.re, z.l2.im],
        Repr::Cartesian => z.cartesian(),
    };
    raw.map(clean)
}

pub fn scalar_from_array(a: [f64; 4], repr: Repr) -> BicomplexScalar {
    match repr {
        Repr::Idempotent => {
            BicomplexScalar::idempotent(Complex64::new(a[0], a[1]), Complex64::new(a[2], a[3]))
        }
        Repr::Cartesian => BicomplexScalar::from_cartesian(a[0], a[1], a[2], a[3]),
    }
}

impl MatrixJson {
    pub fn from_matrix(m: &BicomplexMatrix, repr: Repr) -> Self {
        Self {
            rows: m.rows(),
            cols: m.cols(),
            repr,
            entries: (0..m.rows())
                .map(|r| {
                    (0..m.cols())
                        .map(|c| scalar_to_array(m.get(r, c), repr))
                        .collect()
                })
                .collect(),
        }
    }

    pub fn to_matrix(&self) -> Result<BicomplexMatrix> {
        if self.rows == 0 || self.cols == 0 {
            return Err(BcError::Parse(format!(
                "empty shape {}x{}",
                self.rows, self.cols
            )));
        }
        if self.entries.len() != self.rows {
            return Err(BcError::Parse(format!(
                "declared {} rows, found {}",
                self.rows,
                self.entries.len()
            )));
        }
        if let Some((r, row)) = self
            .entries
            .iter()
            .enumerate()
            .find(|(_, row)| row.len() != self.cols)
        {
            return Err(BcError::Parse(format!(
                "row {r} has {} entries, expected {}",
                row.len(),
                self.cols
            )));
        }
        if self
            .entries
            .iter()
            .flatten()
            .flatten()
            .any(|x| !x.is_finite())
        {
            return Err(BcError::Parse("non-finite entry".into()));
        }
        Ok(BicomplexMatrix::from_fn(self.rows, self.cols, |r, c| {
            scalar_from_array(self.entries[r][c], self.repr)
        }))
    }
}

fn complex_rows(m: &CMatrix) -> ComplexRows {
    (0..m.nrows())
        .map(|r| {
            (0..m.ncols())
                .map(|c| [clean(m[(r, c)].re), clean(m[(r, c)].im)])
                .collect()
        })
        .collect()
}

fn complex_from_rows(rows: &ComplexRows, size: usize) -> Result<CMatrix> {
    if rows.len() != size || rows.iter().any(|r| r.len() != size) {
        return Err(BcError::Parse(format!("unit image is not {size}x{size}")));
    }
    Ok(CMatrix::from_fn(size, size, |r, c| {
        Complex64::new(rows[r][c][0], rows[r][c][1])
    }))
}

impl MapJson {
    pub fn from_map(map: &MatrixMap) -> Self {
        Self {
            n: map.n(),
            m: map.m(),
            unit_images_1: map.unit_images(1).iter().map(complex_rows).collect(),
            unit_images_2: map.unit_images(2).iter().map(complex_rows).collect(),
        }
    }

    pub fn to_map(&self) -> Result<MatrixMap> {
        let parse = |list: &[ComplexRows]| -> Result<Vec<CMatrix>> {
            list.iter()
                .map(|rows| complex_from_rows(rows, self.m))
                .collect()
        };
        MatrixMap::from_unit_images(
            self.n,
            self.m,
            parse(&self.unit_images_1)?,
            parse(&self.unit_images_2)?,
        )
        .map_err(|e| BcError::Parse(e.to_string()))
    }
}

impl KrausJson {
    pub fn from_kraus(k: &KrausSet) -> Self {
        Self {
            n: k.n(),
            m: k.m(),
            operators: k
                .operators()
                .iter()
                .map(|op| MatrixJson::from_matrix(op, Repr::Idempotent))
                .collect(),
        }
    }

    pub fn to_kraus(&self) -> Result<KrausSet> {
        let operators = self
            .operators
            .iter()
            .map(MatrixJson::to_matrix)
            .collect::<Result<Vec<_>>>()?;
        let k = KrausSet::new(operators).map_err(|e| BcError::Parse(e.to_string()))?;
        if (k.n(), k.m()) != (self.n, self.m) {
            return Err(BcError::Parse(format!(
                "declared n={}, m={} but operators are {}x{}",
                self.n,
                self.m,
                k.m(),
                k.n()
            )));
        }
        Ok(k)
    }
}

/// A map file holds either a Kraus set or unit images.
#[derive(Clone, Debug)]
pub enum MapInput {
    Kraus(KrausSet),
    Map(MatrixMap),
}

impl MapInput {
    pub fn into_map(self) -> MatrixMap {
        match self {
            MapInput::Kraus(k) => MatrixMap::from(&k),
            MapInput::Map(m) => m,
        }
    }
}

fn parse_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| BcError::Parse(e.to_string()))
}

pub fn parse_matrix(text: &str) -> Result<BicomplexMatrix> {
    parse_json::<MatrixJson>(text)?.to_matrix()
}

pub fn parse_map(text: &str) -> Result<MapInput> {
    let value: serde_json::Value = parse_json(text)?;
    if value.get("operators").is_some() {
        let k: KrausJson =
            serde_json::from_value(value).map_err(|e| BcError::Parse(e.to_string()))?;
        Ok(MapInput::Kraus(k.to_kraus()?))
    } else {
        let m: MapJson =
            serde_json::from_value(value).map_err(|e| BcError::Parse(e.to_string()))?;
        Ok(MapInput::Map(m.to_map()?))
    }
}

pub fn load_matrix(path: impl AsRef<Path>) -> Result<BicomplexMatrix> {
    parse_matrix(&fs::read_to_string(path)?)
}

/// Loads an `n x 1` matrix file as a vector.
pub fn load_vector(path: impl AsRef<Path>) -> Result<BicomplexVector> {
    let m = load_matrix(path)?;
    if m.cols() != 1 {
        return Err(BcError::Parse(format!(
            "expected a column vector, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    Ok(m.column(0))
}

pub fn load_map(path: impl AsRef<Path>) -> Result<MapInput> {
    parse_map(&fs::read_to_string(path)?)
}

pub fn matrix_to_string(m: &BicomplexMatrix, repr: Repr) -> String {
    serde_json::to_string_pretty(&MatrixJson::from_matrix(m, repr)).expect("matrix json serialises")
}

pub fn map_to_string(map: &MatrixMap) -> String {
    serde_json::to_string_pretty(&MapJson::from_map(map)).expect("map json serialises")
}

pub fn kraus_to_string(k: &KrausSet) -> String {
    serde_json::to_string_pretty(&KrausJson::from_kraus(k)).expect("kraus json serialises")
}

pub fn save_matrix(path: impl AsRef<Path>, m: &BicomplexMatrix, repr: Repr) -> Result<()> {
    let mut text = matrix_to_string(m, repr);
    text.push('\n');
    fs::write(path, text)?;
    Ok(())
}
