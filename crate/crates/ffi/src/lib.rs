//! C ABI for the `bicomplex` crate.
//!
//! Objects are opaque handles created by `bc_*_new`/`bc_*_from_*` functions and
//! released with the matching `bc_*_free`. Every fallible function returns a
//! [`BcStatus`]; on failure [`bc_last_error`] describes what went wrong on the
//! calling thread. Output pointers are written only on success.
//!
//! Scalars cross the boundary as four doubles, either idempotent
//! `[Re λ1, Im λ1, Re λ2, Im λ2]` or cartesian `[x1, x2, x3, x4]` for
//! `x1 + i x2 + j x3 + k x4`. Matrices are row-major arrays of such scalars.
//!
//! Every pointer argument must be null or valid for the access described on
//! the function; handles must be live and used from one thread at a time.

#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use bicomplex::choi::{KrausSet, MatrixMap};
use bicomplex::dsp::{self, OpCounter};
use bicomplex::io::{self, Repr};
use bicomplex::positivity::{self, PositivityMethod};
use bicomplex::scalar::BicomplexScalar;
use bicomplex::tensor::{self, TensorRoute};
use bicomplex::{BcError, BicomplexMatrix, InverseMethod};

/// Status codes returned by every fallible function.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BcStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    ShapeMismatch = 3,
    NotSquare = 4,
    ZeroDivisor = 5,
    Singular = 6,
    NotPositive = 7,
    NotProduct = 8,
    ZeroTrace = 9,
    NotCp = 10,
    BadRank = 11,
    BadFactorization = 12,
    ParseError = 13,
    IoError = 14,
    Panic = 15,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BcRepr {
    Idempotent = 0,
    Cartesian = 1,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BcTensorRoute {
    Idempotent = 0,
    Cartesian = 1,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BcPositivityMethod {
    Components = 0,
    Cartesian = 1,
    Eigen = 2,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BcInverseMethod {
    Componentwise = 0,
    Cartesian = 1,
}

/// Opaque bicomplex matrix.
pub struct BcMatrix(BicomplexMatrix);

/// Opaque linear map between matrix spaces.
pub struct BcMap(MatrixMap);

/// Opaque list of Kraus operators.
pub struct BcKrausSet(KrausSet);

/// Multiplication counts of `bc_dsp_apply`, per idempotent component.
#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct BcOpCounts {
    pub factored_mults: [u64; 2],
    pub direct_mults: [u64; 2],
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_last_error(msg: &str) {
    let text = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = text);
}

fn status_of(err: &BcError) -> BcStatus {
    match err {
        BcError::ZeroDivisor { .. } => BcStatus::ZeroDivisor,
        BcError::ShapeMismatch(_) => BcStatus::ShapeMismatch,
        BcError::NotSquare { .. } => BcStatus::NotSquare,
        BcError::Singular { .. } => BcStatus::Singular,
        BcError::NotPositive => BcStatus::NotPositive,
        BcError::NotProduct { .. } => BcStatus::NotProduct,
        BcError::ZeroTrace { .. } => BcStatus::ZeroTrace,
        BcError::NotCP => BcStatus::NotCp,
        BcError::BadRank { .. } => BcStatus::BadRank,
        BcError::BadFactorization { .. } => BcStatus::BadFactorization,
        BcError::Parse(_) => BcStatus::ParseError,
        BcError::Io(_) => BcStatus::IoError,
    }
}

/// Error raised inside the wrapper before reaching the library.
struct Failure(BcStatus, String);

impl From<BcError> for Failure {
    fn from(err: BcError) -> Self {
        Failure(status_of(&err), err.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(BcStatus::NullPointer, format!("{what} is null"))
}

fn invalid(msg: impl Into<String>) -> Failure {
    Failure(BcStatus::InvalidArgument, msg.into())
}

/// Runs `f`, translating errors and panics into a status.
fn guard(f: impl FnOnce() -> Result<(), Failure>) -> BcStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_last_error("");
            BcStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_last_error(&msg);
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_last_error(&format!("internal error: {msg}"));
            BcStatus::Panic
        }
    }
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn write_out<T>(out: *mut T, value: T, what: &str) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null(what));
    }
    out.write(value);
    Ok(())
}

fn boxed<T>(value: T) -> *mut T {
    Box::into_raw(Box::new(value))
}

unsafe fn c_str<'a>(s: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if s.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| invalid(format!("{what} is not valid UTF-8")))
}

fn repr(r: BcRepr) -> Repr {
    match r {
        BcRepr::Idempotent => Repr::Idempotent,
        BcRepr::Cartesian => Repr::Cartesian,
    }
}

fn check_tol(tol: f64) -> Result<(), Failure> {
    if tol > 0.0 && tol.is_finite() {
        Ok(())
    } else {
        Err(invalid(format!("tolerance must be positive, got {tol}")))
    }
}

/// Message describing the last failure on this thread; empty after a success.
/// The pointer stays valid until the next call into this library.
#[no_mangle]
pub extern "C" fn bc_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Frees a string returned by this library.
///
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn bc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Cartesian `[x1, x2, x3, x4]` to idempotent `[Re λ1, Im λ1, Re λ2, Im λ2]`.
///
/// Both pointers must reference four doubles.
#[no_mangle]
pub unsafe extern "C" fn bc_scalar_split(cartesian: *const f64, idempotent: *mut f64) -> BcStatus {
    guard(|| {
        if cartesian.is_null() || idempotent.is_null() {
            return Err(null("scalar buffer"));
        }
        let x = std::slice::from_raw_parts(cartesian, 4);
        let z = BicomplexScalar::from_cartesian(x[0], x[1], x[2], x[3]);
        let out = io::scalar_to_array(z, Repr::Idempotent);
        ptr::copy_nonoverlapping(out.as_ptr(), idempotent, 4);
        Ok(())
    })
}

/// Idempotent `[Re λ1, Im λ1, Re λ2, Im λ2]` to cartesian `[x1, x2, x3, x4]`.
///
/// Both pointers must reference four doubles.
#[no_mangle]
pub unsafe extern "C" fn bc_scalar_join(idempotent: *const f64, cartesian: *mut f64) -> BcStatus {
    guard(|| {
        if cartesian.is_null() || idempotent.is_null() {
            return Err(null("scalar buffer"));
        }
        let x = std::slice::from_raw_parts(idempotent, 4);
        let z = io::scalar_from_array([x[0], x[1], x[2], x[3]], Repr::Idempotent);
        ptr::copy_nonoverlapping(z.cartesian().as_ptr(), cartesian, 4);
        Ok(())
    })
}

/// Builds a `rows x cols` matrix from `4 * rows * cols` doubles.
///
/// `data` must reference `4 * rows * cols` doubles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bc_matrix_new(
    rows: usize,
    cols: usize,
    data: *const f64,
    representation: BcRepr,
    out: *mut *mut BcMatrix,
) -> BcStatus {
    guard(|| {
        if rows == 0 || cols == 0 {
            return Err(invalid("matrix dimensions must be positive"));
        }
        if data.is_null() {
            return Err(null("data"));
        }
        let values = std::slice::from_raw_parts(data, 4 * rows * cols);
        if values.iter().any(|v| !v.is_finite()) {
            return Err(invalid("matrix entries must be finite"));
        }
        let r = repr(representation);
        let m = BicomplexMatrix::from_fn(rows, cols, |i, j| {
            let k = 4 * (i * cols + j);
            io::scalar_from_array([values[k], values[k + 1], values[k + 2], values[k + 3]], r)
        });
        write_out(out, boxed(BcMatrix(m)), "out")
    })
}

/// Identity matrix of size `n`.
///
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bc_matrix_identity(n: usize, out: *mut *mut BcMatrix) -> BcStatus {
    guard(|| {
        if n == 0 {
            return Err(invalid("matrix dimensions must be positive"));
        }
        write_out(out, boxed(BcMatrix(BicomplexMatrix::identity(n))), "out")
    })
}

/// Parses a matrix from its JSON text.
///
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bc_matrix_from_json(
    json: *const c_char,
    out: *mut *mut BcMatrix,
) -> BcStatus {
    guard(|| {
        let m = io::parse_matrix(c_str(json, "json")?)?;
        write_out(out, boxed(BcMatrix(m)), "out")
    })
}

/// Serialises a matrix as JSON. Free the result with `bc_string_free`.
///
/// `m` must be a live matrix handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bc_matrix_to_json(
    m: *const BcMatrix,
    representation: BcRepr,
    out: *mut *mut c_char,
) -> BcStatus {
    guard(|| {
        let text = io::matrix_to_string(&deref(m, "matrix")?.0, repr(representation));
        let c = CString::new(text).map_err(|_| invalid("unexpected NUL in JSON"))?;
        write_out(out, c.into_raw(), "out")
    })
}

/// Releases a matrix handle. Null is ignored.
///
/// `m` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn bc_matrix_free(m: *mut BcMatrix) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// Number of rows, or 0 for a null handle.
///
/// `m` must be null or a live matrix handle.
#[no_mangle]
pub unsafe extern "C" fn bc_matrix_rows(m: *const BcMatrix) -> usize {
    m.as_ref().map_or(0, |m| m.0.rows())
}

/// Number of columns, or 0 for a null handle.
///
/// `m` must be null or a live matrix handle.
#[no_mangle]
pub unsafe extern "C" fn bc_matrix_cols(m: *const BcMatrix) -> usize {
    m.as_ref().map_or(0, |m| m.0.cols())
}

/// Copies the entries into `data`, which must hold `len >= 4 * rows * cols`
/// doubles.
///
/// `m` must be a live matrix handle; `data` must reference `len` doubles.
#[no_mangle]
pub unsafe extern "C" fn bc_matrix_entries(
    m: *const BcMatrix,
    representation: BcRepr,
    data: *mut f64,
    len: usize,
) -> BcStatus {
    guard(|| {
        let m = &deref(m, "matrix")?.0;
        let needed = 4 * m.rows() * m.cols();
        if len < needed {
            return Err(invalid(format!(
                "buffer holds {len} doubles, {needed} needed"
            )));
        }
        if data.is_null() {
            return Err(null("data"));
        }
        let out = std::slice::from_raw_parts_mut(data, needed);
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                let k = 4 * (i * m.cols() + j);
                out[k..k + 4]
                    .copy_from_slice(&io::scalar_to_array(m.get(i, j), repr(representation)));
            }
        }
        Ok(())
    })
}

/// `a ⊗_j b`.
///
/// `a`, `b` must be live matrix handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bc_tensor(
    a: *const BcMatrix,
    b: *const BcMatrix,
    route: BcTensorRoute,
    out: *mut *mut BcMatrix,
) -> BcStatus {
    guard(|| {
        let route = match route {
            BcTensorRoute::Idempotent => TensorRoute::Idempotent,
            BcTensorRoute::Cartesian => TensorRoute::Cartesian,
        };
        let t = tensor::tensor(&deref(a, "a")?.0, &deref(b, "b")?.0, route);
        write_out(out, boxed(BcMatrix(t)), "out")
    })
}

/// Product `a b`.
///
/// `a`, `b` must be live matrix handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bc_matmul(
    a: *const BcMatrix,
    b: *const BcMatrix,
    out: *mut *mut BcMatrix,
) -> BcStatus {
    guard(|| {
        let p = deref(a, "a")?.0.matmul(&deref(b, "b")?.0)?;
        write_out(out, boxed(BcMatrix(p)), "out")
    })
}

/// Trace as an idempotent scalar `[Re λ1, Im λ1, Re λ2, Im λ2]`.
///
/// `a` must be a live matrix handle; `out` must reference four doubles.
#[no_mangle]
pub unsafe extern "C" fn bc_trace(a: *const BcMatrix, out: *mut f64) -> BcStatus {
    guard(|| {
        let t = deref(a, "a")?.0.trace()?;
        if out.is_null() {
            return Err(null("out"));
        }
        ptr::copy_nonoverlapping(io::scalar_to_array(t, Repr::Idempotent).as_ptr(), out, 4);
        Ok(())
    })
}

/// Hyperbolic positivity test.
///
/// `a` must be a live matrix handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bc_is_hyperbolic_positive(
    a: *const BcMatrix,
    tol: f64,
    method: BcPositivityMethod,
    out: *mut bool,
) -> BcStatus {
    guard(|| {
        check_tol(tol)?;
        let method = match method {
            BcPositivityMethod::Components => PositivityMethod::Components,
            BcPositivityMethod::Cartesian => PositivityMethod::Cartesian,
            BcPositivityMethod::Eigen => PositivityMethod::Eigen,
        };
        let verdict = positivity::is_hyperbolic_positive(&deref(a, "a")?.0, tol, method)?;
        write_out(out, verdict, "out")
    })
}

/// State test: hyperbolic positive with unit trace.
///
/// `a` must be a live matrix handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bc_is_state(a: *const BcMatrix, tol: f64, out: *mut bool) -> BcStatus {
    guard(|| {
        check_tol(tol)?;
        let verdict = positivity::is_state(&deref(a, "a")?.0, tol)?;
        write_out(out, verdict, "out")
    })
}

/// Triangular factor: upper `U` with `A = U^{*t} U`, or lower `L` with
/// `A = L^{*t} L` when `lower` is set.
///
/// `a` must be a live matrix handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bc_cholesky(
    a: *const BcMatrix,
    tol: f64,
    lower: bool,
    out: *mut *mut BcMatrix,
) -> BcStatus {
    guard(|| {
        check_tol(tol)?;
        let a = &deref(a, "a")?.0;
        let f = if lower {
            positivity::cholesky_lower(a, tol)?
        } else {
            positivity::cholesky(a, tol)?
        };
        write_out(out, boxed(BcMatrix(f)), "out")
    })
}

/// Rank-one decomposition, returned as an `n x r` matrix whose columns are the
/// vectors `a_i` with `A = Σ a_i a_i^{*t}`. A zero matrix yields `r = 0` and a
/// null handle.
///
/// `a` must be a live matrix handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bc_rank_one(
    a: *const BcMatrix,
    tol: f64,
    out: *mut *mut BcMatrix,
) -> BcStatus {
    guard(|| {
        check_tol(tol)?;
        let a = &deref(a, "a")?.0;
        let vectors = positivity::rank_one_decomposition(a, tol)?;
        if vectors.is_empty() {
            return write_out(out, ptr::null_mut(), "out");
        }
        let m = BicomplexMatrix::from_fn(a.rows(), vectors.len(), |i, k| vectors[k].get(i));
        write_out(out, boxed(BcMatrix(m)), "out")
    })
}

/// Eigenvalues of both idempotent components as `[re, im]` pairs:
/// `out[0..2n]` for the first component, `out[2n..4n]` for the second.
///
/// `a` must be a live matrix handle; `out` must reference `len` doubles.
#[no_mangle]
pub unsafe extern "C" fn bc_eigenvalues(a: *const BcMatrix, out: *mut f64, len: usize) -> BcStatus {
    guard(|| {
        let e = positivity::bc_eigenvalues(&deref(a, "a")?.0)?;
        let n = e.spectrum1.len();
        if len < 4 * n {
            return Err(invalid(format!(
                "buffer holds {len} doubles, {} needed",
                4 * n
            )));
        }
        if out.is_null() {
            return Err(null("out"));
        }
        let buf = std::slice::from_raw_parts_mut(out, 4 * n);
        for (k, z) in e.spectrum1.iter().chain(e.spectrum2.iter()).enumerate() {
            buf[2 * k] = z.re;
            buf[2 * k + 1] = z.im;
        }
        Ok(())
    })
}

/// Matrix inverse.
///
/// `a` must be a live matrix handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bc_inverse(
    a: *const BcMatrix,
    method: BcInverseMethod,
    out: *mut *mut BcMatrix,
) -> BcStatus {
    guard(|| {
        let method = match method {
            BcInverseMethod::Componentwise => InverseMethod::Componentwise,
            BcInverseMethod::Cartesian => InverseMethod::Cartesian,
        };
        let inv = deref(a, "a")?.0.inverse(method)?;
        write_out(out, boxed(BcMatrix(inv)), "out")
    })
}

/// Recovers `A (n x n)` and `B (m x m)` from `M = A ⊗_j B` with the gauge
/// `Tr Bℓ = 1`. `residual`, if not null, receives the two component
/// reconstruction residuals; on `NotProduct` it receives the offending one in
/// `residual[0]`.
///
/// `mat` must be a live matrix handle; `out_a`, `out_b` must be writable;
/// `residual` must be null or reference two doubles.
#[no_mangle]
pub unsafe extern "C" fn bc_recover_factors(
    mat: *const BcMatrix,
    n: usize,
    m: usize,
    tol: f64,
    out_a: *mut *mut BcMatrix,
    out_b: *mut *mut BcMatrix,
    residual: *mut f64,
) -> BcStatus {
    guard(|| {
        check_tol(tol)?;
        if out_a.is_null() || out_b.is_null() {
            return Err(null("out"));
        }
        match tensor::recover_factors(&deref(mat, "matrix")?.0, n, m, tol) {
            Ok(f) => {
                if !residual.is_null() {
                    residual.write(f.residual.0);
                    residual.add(1).write(f.residual.1);
                }
                out_a.write(boxed(BcMatrix(f.a)));
                out_b.write(boxed(BcMatrix(f.b)));
                Ok(())
            }
            Err(err) => {
                if let (BcError::NotProduct { residual: r }, false) = (&err, residual.is_null()) {
                    residual.write(*r);
                }
                Err(err.into())
            }
        }
    })
}

/// Kraus set from `count` operators of equal shape. The matrices are copied.
///
/// `operators` must reference `count` live matrix handles; `out` must be
/// writable.
#[no_mangle]
pub unsafe extern "C" fn bc_kraus_new(
    operators: *const *const BcMatrix,
    count: usize,
    out: *mut *mut BcKrausSet,
) -> BcStatus {
    guard(|| {
        if operators.is_null() {
            return Err(null("operators"));
        }
        let ops = std::slice::from_raw_parts(operators, count)
            .iter()
            .map(|&p| deref(p, "operator").map(|m| m.0.clone()))
            .collect::<Result<Vec<_>, _>>()?;
        write_out(out, boxed(BcKrausSet(KrausSet::new(ops)?)), "out")
    })
}

/// Releases a Kraus set. Null is ignored.
///
/// `k` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn bc_kraus_free(k: *mut BcKrausSet) {
    if !k.is_null() {
        drop(Box::from_raw(k));
    }
}

/// Number of operators, or 0 for a null handle.
///
/// `k` must be null or a live Kraus handle.
#[no_mangle]
pub unsafe extern "C" fn bc_kraus_len(k: *const BcKrausSet) -> usize {
    k.as_ref().map_or(0, |k| k.0.len())
}

/// Copy of operator `index`.
///
/// `k` must be a live Kraus handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bc_kraus_get(
    k: *const BcKrausSet,
    index: usize,
    out: *mut *mut BcMatrix,
) -> BcStatus {
    guard(|| {
        let ops = deref(k, "kraus")?.0.operators();
        let op = ops
            .get(index)
            .ok_or_else(|| invalid(format!("operator {index} of {}", ops.len())))?;
        write_out(out, boxed(BcMatrix(op.clone())), "out")
    })
}

/// The map `A ↦ Σ V A V^{*t}`.
///
/// `k` must be a live Kraus handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bc_map_from_kraus(k: *const BcKrausSet, out: *mut *mut BcMap) -> BcStatus {
    guard(|| {
        let map = MatrixMap::from(&deref(k, "kraus")?.0);
        write_out(out, boxed(BcMap(map)), "out")
    })
}

/// Parses a map file: either a Kraus set or component unit images.
///
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bc_map_from_json(json: *const c_char, out: *mut *mut BcMap) -> BcStatus {
    guard(|| {
        let map = io::parse_map(c_str(json, "json")?)?.into_map();
        write_out(out, boxed(BcMap(map)), "out")
    })
}

/// Serialises a map as unit-image JSON. Free the result with `bc_string_free`.
///
/// `map` must be a live map handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bc_map_to_json(map: *const BcMap, out: *mut *mut c_char) -> BcStatus {
    guard(|| {
        let text = io::map_to_string(&deref(map, "map")?.0);
        let c = CString::new(text).map_err(|_| invalid("unexpected NUL in JSON"))?;
        write_out(out, c.into_raw(), "out")
    })
}

/// Serialises a Kraus set as JSON. Free the result with `bc_string_free`.
///
/// `k` must be a live Kraus handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bc_kraus_to_json(k: *const BcKrausSet, out: *mut *mut c_char) -> BcStatus {
    guard(|| {
        let text = io::kraus_to_string(&deref(k, "kraus")?.0);
        let c = CString::new(text).map_err(|_| invalid("unexpected NUL in JSON"))?;
        write_out(out, c.into_raw(), "out")
    })
}

/// Component-wise transpose map on `n x n` matrices.
///
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bc_map_transpose(n: usize, out: *mut *mut BcMap) -> BcStatus {
    guard(|| {
        if n == 0 {
            return Err(invalid("dimension must be positive"));
        }
        write_out(out, boxed(BcMap(MatrixMap::transpose(n))), "out")
    })
}

/// Releases a map. Null is ignored.
///
/// `map` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn bc_map_free(map: *mut BcMap) {
    if !map.is_null() {
        drop(Box::from_raw(map));
    }
}

/// Complete positivity test via the Choi matrix.
///
/// `map` must be a live map handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bc_map_is_cp(map: *const BcMap, tol: f64, out: *mut bool) -> BcStatus {
    guard(|| {
        check_tol(tol)?;
        let verdict = deref(map, "map")?.0.is_completely_positive(tol);
        write_out(out, verdict, "out")
    })
}

/// Trace preservation test.
///
/// `map` must be a live map handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bc_map_is_tp(map: *const BcMap, tol: f64, out: *mut bool) -> BcStatus {
    guard(|| {
        check_tol(tol)?;
        let verdict = deref(map, "map")?.0.is_trace_preserving(tol);
        write_out(out, verdict, "out")
    })
}

/// `φ(a)`.
///
/// `map`, `a` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bc_map_apply(
    map: *const BcMap,
    a: *const BcMatrix,
    out: *mut *mut BcMatrix,
) -> BcStatus {
    guard(|| {
        let image = deref(map, "map")?.0.apply(&deref(a, "a")?.0)?;
        write_out(out, boxed(BcMatrix(image)), "out")
    })
}

/// Choi matrix `Σ E_jk ⊗ φ(E_jk)`.
///
/// `map` must be a live map handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bc_map_choi(map: *const BcMap, out: *mut *mut BcMatrix) -> BcStatus {
    guard(|| {
        let choi = deref(map, "map")?.0.choi_matrix();
        write_out(out, boxed(BcMatrix(choi)), "out")
    })
}

/// Tensor product of two maps.
///
/// `a`, `b` must be live map handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bc_map_tensor(
    a: *const BcMap,
    b: *const BcMap,
    out: *mut *mut BcMap,
) -> BcStatus {
    guard(|| {
        let t = deref(a, "a")?.0.tensor(&deref(b, "b")?.0);
        write_out(out, boxed(BcMap(t)), "out")
    })
}

/// Kraus operators of a completely positive map.
///
/// `map` must be a live map handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bc_map_kraus(
    map: *const BcMap,
    tol: f64,
    out: *mut *mut BcKrausSet,
) -> BcStatus {
    guard(|| {
        check_tol(tol)?;
        let k = deref(map, "map")?.0.kraus_decomposition(tol)?;
        write_out(out, boxed(BcKrausSet(k)), "out")
    })
}

/// `(a ⊗_j b) x` through the factored algorithm. `x` is a column matrix.
/// `counts`, if not null, receives the multiplication counts of the factored
/// and the direct algorithm.
///
/// `a`, `b`, `x` must be live matrix handles; `out` must be writable;
/// `counts` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn bc_dsp_apply(
    a: *const BcMatrix,
    b: *const BcMatrix,
    x: *const BcMatrix,
    out: *mut *mut BcMatrix,
    counts: *mut BcOpCounts,
) -> BcStatus {
    guard(|| {
        let (a, b, x) = (&deref(a, "a")?.0, &deref(b, "b")?.0, &deref(x, "x")?.0);
        if x.cols() != 1 {
            return Err(invalid(format!(
                "x must be a column, got {}x{}",
                x.rows(),
                x.cols()
            )));
        }
        let x = x.column(0);
        let mut factored = OpCounter::new();
        let y = dsp::apply_factored(a, b, &x, &mut factored)?;
        if !counts.is_null() {
            let mut direct = OpCounter::new();
            dsp::apply_direct(a, b, &x, &mut direct)?;
            counts.write(BcOpCounts {
                factored_mults: factored.mults,
                direct_mults: direct.mults,
            });
        }
        write_out(out, boxed(BcMatrix(y.to_column())), "out")
    })
}
