//! C ABI over `riordan-core`.
//!
//! Arrays live behind an opaque `RiordanArray` handle. Every fallible call
//! returns a `RiordanStatus`; on failure `riordan_last_error()` describes the
//! most recent error on the calling thread. Strings handed out by the library
//! are NUL-terminated UTF-8 and must be released with `riordan_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use riordan_core::format;
use riordan_core::orthopoly::hankel_transform;
use riordan_core::production::{production_definitional, tridiagonal_params};
use riordan_core::rational::{parse_list, render};
use riordan_core::{catalog, Error, ExpRiordan, Series};

/// Opaque handle to an exact truncated exponential Riordan array.
pub struct RiordanArray {
    inner: ExpRiordan,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RiordanStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    UnknownId = 3,
    Parse = 4,
    Normalization = 5,
    OrderMismatch = 6,
    OutOfRange = 7,
    InsufficientData = 8,
    VanishingHankel = 9,
    InvalidArgument = 10,
    Internal = 99,
}

impl From<&Error> for RiordanStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::UnknownId(_) => Self::UnknownId,
            Error::Parse(_) => Self::Parse,
            Error::Normalization(_) | Error::ZeroSlope | Error::ConstantTerm { .. } => {
                Self::Normalization
            }
            Error::OrderMismatch { .. } | Error::DimensionMismatch(..) => Self::OrderMismatch,
            Error::InsufficientData { .. } => Self::InsufficientData,
            Error::VanishingHankel(_) => Self::VanishingHankel,
            Error::ZeroConstantTerm
            | Error::Singular(_)
            | Error::BandViolation(..)
            | Error::InvalidArgument(_) => Self::InvalidArgument,
        }
    }
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior NUL");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

struct Failure(RiordanStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(RiordanStatus::from(&e), e.to_string())
    }
}

type FfiResult<T> = Result<T, Failure>;

fn guard(f: impl FnOnce() -> FfiResult<()>) -> RiordanStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => RiordanStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_last_error(msg);
            status
        }
        Err(_) => {
            set_last_error("internal error: panic inside riordan".into());
            RiordanStatus::Internal
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> FfiResult<&'a str> {
    if p.is_null() {
        return Err(Failure(
            RiordanStatus::NullPointer,
            format!("{what} is null"),
        ));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure(RiordanStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn array_arg<'a>(p: *const RiordanArray, what: &str) -> FfiResult<&'a ExpRiordan> {
    p.as_ref()
        .map(|a| &a.inner)
        .ok_or_else(|| Failure(RiordanStatus::NullPointer, format!("{what} is null")))
}

fn check_out<T>(out: *mut T) -> FfiResult<()> {
    if out.is_null() {
        Err(Failure(
            RiordanStatus::NullPointer,
            "output pointer is null".into(),
        ))
    } else {
        Ok(())
    }
}

unsafe fn put_array(out: *mut *mut RiordanArray, inner: ExpRiordan) {
    *out = Box::into_raw(Box::new(RiordanArray { inner }));
}

unsafe fn put_string(out: *mut *mut c_char, s: String) {
    *out = CString::new(s).expect("no interior NUL").into_raw();
}

/// Message for the last failed call on this thread, or null. The pointer is
/// owned by the library and valid until the next failing call.
#[no_mangle]
pub extern "C" fn riordan_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Builds the catalog array `id` truncated at `order`.
///
/// # Safety
/// `id` must be a valid NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn riordan_array_from_catalog(
    id: *const c_char,
    order: usize,
    out: *mut *mut RiordanArray,
) -> RiordanStatus {
    guard(|| {
        check_out(out)?;
        let entry = catalog::entry(str_arg(id, "id")?)?;
        put_array(out, entry.array(order));
        Ok(())
    })
}

/// Builds `[g, f]` from comma-separated ordinary coefficients, zero-padded
/// to `order`.
///
/// # Safety
/// `g` and `f` must be valid NUL-terminated strings and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn riordan_array_from_series(
    g: *const c_char,
    f: *const c_char,
    order: usize,
    out: *mut *mut RiordanArray,
) -> RiordanStatus {
    guard(|| {
        check_out(out)?;
        let parse = |text: &str| -> FfiResult<Series> {
            let c = parse_list(text)?;
            if c.len() > order + 1 {
                return Err(Failure(
                    RiordanStatus::OrderMismatch,
                    format!("{} coefficients given for order {order}", c.len()),
                ));
            }
            Ok(Series::from_poly(&c, order))
        };
        let g = parse(str_arg(g, "g")?)?;
        let f = parse(str_arg(f, "f")?)?;
        put_array(out, ExpRiordan::build(g, f)?);
        Ok(())
    })
}

/// Group product `a * b`; both operands must have the same order.
///
/// # Safety
/// `a` and `b` must be live handles and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn riordan_array_multiply(
    a: *const RiordanArray,
    b: *const RiordanArray,
    out: *mut *mut RiordanArray,
) -> RiordanStatus {
    guard(|| {
        check_out(out)?;
        let product = array_arg(a, "a")?.multiply(array_arg(b, "b")?)?;
        put_array(out, product);
        Ok(())
    })
}

/// # Safety
/// `a` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn riordan_array_inverse(
    a: *const RiordanArray,
    out: *mut *mut RiordanArray,
) -> RiordanStatus {
    guard(|| {
        check_out(out)?;
        put_array(out, array_arg(a, "a")?.inverse()?);
        Ok(())
    })
}

/// Number of rows, `order + 1`; 0 for a null handle.
///
/// # Safety
/// `a` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn riordan_array_dim(a: *const RiordanArray) -> usize {
    a.as_ref().map_or(0, |a| a.inner.matrix().dim())
}

/// Entry `(n, k)` as a rational string such as `"-3"` or `"1/4"`.
///
/// # Safety
/// `a` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn riordan_array_entry(
    a: *const RiordanArray,
    n: usize,
    k: usize,
    out: *mut *mut c_char,
) -> RiordanStatus {
    guard(|| {
        check_out(out)?;
        let a = array_arg(a, "a")?;
        let dim = a.matrix().dim();
        if n >= dim || k >= dim {
            return Err(Failure(
                RiordanStatus::OutOfRange,
                format!("entry ({n}, {k}) outside a {dim}x{dim} array"),
            ));
        }
        put_string(out, render(a.get(n, k)));
        Ok(())
    })
}

/// `{"name", "order", "rows"}` with rational strings.
///
/// # Safety
/// `a` must be a live handle, `name` null or a valid string, `out` valid.
#[no_mangle]
pub unsafe extern "C" fn riordan_array_to_json(
    a: *const RiordanArray,
    name: *const c_char,
    out: *mut *mut c_char,
) -> RiordanStatus {
    guard(|| {
        check_out(out)?;
        let a = array_arg(a, "a")?;
        let name = if name.is_null() {
            "array"
        } else {
            str_arg(name, "name")?
        };
        put_string(out, format::matrix_json(name, a.matrix()));
        Ok(())
    })
}

/// `{"matrix", "params"}` for the production matrix; `params` is null unless
/// the matrix is tridiagonal. The matrix has `riordan_array_dim(a) - 1` rows.
///
/// # Safety
/// `a` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn riordan_array_production_json(
    a: *const RiordanArray,
    out: *mut *mut c_char,
) -> RiordanStatus {
    guard(|| {
        check_out(out)?;
        let p = production_definitional(array_arg(a, "a")?)?;
        let params = tridiagonal_params(&p);
        put_string(
            out,
            format::production_json("production", &p, params.as_ref()),
        );
        Ok(())
    })
}

/// Hankel transform `h_0..h_n` of a comma-separated sequence, as a JSON
/// array of rational strings. Needs `2n + 1` terms.
///
/// # Safety
/// `seq` must be a valid NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn riordan_hankel_transform(
    seq: *const c_char,
    n: usize,
    out: *mut *mut c_char,
) -> RiordanStatus {
    guard(|| {
        check_out(out)?;
        let terms = parse_list(str_arg(seq, "seq")?)?;
        let h = hankel_transform(&terms, n)?;
        put_string(out, format::sequence_json(&h));
        Ok(())
    })
}

/// # Safety
/// `a` must be null or a handle returned by this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn riordan_array_free(a: *mut RiordanArray) {
    if !a.is_null() {
        drop(Box::from_raw(a));
    }
}

/// # Safety
/// `s` must be null or a string returned by this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn riordan_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
