//! C interface to `grossone`.
//!
//! Numbers live behind the opaque `GnNumber` handle: create them with
//! `gn_parse`, `gn_from_i64` or `gn_grossone`, release them with `gn_free`.
//! Strings returned by the library are released with `gn_string_free`.
//!
//! Every fallible call returns a [`GnStatus`]; on failure the message is
//! available from `gn_last_error` on the same thread until the next call.
//! Output pointers are written only on success.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use grossone::cli::{paradox_report, ParadoxParams};
use grossone::exprlang::{eval_str, LangError};
use grossone::{Error, GrossNumber, NumberClass, Parity};

/// Opaque handle to an exact gross-number.
pub struct GnNumber(GrossNumber);

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GnStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    Syntax = 3,
    Eval = 4,
    Type = 5,
    UnknownParadox = 6,
    Panic = 7,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GnClass {
    Zero = 0,
    Infinitesimal = 1,
    Finite = 2,
    FiniteWithInfinitesimal = 3,
    Infinite = 4,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GnParity {
    Even = 0,
    Odd = 1,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', "?")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

struct Failure(GnStatus, String);

impl From<LangError> for Failure {
    fn from(e: LangError) -> Self {
        let status = match &e {
            LangError::Lex { .. } | LangError::Parse { .. } => GnStatus::Syntax,
            LangError::Type { .. } | LangError::Arity { .. } | LangError::UnknownName { .. } => GnStatus::Type,
            LangError::Eval(Error::UnknownParadox(_)) => GnStatus::UnknownParadox,
            LangError::Eval(_) => GnStatus::Eval,
        };
        Failure(status, e.to_string())
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::from(LangError::Eval(e))
    }
}

fn null(what: &str) -> Failure {
    Failure(GnStatus::NullArgument, format!("NullArgument: {what}"))
}

/// Run `body`, turning errors and panics into a status code.
fn guard(body: impl FnOnce() -> Result<(), Failure>) -> GnStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => GnStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("Panic: internal error");
            GnStatus::Panic
        }
    }
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure(GnStatus::InvalidUtf8, format!("InvalidUtf8: {what}")))
}

unsafe fn read_num<'a>(p: *const GnNumber, what: &str) -> Result<&'a GrossNumber, Failure> {
    p.as_ref().map(|n| &n.0).ok_or_else(|| null(what))
}

unsafe fn put<T>(out: *mut T, v: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("out"));
    }
    out.write(v);
    Ok(())
}

// Allocate only once `out` is known to be usable, so nothing leaks.
unsafe fn put_num(out: *mut *mut GnNumber, n: GrossNumber) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("out"));
    }
    out.write(boxed(n));
    Ok(())
}

unsafe fn put_str(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("out"));
    }
    out.write(c_string(s));
    Ok(())
}

fn boxed(n: GrossNumber) -> *mut GnNumber {
    Box::into_raw(Box::new(GnNumber(n)))
}

fn c_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', "?")).unwrap_or_default().into_raw()
}

/// Parse and evaluate `src`, which must evaluate to a number.
///
/// # Safety
/// `src` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gn_parse(src: *const c_char, out: *mut *mut GnNumber) -> GnStatus {
    guard(|| {
        let n: GrossNumber = read_str(src, "src")?.parse()?;
        put_num(out, n)
    })
}

#[no_mangle]
pub extern "C" fn gn_from_i64(v: i64) -> *mut GnNumber {
    boxed(GrossNumber::from(v))
}

#[no_mangle]
pub extern "C" fn gn_grossone() -> *mut GnNumber {
    boxed(GrossNumber::grossone())
}

/// # Safety
/// `n` must be null or a handle from this library.
#[no_mangle]
pub unsafe extern "C" fn gn_clone(n: *const GnNumber) -> *mut GnNumber {
    match n.as_ref() {
        Some(n) => boxed(n.0.clone()),
        None => ptr::null_mut(),
    }
}

/// # Safety
/// `n` must be null or a handle from this library not freed before.
#[no_mangle]
pub unsafe extern "C" fn gn_free(n: *mut GnNumber) {
    if !n.is_null() {
        drop(Box::from_raw(n));
    }
}

/// Canonical text of `n`, e.g. `2*G + 1`. Null if `n` is null.
///
/// # Safety
/// `n` must be null or a valid handle. Free the result with `gn_string_free`.
#[no_mangle]
pub unsafe extern "C" fn gn_format(n: *const GnNumber) -> *mut c_char {
    match n.as_ref() {
        Some(n) => c_string(n.0.to_string()),
        None => ptr::null_mut(),
    }
}

/// # Safety
/// `s` must be null or a string returned by this library not freed before.
#[no_mangle]
pub unsafe extern "C" fn gn_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

unsafe fn binary(
    a: *const GnNumber,
    b: *const GnNumber,
    out: *mut *mut GnNumber,
    op: impl FnOnce(&GrossNumber, &GrossNumber) -> Result<GrossNumber, Error>,
) -> GnStatus {
    guard(|| {
        let r = op(read_num(a, "a")?, read_num(b, "b")?)?;
        put_num(out, r)
    })
}

/// # Safety
/// `a`, `b` valid handles, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn gn_add(a: *const GnNumber, b: *const GnNumber, out: *mut *mut GnNumber) -> GnStatus {
    binary(a, b, out, |x, y| Ok(x + y))
}

/// # Safety
/// `a`, `b` valid handles, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn gn_sub(a: *const GnNumber, b: *const GnNumber, out: *mut *mut GnNumber) -> GnStatus {
    binary(a, b, out, |x, y| Ok(x - y))
}

/// # Safety
/// `a`, `b` valid handles, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn gn_mul(a: *const GnNumber, b: *const GnNumber, out: *mut *mut GnNumber) -> GnStatus {
    binary(a, b, out, |x, y| Ok(x * y))
}

/// Exact division; fails with `GN_STATUS_EVAL` when the quotient is not a
/// finite sum of terms.
///
/// # Safety
/// `a`, `b` valid handles, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn gn_div(a: *const GnNumber, b: *const GnNumber, out: *mut *mut GnNumber) -> GnStatus {
    binary(a, b, out, |x, y| x.div_exact(y))
}

/// # Safety
/// `a` valid handle, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn gn_neg(a: *const GnNumber, out: *mut *mut GnNumber) -> GnStatus {
    guard(|| {
        let r = -read_num(a, "a")?;
        put_num(out, r)
    })
}

/// # Safety
/// `a` valid handle, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn gn_pow_int(a: *const GnNumber, k: i64, out: *mut *mut GnNumber) -> GnStatus {
    guard(|| {
        let r = read_num(a, "a")?.pow_int(k)?;
        put_num(out, r)
    })
}

/// Writes -1, 0 or 1 to `out`.
///
/// # Safety
/// `a`, `b` valid handles, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn gn_compare(a: *const GnNumber, b: *const GnNumber, out: *mut i32) -> GnStatus {
    guard(|| {
        let ord = read_num(a, "a")?.compare(read_num(b, "b")?);
        put(out, ord as i32)
    })
}

/// # Safety
/// `a` valid handle, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn gn_classify(a: *const GnNumber, out: *mut GnClass) -> GnStatus {
    guard(|| {
        let c = match read_num(a, "a")?.classify() {
            NumberClass::Zero => GnClass::Zero,
            NumberClass::Infinitesimal => GnClass::Infinitesimal,
            NumberClass::FinitePure => GnClass::Finite,
            NumberClass::FiniteWithInfinitesimalPart => GnClass::FiniteWithInfinitesimal,
            NumberClass::Infinite => GnClass::Infinite,
        };
        put(out, c)
    })
}

/// Parity of a gross-integer; `GN_STATUS_EVAL` for anything else.
///
/// # Safety
/// `a` valid handle, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn gn_parity(a: *const GnNumber, out: *mut GnParity) -> GnStatus {
    guard(|| {
        let p = match read_num(a, "a")?.parity()? {
            Parity::Even => GnParity::Even,
            Parity::Odd => GnParity::Odd,
        };
        put(out, p)
    })
}

/// Substitute `G := t` and write the exact rational as text (`n` or `n/d`).
///
/// # Safety
/// `a` valid handle, `out` writable. Free the result with `gn_string_free`.
#[no_mangle]
pub unsafe extern "C" fn gn_eval_at(a: *const GnNumber, t: u64, out: *mut *mut c_char) -> GnStatus {
    guard(|| {
        let n = read_num(a, "a")?;
        if t == 0 {
            return Err(Failure(GnStatus::Type, "TypeError: substitution value must be positive".into()));
        }
        let r = n.eval_at(t)?;
        put_str(out, GrossNumber::from_rational(r).to_string())
    })
}

/// Evaluate any expression of the language and write the printed value.
///
/// # Safety
/// `src` NUL-terminated, `out` writable. Free the result with `gn_string_free`.
#[no_mangle]
pub unsafe extern "C" fn gn_eval(src: *const c_char, out: *mut *mut c_char) -> GnStatus {
    guard(|| {
        let v = eval_str(read_str(src, "src")?)?;
        put_str(out, v.to_string())
    })
}

/// Same as `gn_eval` with the JSON form of the value.
///
/// # Safety
/// `src` NUL-terminated, `out` writable. Free the result with `gn_string_free`.
#[no_mangle]
pub unsafe extern "C" fn gn_eval_json(src: *const c_char, out: *mut *mut c_char) -> GnStatus {
    guard(|| {
        let v = eval_str(read_str(src, "src")?)?;
        put_str(out, v.to_json().to_string())
    })
}

/// JSON report of a named paradox with default parameters.
///
/// # Safety
/// `name` NUL-terminated, `out` writable. Free the result with `gn_string_free`.
#[no_mangle]
pub unsafe extern "C" fn gn_paradox_json(name: *const c_char, out: *mut *mut c_char) -> GnStatus {
    guard(|| {
        let report = paradox_report(read_str(name, "name")?, &ParadoxParams::default())?;
        put_str(out, report.to_json().to_string())
    })
}

/// Message of the last failed call on this thread, or null. The pointer
/// stays valid until the next call into the library from this thread.
#[no_mangle]
pub extern "C" fn gn_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}
