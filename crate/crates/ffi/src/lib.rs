//! C ABI over `chroma`. Objects cross the boundary as opaque handles, every
//! fallible call returns a [`ChromaStatus`], and the message for the most
//! recent failure on the calling thread is available from
//! [`chroma_last_error_message`]. Strings returned through `char **out`
//! parameters are owned by the caller and released with
//! [`chroma_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use chroma::chromatic::{integral_map, positivity_report};
use chroma::combinat::UnitIntervalOrder;
use chroma::corrects::covering_corrects_count;
use chroma::ghom::{power_g, GAnalogueContext};
use chroma::symfunc::Basis;
use chroma::verify::{run_suite, Suite};
use chroma::Error;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChromaStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    InvalidArgument = 4,
    TooLarge = 5,
    /// A verification ran and found a failing instance.
    VerificationFailed = 6,
    Io = 7,
    /// A Rust panic was caught at the boundary.
    Internal = 8,
}

/// A unit interval order.
pub struct ChromaUio {
    inner: UnitIntervalOrder,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let c = CString::new(msg.into().replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> ChromaStatus {
    match e {
        Error::Parse { .. } | Error::MalformedNext { .. } | Error::InvalidPartition(_) => ChromaStatus::ParseError,
        Error::TooLarge(_) => ChromaStatus::TooLarge,
        Error::Io(_) | Error::CacheCorrupt(_) => ChromaStatus::Io,
        _ => ChromaStatus::InvalidArgument,
    }
}

/// Runs `f`, translating errors and panics into a status and the thread's
/// last-error message.
fn guard(f: impl FnOnce() -> Result<(), (ChromaStatus, String)>) -> ChromaStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => ChromaStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            ChromaStatus::Internal
        }
    }
}

fn lift<T>(r: chroma::Result<T>) -> Result<T, (ChromaStatus, String)> {
    r.map_err(|e| (status_of(&e), e.to_string()))
}

fn null(what: &str) -> (ChromaStatus, String) {
    (ChromaStatus::NullPointer, format!("{what} is null"))
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, (ChromaStatus, String)> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p).to_str().map_err(|_| (ChromaStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn uio_ref<'a>(u: *const ChromaUio) -> Result<&'a UnitIntervalOrder, (ChromaStatus, String)> {
    u.as_ref().map(|h| &h.inner).ok_or_else(|| null("uio"))
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), (ChromaStatus, String)> {
    if out.is_null() {
        return Err(null("out"));
    }
    let c = CString::new(s).map_err(|_| (ChromaStatus::Internal, "output contains a nul byte".to_owned()))?;
    *out = c.into_raw();
    Ok(())
}

fn boxed(u: UnitIntervalOrder) -> *mut ChromaUio {
    Box::into_raw(Box::new(ChromaUio { inner: u }))
}

/// Builds a UIO from a 1-based next-vector of length `len`.
///
/// # Safety
/// `next` must point to `len` readable values and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn chroma_uio_from_next(
    next: *const usize,
    len: usize,
    out: *mut *mut ChromaUio,
) -> ChromaStatus {
    guard(|| {
        if next.is_null() || out.is_null() {
            return Err(null("argument"));
        }
        let u = lift(UnitIntervalOrder::from_next(std::slice::from_raw_parts(next, len)))?;
        *out = boxed(u);
        Ok(())
    })
}

/// Parses a comma-separated 1-based next-vector such as `"3,4,4"`.
///
/// # Safety
/// `text` must be a nul-terminated string and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn chroma_uio_parse(text: *const c_char, out: *mut *mut ChromaUio) -> ChromaStatus {
    guard(|| {
        let s = read_str(text, "text")?;
        if out.is_null() {
            return Err(null("out"));
        }
        *out = boxed(lift(s.parse())?);
        Ok(())
    })
}

/// Releases a handle; null is ignored.
///
/// # Safety
/// `u` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn chroma_uio_free(u: *mut ChromaUio) {
    if !u.is_null() {
        drop(Box::from_raw(u));
    }
}

/// Number of elements, or 0 for null.
///
/// # Safety
/// `u` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn chroma_uio_len(u: *const ChromaUio) -> usize {
    u.as_ref().map_or(0, |h| h.inner.len())
}

/// The chromatic symmetric function of the incomparability graph as JSON:
/// `{"basis": "e", "coefficients": {"2,1": 1, "3": 3}, "ePositive": true,
/// "sPositive": true}`. `basis` is one of `"e"`, `"m"`, `"p"`, `"s"`.
///
/// # Safety
/// `u` must be a live handle, `basis` a nul-terminated string and `out`
/// writable.
#[no_mangle]
pub unsafe extern "C" fn chroma_csf_json(
    u: *const ChromaUio,
    basis: *const c_char,
    out: *mut *mut c_char,
) -> ChromaStatus {
    guard(|| {
        let u = uio_ref(u)?;
        let basis: Basis = lift(read_str(basis, "basis")?.parse())?;
        let report = lift(positivity_report(&u.inc_graph()))?;
        let f = lift(report.in_basis(basis))?;
        let v = serde_json::json!({
            "basis": basis.symbol(),
            "coefficients": integral_map(&f),
            "ePositive": report.e_positive,
            "sPositive": report.s_positive,
        });
        write_string(out, v.to_string())
    })
}

/// The power-sum analogue `p_k^G` as polynomial JSON.
///
/// # Safety
/// `u` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn chroma_power_g_json(u: *const ChromaUio, k: usize, out: *mut *mut c_char) -> ChromaStatus {
    guard(|| {
        let u = uio_ref(u)?;
        let p = power_g(&GAnalogueContext::for_uio(u), k);
        write_string(out, p.to_json().to_string())
    })
}

/// Corrects of length `n` that use every element once.
///
/// # Safety
/// `u` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn chroma_covering_corrects_count(u: *const ChromaUio, out: *mut u64) -> ChromaStatus {
    guard(|| {
        let u = uio_ref(u)?;
        if out.is_null() {
            return Err(null("out"));
        }
        *out = covering_corrects_count(u);
        Ok(())
    })
}

/// Runs a verification suite and writes its JSON report. Zero bounds select
/// the suite's defaults. Returns `ChromaStatus::VerificationFailed` (with the
/// report still written) when any check fails.
///
/// # Safety
/// `suite` must be a nul-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn chroma_verify_json(
    suite: *const c_char,
    max_n: usize,
    max_k: usize,
    out: *mut *mut c_char,
) -> ChromaStatus {
    let mut failed = false;
    let status = guard(|| {
        let suite: Suite = lift(read_str(suite, "suite")?.parse())?;
        let mut bounds = suite.default_bounds();
        if max_n > 0 {
            bounds.max_n = max_n;
        }
        if max_k > 0 {
            bounds.max_k = max_k;
        }
        let report = lift(run_suite(suite, &bounds))?;
        failed = !report.passed();
        write_string(out, report.to_json().to_string())
    });
    if status == ChromaStatus::Ok && failed {
        set_error("verification failed");
        return ChromaStatus::VerificationFailed;
    }
    status
}

/// Message for the last failure on this thread, or null. The pointer stays
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn chroma_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by this library; null is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn chroma_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
