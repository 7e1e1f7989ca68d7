//! C ABI over the `hypermaps` library.
//!
//! Results live behind opaque handles. Every call returns an [`HmStatus`];
//! on failure the message is kept per thread and read back with
//! [`hm_last_error_message`]. Strings handed out by the library must be
//! released with [`hm_string_free`], handles with [`hm_count_result_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use hypermaps::engine::count::genus_map_json;
use hypermaps::engine::{count_poly, CountResult};
use hypermaps::exact::format_rational;
use hypermaps::oracle::brute_count;
use hypermaps::Error;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HmStatus {
    Ok = 0,
    InvalidArgument = 1,
    Unsupported = 2,
    OracleCap = 3,
    BelowTruncation = 4,
    Parse = 5,
    Internal = 6,
    NullPointer = 7,
    Panic = 8,
}

/// Counts by genus for one tuple `(l; b_1, …, b_k)`.
pub struct HmCountResult(CountResult);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn status_of(err: &Error) -> HmStatus {
    match err {
        Error::InvalidArgument(_) => HmStatus::InvalidArgument,
        Error::Unsupported(_) => HmStatus::Unsupported,
        Error::OracleCap { .. } => HmStatus::OracleCap,
        Error::BelowTruncation { .. } => HmStatus::BelowTruncation,
        Error::Parse(_) => HmStatus::Parse,
        Error::Internal(_) => HmStatus::Internal,
    }
}

fn guard(f: impl FnOnce() -> Result<(), HmStatus>) -> HmStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => HmStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => {
            set_error("panic inside hypermaps".into());
            HmStatus::Panic
        }
    }
}

fn fail(err: Error) -> HmStatus {
    let s = status_of(&err);
    set_error(err.to_string());
    s
}

fn null(what: &str) -> HmStatus {
    set_error(format!("{what} is null"));
    HmStatus::NullPointer
}

unsafe fn read_parts<'a>(b: *const u64, len: usize) -> Result<&'a [u64], HmStatus> {
    if len == 0 {
        return Ok(&[]);
    }
    if b.is_null() {
        return Err(null("b"));
    }
    Ok(std::slice::from_raw_parts(b, len))
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s)
        .map(CString::into_raw)
        .unwrap_or(ptr::null_mut())
}

/// Exact counts for `l` and face degrees `b[0..len]`. On success `*out`
/// holds a new handle.
///
/// # Safety
/// `b` must point to `len` readable values and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hm_count(
    l: usize,
    b: *const u64,
    len: usize,
    out: *mut *mut HmCountResult,
) -> HmStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        *out = ptr::null_mut();
        let parts = read_parts(b, len)?;
        let res = count_poly(l, parts).map_err(fail)?;
        *out = Box::into_raw(Box::new(HmCountResult(res)));
        Ok(())
    })
}

/// Brute-force counts as a JSON object `{"genus": "p/q", …}`, refusing
/// degrees above `cap`.
///
/// # Safety
/// `b` must point to `len` readable values and `out_json` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hm_brute_count_json(
    l: usize,
    b: *const u64,
    len: usize,
    cap: usize,
    out_json: *mut *mut c_char,
) -> HmStatus {
    guard(|| {
        if out_json.is_null() {
            return Err(null("out_json"));
        }
        *out_json = ptr::null_mut();
        let parts = read_parts(b, len)?;
        let map = brute_count(l, parts, cap).map_err(fail)?;
        *out_json = into_c_string(genus_map_json(&map).to_string());
        Ok(())
    })
}

/// Number of faces `k`.
///
/// # Safety
/// `r` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn hm_count_result_k(r: *const HmCountResult) -> usize {
    r.as_ref().map_or(0, |r| r.0.k())
}

/// Total degree `b_1 + … + b_k`.
///
/// # Safety
/// `r` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn hm_count_result_degree(r: *const HmCountResult) -> u64 {
    r.as_ref().map_or(0, |r| r.0.degree())
}

/// Count at genus `g` as a decimal string `p` or `p/q`.
///
/// # Safety
/// `r` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn hm_count_result_genus(
    r: *const HmCountResult,
    g: u32,
    out: *mut *mut c_char,
) -> HmStatus {
    guard(|| {
        let r = r.as_ref().ok_or_else(|| null("result"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        *out = into_c_string(format_rational(&r.0.genus(g)));
        Ok(())
    })
}

/// Full result as JSON.
///
/// # Safety
/// `r` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn hm_count_result_to_json(
    r: *const HmCountResult,
    out: *mut *mut c_char,
) -> HmStatus {
    guard(|| {
        let r = r.as_ref().ok_or_else(|| null("result"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        *out = into_c_string(r.0.to_json().to_string());
        Ok(())
    })
}

/// # Safety
/// `r` must come from `hm_count` and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn hm_count_result_free(r: *mut HmCountResult) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn hm_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the last failed call on this thread, or null. The pointer
/// stays valid until the next call into the library from this thread.
#[no_mangle]
pub extern "C" fn hm_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}
