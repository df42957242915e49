//! C ABI over `fuzzdyn`.
//!
//! Fuzzy sets cross the boundary as opaque `FdFuzzySet` handles built from
//! the JSON file format. Every call returns an `FdStatus`; on failure the
//! message is kept per thread and read with `fd_last_error`. Strings
//! returned through `char **` are owned by the caller and released with
//! `fd_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use fuzzdyn::dynamics::{fuzzy_witness, MetricKind};
use fuzzdyn::fuzzy::StepFuzzySet;
use fuzzdyn::ground::MapSpec;
use fuzzdyn::io::{fuzzy_set_to_json, parse_fuzzy_set};
use fuzzdyn::{Error, Rational};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FdStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    Invalid = 4,
    SpaceMismatch = 5,
    NoMixingOracle = 6,
    PostCheckFailed = 7,
    NonPositiveEpsilon = 8,
    BufferTooSmall = 9,
    Panic = 10,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FdMetric {
    Infty = 0,
    Skorokhod = 1,
    Sendo = 2,
}

/// Opaque handle to a validated step fuzzy set.
pub struct FdFuzzySet {
    inner: StepFuzzySet,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> FdStatus {
    match e {
        Error::Parse(_) => FdStatus::Parse,
        Error::SpaceMismatch => FdStatus::SpaceMismatch,
        Error::NoMixingOracle => FdStatus::NoMixingOracle,
        Error::PostCheckFailed(_) => FdStatus::PostCheckFailed,
        Error::NonPositiveEpsilon => FdStatus::NonPositiveEpsilon,
        _ => FdStatus::Invalid,
    }
}

struct Fail(FdStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn guard(body: impl FnOnce() -> Result<(), Fail>) -> FdStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => FdStatus::Ok,
        Ok(Err(Fail(status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            FdStatus::Panic
        }
    }
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(Fail(FdStatus::NullArgument, format!("{what} is null")));
    }
    CStr::from_ptr(p).to_str().map_err(|_| Fail(FdStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn handle<'a>(p: *const FdFuzzySet, what: &str) -> Result<&'a StepFuzzySet, Fail> {
    p.as_ref().map(|h| &h.inner).ok_or_else(|| Fail(FdStatus::NullArgument, format!("{what} is null")))
}

fn owned_string(s: String) -> *mut c_char {
    CString::new(s).expect("library output has no nul bytes").into_raw()
}

/// Parses a fuzzy set from JSON. On success `*out` receives a handle to be
/// released with `fd_fuzzy_set_free`.
///
/// # Safety
/// `json` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fd_fuzzy_set_from_json(json: *const c_char, out: *mut *mut FdFuzzySet) -> FdStatus {
    guard(|| {
        if out.is_null() {
            return Err(Fail(FdStatus::NullArgument, "out is null".into()));
        }
        *out = ptr::null_mut();
        let u = parse_fuzzy_set(text(json, "json")?)?;
        *out = Box::into_raw(Box::new(FdFuzzySet { inner: u }));
        Ok(())
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `u` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn fd_fuzzy_set_free(u: *mut FdFuzzySet) {
    if !u.is_null() {
        drop(Box::from_raw(u));
    }
}

/// Canonical JSON for a fuzzy set, in `*out`.
///
/// # Safety
/// `u` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fd_fuzzy_set_to_json(u: *const FdFuzzySet, out: *mut *mut c_char) -> FdStatus {
    guard(|| {
        if out.is_null() {
            return Err(Fail(FdStatus::NullArgument, "out is null".into()));
        }
        *out = owned_string(fuzzy_set_to_json(handle(u, "u")?));
        Ok(())
    })
}

/// Writes the exact distance as `"p/q"` into `buf` (nul-terminated).
/// `*needed` receives the buffer size required, including the terminator;
/// if `len` is smaller the call fails with `FD_STATUS_BUFFER_TOO_SMALL`.
///
/// # Safety
/// `u`, `v` must be live handles; `buf` must hold `len` bytes; `needed` may
/// be null.
#[no_mangle]
pub unsafe extern "C" fn fd_metric(
    kind: FdMetric,
    u: *const FdFuzzySet,
    v: *const FdFuzzySet,
    buf: *mut c_char,
    len: usize,
    needed: *mut usize,
) -> FdStatus {
    guard(|| {
        let kind = match kind {
            FdMetric::Infty => MetricKind::Infty,
            FdMetric::Skorokhod => MetricKind::Skorokhod,
            FdMetric::Sendo => MetricKind::Sendo,
        };
        let d = kind.distance(handle(u, "u")?, handle(v, "v")?)?.to_string();
        let size = d.len() + 1;
        if !needed.is_null() {
            *needed = size;
        }
        if buf.is_null() || len < size {
            return Err(Fail(FdStatus::BufferTooSmall, format!("distance needs {size} bytes")));
        }
        ptr::copy_nonoverlapping(d.as_ptr(), buf as *mut u8, d.len());
        *buf.add(d.len()) = 0;
        Ok(())
    })
}

/// Builds a transitivity witness from `u` towards `v` under the map
/// descriptor `map` (e.g. `"tent"`) with radius `eps` (e.g. `"1/8"`).
/// `*cert_json` receives the certificate; `*iterate`, if non-null, the
/// iterate `n`.
///
/// # Safety
/// Strings must be nul-terminated; handles live; `cert_json` valid.
#[no_mangle]
pub unsafe extern "C" fn fd_witness(
    map: *const c_char,
    u: *const FdFuzzySet,
    v: *const FdFuzzySet,
    eps: *const c_char,
    cert_json: *mut *mut c_char,
    iterate: *mut u64,
) -> FdStatus {
    guard(|| {
        if cert_json.is_null() {
            return Err(Fail(FdStatus::NullArgument, "cert_json is null".into()));
        }
        *cert_json = ptr::null_mut();
        let spec: MapSpec = text(map, "map")?.parse()?;
        let eps: Rational = text(eps, "eps")?.parse().map_err(Error::from)?;
        let (u, v) = (handle(u, "u")?, handle(v, "v")?);
        let f = spec.build(u.space())?;
        let cert = fuzzy_witness(&f, u, v, &eps)?;
        if !iterate.is_null() {
            *iterate = cert.n as u64;
        }
        *cert_json = owned_string(serde_json::to_string(&cert).expect("certificates serialize"));
        Ok(())
    })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn fd_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the most recent failure on this thread; empty if none.
/// Valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn fd_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn last_error_starts_empty() {
        let msg = unsafe { CStr::from_ptr(fd_last_error()) };
        assert!(msg.to_bytes().is_empty());
    }
}
