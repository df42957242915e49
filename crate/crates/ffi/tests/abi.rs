use std::ffi::{CStr, CString};
use std::os::raw::c_char;
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use fuzzdyn_ffi::*;

fn parse(json: &str) -> *mut FdFuzzySet {
    let c = CString::new(json).unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { fd_fuzzy_set_from_json(c.as_ptr(), &mut out) }, FdStatus::Ok);
    assert!(!out.is_null());
    out
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(fd_last_error()) }.to_string_lossy().into_owned()
}

const A: &str = r#"{"space":"interval","levels":["3/5","1"],"cuts":[["0","1"],["0"]]}"#;
const B: &str = r#"{"space":"interval","levels":["1/2","1"],"cuts":[["0","1"],["0"]]}"#;

#[test]
fn metric_into_buffer() {
    let (a, b) = (parse(A), parse(B));
    let mut buf = [0 as c_char; 16];
    let mut needed = 0usize;
    let s = unsafe { fd_metric(FdMetric::Skorokhod, a, b, buf.as_mut_ptr(), buf.len(), &mut needed) };
    assert_eq!(s, FdStatus::Ok);
    assert_eq!(unsafe { CStr::from_ptr(buf.as_ptr()) }.to_str().unwrap(), "1/10");
    assert_eq!(needed, 5);

    let s = unsafe { fd_metric(FdMetric::Infty, a, b, buf.as_mut_ptr(), 1, &mut needed) };
    assert_eq!(s, FdStatus::BufferTooSmall);
    assert_eq!(needed, 2);
    unsafe {
        fd_fuzzy_set_free(a);
        fd_fuzzy_set_free(b);
    }
}

#[test]
fn parse_failures_report() {
    let bad = CString::new(r#"{"space":"interval","levels":["1"],"cuts":[[]]}"#).unwrap();
    let mut out = ptr::null_mut();
    let s = unsafe { fd_fuzzy_set_from_json(bad.as_ptr(), &mut out) };
    assert_eq!(s, FdStatus::Invalid);
    assert!(out.is_null());
    assert!(!last_error().is_empty());

    let s = unsafe { fd_fuzzy_set_from_json(ptr::null(), &mut out) };
    assert_eq!(s, FdStatus::NullArgument);
    let s = unsafe { fd_metric(FdMetric::Infty, ptr::null(), ptr::null(), ptr::null_mut(), 0, ptr::null_mut()) };
    assert_eq!(s, FdStatus::NullArgument);
}

#[test]
fn json_round_trip() {
    let a = parse(A);
    let mut text = ptr::null_mut();
    assert_eq!(unsafe { fd_fuzzy_set_to_json(a, &mut text) }, FdStatus::Ok);
    let json = unsafe { CStr::from_ptr(text) }.to_str().unwrap().to_string();
    let again = parse(&json);
    let mut buf = [0 as c_char; 8];
    assert_eq!(unsafe { fd_metric(FdMetric::Sendo, a, again, buf.as_mut_ptr(), 8, ptr::null_mut()) }, FdStatus::Ok);
    assert_eq!(unsafe { CStr::from_ptr(buf.as_ptr()) }.to_str().unwrap(), "0");
    unsafe {
        fd_string_free(text);
        fd_fuzzy_set_free(a);
        fd_fuzzy_set_free(again);
    }
}

#[test]
fn witness_and_oracle_errors() {
    let u = parse(r#"{"space":"interval","levels":["1"],"cuts":[["1/2"]]}"#);
    let v = parse(r#"{"space":"interval","levels":["1"],"cuts":[["1/4"]]}"#);
    let (tent, eps) = (CString::new("tent").unwrap(), CString::new("1/8").unwrap());
    let mut cert = ptr::null_mut();
    let mut n = 0u64;
    assert_eq!(unsafe { fd_witness(tent.as_ptr(), u, v, eps.as_ptr(), &mut cert, &mut n) }, FdStatus::Ok);
    assert!(n >= 1);
    let json: serde_json::Value = serde_json::from_str(unsafe { CStr::from_ptr(cert) }.to_str().unwrap()).unwrap();
    assert_eq!(json["n"].as_u64(), Some(n));
    unsafe { fd_string_free(cert) };

    let zero = CString::new("0").unwrap();
    assert_eq!(unsafe { fd_witness(tent.as_ptr(), u, v, zero.as_ptr(), &mut cert, &mut n) }, FdStatus::NonPositiveEpsilon);

    let c = parse(r#"{"space":"circle","levels":["1"],"cuts":[["0"]]}"#);
    let rot = CString::new("rotation:1/3").unwrap();
    assert_eq!(unsafe { fd_witness(rot.as_ptr(), c, c, eps.as_ptr(), &mut cert, &mut n) }, FdStatus::NoMixingOracle);
    assert!(cert.is_null());
    unsafe {
        fd_fuzzy_set_free(u);
        fd_fuzzy_set_free(v);
        fd_fuzzy_set_free(c);
    }
}

#[test]
fn header_is_valid_c() {
    let header = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("include/fuzzdyn.h");
    let text = std::fs::read_to_string(&header).unwrap();
    for name in ["fd_fuzzy_set_from_json", "fd_metric", "fd_witness", "fd_last_error", "FD_STATUS_OK"] {
        assert!(text.contains(name), "{name} missing from header");
    }
    // compile check only when a C compiler is around
    if let Ok(out) = Command::new("cc").args(["-fsyntax-only", "-x", "c"]).arg(&header).output() {
        assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    }
}
