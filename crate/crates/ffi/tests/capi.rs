use std::ffi::{CStr, CString};
use std::ptr;

use twistlab_ffi::*;

fn last_error() -> String {
    unsafe { CStr::from_ptr(tl_last_error()) }.to_string_lossy().into_owned()
}

fn run(opts: *const TlOptions, suites: &str) -> (TlStatus, *mut TlReport) {
    let names = CString::new(suites).unwrap();
    let mut out = ptr::null_mut();
    let s = unsafe { tl_run(opts, names.as_ptr(), &mut out) };
    (s, out)
}

#[test]
fn duflo_round_trip() {
    let opts = tl_options_new();
    let (s, report) = run(opts, "duflo");
    assert_eq!(s, TlStatus::Ok);
    unsafe {
        assert_eq!(tl_report_passed(report), 1);
        assert_eq!(tl_report_failures(report), 0);
        let json = CStr::from_ptr(tl_report_json(report, 0)).to_str().unwrap();
        assert!(json.contains("\"name\": \"duflo\""));
        assert!(json.contains("duflo/sl3/alpha=0"));
        assert!(json.contains("\"runtime_ms\": 0"));
        tl_report_free(report);
        tl_options_free(opts);
    }
}

#[test]
fn failing_run_is_data_not_an_error() {
    let opts = tl_options_new();
    let (s, report) = run(opts, "coproduct");
    assert_eq!(s, TlStatus::Ok);
    unsafe {
        assert_eq!(tl_report_passed(report), 0);
        assert_eq!(tl_report_failures(report), 2);
        tl_report_free(report);
        tl_options_free(opts);
    }
}

#[test]
fn unknown_suite() {
    let (s, report) = run(ptr::null(), "spacetime, nosuch");
    assert_eq!(s, TlStatus::UnknownSuite);
    assert!(report.is_null());
    assert!(last_error().contains("valid suites"));
}

#[test]
fn option_validation() {
    let opts = tl_options_new();
    unsafe {
        assert_eq!(tl_options_set_order(opts, 9), TlStatus::InvalidOption);
        assert_eq!(tl_options_set_jobs(opts, 0), TlStatus::InvalidOption);
        let bad = CString::new("1/0").unwrap();
        assert_eq!(tl_options_set_alpha(opts, bad.as_ptr()), TlStatus::InvalidOption);
        let nope = CString::new("e8").unwrap();
        assert_eq!(tl_options_set_algebra(opts, nope.as_ptr()), TlStatus::InvalidOption);
        assert_eq!(tl_options_set_alpha(opts, ptr::null()), TlStatus::NullPointer);
        assert_eq!(tl_options_set_order(ptr::null_mut(), 2), TlStatus::NullPointer);

        // a rejected setter leaves the handle unchanged and usable
        let a = CString::new("-1/2").unwrap();
        let g = CString::new("bplus").unwrap();
        assert_eq!(tl_options_set_alpha(opts, a.as_ptr()), TlStatus::Ok);
        assert_eq!(tl_options_set_algebra(opts, g.as_ptr()), TlStatus::Ok);
        assert_eq!(tl_options_set_order(opts, 2), TlStatus::Ok);
        let (s, report) = run(opts, "duflo");
        assert_eq!(s, TlStatus::Ok);
        let json = CStr::from_ptr(tl_report_json(report, 1)).to_str().unwrap();
        assert!(json.contains("duflo/bplus/alpha=-1/2"));
        assert!(!json.contains("sl2"));
        tl_report_free(report);
        tl_options_free(opts);
    }
}

#[test]
fn null_handles_are_harmless() {
    unsafe {
        tl_options_free(ptr::null_mut());
        tl_report_free(ptr::null_mut());
        assert_eq!(tl_report_passed(ptr::null()), 0);
        assert!(tl_report_json(ptr::null_mut(), 0).is_null());
        let names = CString::new("lie").unwrap();
        assert_eq!(tl_run(ptr::null(), names.as_ptr(), ptr::null_mut()), TlStatus::NullPointer);
    }
}

#[test]
fn header_is_generated() {
    let h = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/twistlab.h")).unwrap();
    for sym in ["tl_run", "tl_report_json", "tl_options_set_alpha", "TlStatus", "TL_STATUS_OK", "typedef struct TlReport TlReport"] {
        assert!(h.contains(sym), "{} missing from header", sym);
    }
}
