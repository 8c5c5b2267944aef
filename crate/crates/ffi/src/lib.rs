//! C interface to the verification suites.
//!
//! Handles are opaque and owned by the caller; every `*_new`/`tl_run` result
//! must be released with the matching `*_free`.  Functions return a
//! [`TlStatus`]; on failure `tl_last_error` holds a message for the calling
//! thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use twistlab::suites::{emit_report, run_suites, Format, Options, SuiteError, SuiteResult};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TlStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    UnknownSuite = 3,
    InvalidOption = 4,
    Panic = 5,
}

/// Suite options.
pub struct TlOptions(Options);

/// Results of a run, with the rendered JSON cached for `tl_report_json`.
pub struct TlReport {
    results: Vec<SuiteResult>,
    json: Option<CString>,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn fail(status: TlStatus, msg: impl Into<String>) -> TlStatus {
    let msg = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = msg);
    status
}

fn guard(f: impl FnOnce() -> TlStatus) -> TlStatus {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| fail(TlStatus::Panic, "internal panic"))
}

fn suite_err(e: SuiteError) -> TlStatus {
    let s = match e {
        SuiteError::Unknown(_) => TlStatus::UnknownSuite,
        SuiteError::Invalid(_) => TlStatus::InvalidOption,
    };
    fail(s, e.to_string())
}

unsafe fn text<'a>(p: *const c_char) -> Result<&'a str, TlStatus> {
    if p.is_null() {
        return Err(fail(TlStatus::NullPointer, "null string"));
    }
    CStr::from_ptr(p).to_str().map_err(|_| fail(TlStatus::InvalidUtf8, "string is not UTF-8"))
}

/// Message for the last failed call on this thread; empty if none.  Valid
/// until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn tl_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Default options: order 3, max degree 4, seed 0, one job.
#[no_mangle]
pub extern "C" fn tl_options_new() -> *mut TlOptions {
    Box::into_raw(Box::new(TlOptions(Options::default())))
}

/// # Safety
/// `opts` must come from `tl_options_new` and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn tl_options_free(opts: *mut TlOptions) {
    if !opts.is_null() {
        drop(Box::from_raw(opts));
    }
}

unsafe fn with_opts(opts: *mut TlOptions, f: impl FnOnce(&mut Options) -> Result<(), TlStatus>) -> TlStatus {
    let Some(o) = opts.as_mut() else {
        return fail(TlStatus::NullPointer, "null options");
    };
    guard(|| {
        let mut next = o.0.clone();
        if let Err(s) = f(&mut next) {
            return s;
        }
        match next.validate() {
            Ok(()) => {
                o.0 = next;
                TlStatus::Ok
            }
            Err(e) => suite_err(e),
        }
    })
}

/// # Safety
/// `opts` must be a live options handle.
#[no_mangle]
pub unsafe extern "C" fn tl_options_set_order(opts: *mut TlOptions, order: u32) -> TlStatus {
    with_opts(opts, |o| {
        o.order = order as usize;
        Ok(())
    })
}

/// # Safety
/// `opts` must be a live options handle.
#[no_mangle]
pub unsafe extern "C" fn tl_options_set_max_degree(opts: *mut TlOptions, max_degree: u32) -> TlStatus {
    with_opts(opts, |o| {
        o.max_degree = max_degree;
        Ok(())
    })
}

/// # Safety
/// `opts` must be a live options handle.
#[no_mangle]
pub unsafe extern "C" fn tl_options_set_seed(opts: *mut TlOptions, seed: u64) -> TlStatus {
    with_opts(opts, |o| {
        o.seed = seed;
        Ok(())
    })
}

/// # Safety
/// `opts` must be a live options handle.
#[no_mangle]
pub unsafe extern "C" fn tl_options_set_jobs(opts: *mut TlOptions, jobs: u32) -> TlStatus {
    with_opts(opts, |o| {
        o.jobs = jobs as usize;
        Ok(())
    })
}

/// Catalogue name or path to a definition file.
///
/// # Safety
/// `opts` must be a live options handle, `algebra` a NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn tl_options_set_algebra(opts: *mut TlOptions, algebra: *const c_char) -> TlStatus {
    with_opts(opts, |o| {
        let a = text(algebra)?;
        *o = o.clone().with_algebra(a).map_err(suite_err)?;
        Ok(())
    })
}

/// A rational such as "-1/4".
///
/// # Safety
/// `opts` must be a live options handle, `alpha` a NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn tl_options_set_alpha(opts: *mut TlOptions, alpha: *const c_char) -> TlStatus {
    with_opts(opts, |o| {
        let a = text(alpha)?;
        *o = o.clone().with_alpha(a).map_err(suite_err)?;
        Ok(())
    })
}

/// Runs the suites named in `suites` (separated by spaces or commas; "all"
/// runs everything).  A run whose checks fail still returns `Ok`; use
/// `tl_report_passed`.
///
/// # Safety
/// `opts` may be null (defaults); `suites` must be a NUL-terminated string and
/// `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tl_run(opts: *const TlOptions, suites: *const c_char, out: *mut *mut TlReport) -> TlStatus {
    if out.is_null() {
        return fail(TlStatus::NullPointer, "null output pointer");
    }
    *out = ptr::null_mut();
    let names = match text(suites) {
        Ok(s) => s,
        Err(s) => return s,
    };
    let defaults = Options::default();
    let o = opts.as_ref().map_or(&defaults, |o| &o.0);
    guard(|| {
        let names: Vec<&str> = names.split(|c: char| c == ',' || c.is_whitespace()).filter(|s| !s.is_empty()).collect();
        match run_suites(&names, o) {
            Ok(results) => {
                *out = Box::into_raw(Box::new(TlReport { results, json: None }));
                TlStatus::Ok
            }
            Err(e) => suite_err(e),
        }
    })
}

/// 1 if no check failed (flagged checks count as passing), 0 otherwise or
/// for a null handle.
///
/// # Safety
/// `report` must be null or a live report handle.
#[no_mangle]
pub unsafe extern "C" fn tl_report_passed(report: *const TlReport) -> i32 {
    report.as_ref().map_or(0, |r| i32::from(r.results.iter().all(SuiteResult::passed)))
}

/// Number of failed checks across all suites.
///
/// # Safety
/// `report` must be null or a live report handle.
#[no_mangle]
pub unsafe extern "C" fn tl_report_failures(report: *const TlReport) -> u32 {
    report.as_ref().map_or(0, |r| r.results.iter().flat_map(|s| &s.checks).filter(|c| !c.passed()).count() as u32)
}

/// The JSON report.  The string is owned by the report and lives until
/// `tl_report_free` or the next call on the same handle.  Wall times are
/// included only if `timings` is nonzero.
///
/// # Safety
/// `report` must be null or a live report handle.
#[no_mangle]
pub unsafe extern "C" fn tl_report_json(report: *mut TlReport, timings: i32) -> *const c_char {
    let Some(r) = report.as_mut() else {
        fail(TlStatus::NullPointer, "null report");
        return ptr::null();
    };
    let json = emit_report(&r.results, Format::Json, timings != 0);
    r.json = Some(CString::new(json).unwrap_or_default());
    r.json.as_ref().map_or(ptr::null(), |s| s.as_ptr())
}

/// # Safety
/// `report` must come from `tl_run` and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn tl_report_free(report: *mut TlReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}
