//! C ABI for the `relsub` library.
//!
//! Every fallible call returns a [`RelsubStatus`] and writes its result
//! through an out pointer. Reports and solutions are opaque handles released
//! with their `_free` function; strings returned by the library are released
//! with [`relsub_string_free`]. After a failing call,
//! [`relsub_last_error`] describes the failure on the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, UnwindSafe};
use std::ptr;

use relsub::commands::{self, Equation, SolveInput, SolveReport};
use relsub::dirac::build_gamma_spinor;
use relsub::susy::{build_p4_from_gammas, build_projector};
use relsub::verify::{self, Suite, SuiteReport};
use relsub::Error;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RelsubStatus {
    Ok = 0,
    /// The call ran but a check did not pass.
    VerificationFailed = 1,
    /// Unknown name or invalid number.
    Usage = 2,
    /// Argument outside the documented range.
    Contract = 3,
    /// Physically unusable input.
    Domain = 4,
    NullPointer = 5,
    InvalidUtf8 = 6,
    Panic = 7,
}

/// Opaque verification report.
pub struct RelsubReport {
    inner: SuiteReport,
}

/// Opaque solution basis.
pub struct RelsubSolution {
    inner: SolveReport,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).expect("interior nul removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn fail(status: RelsubStatus, msg: impl Into<String>) -> RelsubStatus {
    set_error(msg);
    status
}

fn from_error(e: Error) -> RelsubStatus {
    let status = match e {
        Error::Usage(_) => RelsubStatus::Usage,
        Error::Contract(_) => RelsubStatus::Contract,
        Error::Domain(_) => RelsubStatus::Domain,
    };
    fail(status, e.to_string())
}

fn guard(f: impl FnOnce() -> RelsubStatus + UnwindSafe) -> RelsubStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    catch_unwind(f).unwrap_or_else(|_| fail(RelsubStatus::Panic, "internal panic"))
}

/// # Safety
/// `s` must be null or a valid NUL-terminated string.
unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, RelsubStatus> {
    if s.is_null() {
        return Err(fail(RelsubStatus::NullPointer, "null string argument"));
    }
    CStr::from_ptr(s).to_str().map_err(|_| fail(RelsubStatus::InvalidUtf8, "string argument is not UTF-8"))
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s).expect("JSON holds no NUL").into_raw()
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn relsub_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Message for the last failing call on this thread, or null. Valid until
/// the next call into the library from the same thread.
#[no_mangle]
pub extern "C" fn relsub_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Runs a verification suite. On `Ok` or `VerificationFailed` a report is
/// written to `out`.
///
/// # Safety
/// `suite` must be a valid NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn relsub_verify(
    suite: *const c_char,
    seed: u64,
    trials: u64,
    tol: f64,
    out: *mut *mut RelsubReport,
) -> RelsubStatus {
    guard(|| {
        if out.is_null() {
            return fail(RelsubStatus::NullPointer, "null out pointer");
        }
        let name = match read_str(suite) {
            Ok(s) => s,
            Err(status) => return status,
        };
        let suite: Suite = match name.parse() {
            Ok(s) => s,
            Err(e) => return from_error(e),
        };
        match verify::run_suite(suite, seed, trials, tol) {
            Ok(report) => {
                let ok = report.ok();
                *out = Box::into_raw(Box::new(RelsubReport { inner: report }));
                if ok {
                    RelsubStatus::Ok
                } else {
                    RelsubStatus::VerificationFailed
                }
            }
            Err(e) => from_error(e),
        }
    })
}

/// # Safety
/// `report` must be null or a handle from [`relsub_verify`].
#[no_mangle]
pub unsafe extern "C" fn relsub_report_passed(report: *const RelsubReport) -> u64 {
    report.as_ref().map_or(0, |r| r.inner.passed)
}

/// # Safety
/// `report` must be null or a handle from [`relsub_verify`].
#[no_mangle]
pub unsafe extern "C" fn relsub_report_failed(report: *const RelsubReport) -> u64 {
    report.as_ref().map_or(0, |r| r.inner.failed)
}

/// NaN for a null handle.
///
/// # Safety
/// `report` must be null or a handle from [`relsub_verify`].
#[no_mangle]
pub unsafe extern "C" fn relsub_report_max_residual(report: *const RelsubReport) -> f64 {
    report.as_ref().map_or(f64::NAN, |r| r.inner.max_residual)
}

/// Canonical JSON of the report; release with [`relsub_string_free`].
///
/// # Safety
/// `report` must be a handle from [`relsub_verify`] and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn relsub_report_json(report: *const RelsubReport, out: *mut *mut c_char) -> RelsubStatus {
    guard(|| match (report.as_ref(), out.is_null()) {
        (Some(r), false) => {
            *out = into_c_string(r.inner.to_json());
            RelsubStatus::Ok
        }
        _ => fail(RelsubStatus::NullPointer, "null report or out pointer"),
    })
}

/// # Safety
/// `report` must be null or a handle from [`relsub_verify`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn relsub_report_free(report: *mut RelsubReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}

/// Solution basis of `equation` (`dirac`, `dkp0`, `dkp1` or `susy`) at
/// spatial momentum `(px, py, pz)` and mass `m`.
///
/// # Safety
/// `equation` must be a valid NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn relsub_solve(
    equation: *const c_char,
    px: f64,
    py: f64,
    pz: f64,
    mass: f64,
    tol: f64,
    out: *mut *mut RelsubSolution,
) -> RelsubStatus {
    guard(|| {
        if out.is_null() {
            return fail(RelsubStatus::NullPointer, "null out pointer");
        }
        let name = match read_str(equation) {
            Ok(s) => s,
            Err(status) => return status,
        };
        let eq: Equation = match name.parse() {
            Ok(e) => e,
            Err(e) => return from_error(e),
        };
        let input = SolveInput { momentum: [px, py, pz], mass };
        match commands::solve(eq, &[input], tol) {
            Ok(report) => {
                let ok = report.passed;
                *out = Box::into_raw(Box::new(RelsubSolution { inner: report }));
                if ok {
                    RelsubStatus::Ok
                } else {
                    RelsubStatus::VerificationFailed
                }
            }
            Err(e) => from_error(e),
        }
    })
}

/// Kernel dimension; zero for a null handle.
///
/// # Safety
/// `solution` must be null or a handle from [`relsub_solve`].
#[no_mangle]
pub unsafe extern "C" fn relsub_solution_dimension(solution: *const RelsubSolution) -> usize {
    solution.as_ref().and_then(|s| s.inner.solutions.first()).map_or(0, |s| s.dimension)
}

/// # Safety
/// `solution` must be a handle from [`relsub_solve`] and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn relsub_solution_json(solution: *const RelsubSolution, out: *mut *mut c_char) -> RelsubStatus {
    guard(|| match (solution.as_ref(), out.is_null()) {
        (Some(s), false) => {
            *out = into_c_string(s.inner.to_json());
            RelsubStatus::Ok
        }
        _ => fail(RelsubStatus::NullPointer, "null solution or out pointer"),
    })
}

/// # Safety
/// `solution` must be null or a handle from [`relsub_solve`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn relsub_solution_free(solution: *mut RelsubSolution) {
    if !solution.is_null() {
        drop(Box::from_raw(solution));
    }
}

/// `Ok` when `¼(3 + γ⁵ − γ⁰γ³ + iγ¹γ²)` equals `diag(1, 1, 1, 0)` exactly.
#[no_mangle]
pub extern "C" fn relsub_check_p4() -> RelsubStatus {
    guard(|| {
        let rep = build_gamma_spinor();
        match build_projector(4) {
            Ok(p4) if build_p4_from_gammas(&rep) == p4.matrix => RelsubStatus::Ok,
            Ok(_) => fail(RelsubStatus::VerificationFailed, "projector formula mismatch"),
            Err(e) => from_error(e),
        }
    })
}

/// # Safety
/// `s` must be null or a string returned by this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn relsub_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn status_values_match_cli_exit_codes() {
        assert_eq!(RelsubStatus::Ok as i32, 0);
        assert_eq!(RelsubStatus::VerificationFailed as i32, 1);
        assert_eq!(RelsubStatus::Usage as i32, 2);
    }

    #[test]
    fn version_is_nul_terminated() {
        let v = unsafe { CStr::from_ptr(relsub_version()) };
        assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
    }
}
