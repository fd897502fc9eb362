//! C ABI over `einl`.
//!
//! Categories are opaque handles created by `einl_category_*` and released
//! with [`einl_category_free`]. Every fallible call returns an
//! [`EinlStatus`]; on failure the message is available from
//! [`einl_last_error_message`] on the same thread until the next call.
//! Strings returned through out-parameters are owned by the caller and
//! must be released with [`einl_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;
use std::ptr;

use einl::eicat::{CategoryInstance, FiniteGroupTable};
use einl::orbitlab::{check_bijectivity, check_transitivity, orbits};
use einl::Error;

/// Result codes. `EINL_STATUS_OK` is zero; every other value is a failure.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EinlStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    NotPrime = 3,
    TooLarge = 4,
    OutOfRange = 5,
    Parse = 6,
    /// A proved identity failed to hold on the computed data.
    Violation = 7,
    Precondition = 8,
    Unsupported = 9,
    Io = 10,
    Internal = 11,
    Panic = 12,
}

impl From<&Error> for EinlStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::NotPrime(_) => EinlStatus::NotPrime,
            Error::TooLarge { .. } => EinlStatus::TooLarge,
            Error::ObjectOutOfRange { .. } => EinlStatus::OutOfRange,
            Error::Parse { .. } | Error::GroupTable(_) => EinlStatus::Parse,
            Error::Violation { .. } => EinlStatus::Violation,
            Error::Precondition(_) => EinlStatus::Precondition,
            Error::Unsupported(_) => EinlStatus::Unsupported,
            Error::Io(_) => EinlStatus::Io,
            _ => EinlStatus::Internal,
        }
    }
}

/// Opaque handle to a truncated category instance.
pub struct EinlCategory {
    inner: CategoryInstance,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: String) {
    let c = CString::new(message.replace('\0', " ")).expect("interior NULs removed");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

fn clear_error() {
    LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
}

struct Failure(EinlStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(EinlStatus::from(&e), e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(EinlStatus::NullPointer, format!("{what} is NULL"))
}

/// Runs `f`, converting errors and panics into a status and the
/// thread-local message.
fn guarded(f: impl FnOnce() -> Result<(), Failure>) -> EinlStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => EinlStatus::Ok,
        Ok(Err(Failure(status, message))) => {
            set_error(message);
            status
        }
        Err(payload) => {
            let message = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_error(format!("internal panic: {message}"));
            EinlStatus::Panic
        }
    }
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure(EinlStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn category<'a>(cat: *const EinlCategory) -> Result<&'a CategoryInstance, Failure> {
    cat.as_ref().map(|c| &c.inner).ok_or_else(|| null("category"))
}

unsafe fn write<T>(out: *mut T, value: T, what: &str) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null(what));
    }
    out.write(value);
    Ok(())
}

fn boxed(inner: CategoryInstance) -> *mut EinlCategory {
    Box::into_raw(Box::new(EinlCategory { inner }))
}

/// Message of the last failed call on this thread, or NULL. The pointer
/// stays valid until the next `einl_*` call on this thread.
#[no_mangle]
pub extern "C" fn einl_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// `FI_Γ` with `Γ` cyclic of order `gamma_order` (1 gives FI), objects `0..=max_object`.
///
/// # Safety
/// `out` must be NULL or valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn einl_category_fi_gamma(
    gamma_order: usize,
    max_object: usize,
    out: *mut *mut EinlCategory,
) -> EinlStatus {
    guarded(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let gamma = FiniteGroupTable::cyclic(gamma_order)?;
        write(out, boxed(CategoryInstance::fi_gamma(gamma, max_object)), "out")
    })
}

/// `FI_Γ` with `Γ` read from a multiplication-table file.
///
/// # Safety
/// `path` must be NULL or a NUL-terminated string; `out` must be NULL or
/// valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn einl_category_fi_gamma_table(
    path: *const c_char,
    max_object: usize,
    out: *mut *mut EinlCategory,
) -> EinlStatus {
    guarded(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let gamma = FiniteGroupTable::load(Path::new(read_str(path, "path")?))?;
        write(out, boxed(CategoryInstance::fi_gamma(gamma, max_object)), "out")
    })
}

/// VI over `F_q`, `q` prime.
///
/// # Safety
/// `out` must be NULL or valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn einl_category_vi(q: u32, max_object: usize, out: *mut *mut EinlCategory) -> EinlStatus {
    guarded(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        write(out, boxed(CategoryInstance::vi(q, max_object)?), "out")
    })
}

/// VIC over `F_q`, `q` prime.
///
/// # Safety
/// `out` must be NULL or valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn einl_category_vic(q: u32, max_object: usize, out: *mut *mut EinlCategory) -> EinlStatus {
    guarded(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        write(out, boxed(CategoryInstance::vic(q, max_object)?), "out")
    })
}

/// Releases a handle. NULL is ignored.
///
/// # Safety
/// `cat` must be NULL or a handle from `einl_category_*` not yet freed.
#[no_mangle]
pub unsafe extern "C" fn einl_category_free(cat: *mut EinlCategory) {
    if !cat.is_null() {
        drop(Box::from_raw(cat));
    }
}

/// `|C(i,j)|`, by enumeration under the guard.
///
/// # Safety
/// `cat` must be a live handle or NULL; `out` NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn einl_hom_set_size(
    cat: *const EinlCategory,
    i: usize,
    j: usize,
    out: *mut usize,
) -> EinlStatus {
    guarded(|| {
        let cat = category(cat)?;
        write(out, cat.hom_set(i, j)?.len(), "out")
    })
}

/// Number of `H_{i,j}`-orbits on `C(i,j)`, `i < j`.
///
/// # Safety
/// `cat` must be a live handle or NULL; `out` NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn einl_orbit_count(
    cat: *const EinlCategory,
    i: usize,
    j: usize,
    out: *mut usize,
) -> EinlStatus {
    guarded(|| {
        let cat = category(cat)?;
        write(out, orbits(cat, i, j)?.len(), "out")
    })
}

/// Whether `G_j` is transitive on `C(i,j)` for every `i < j ≤ J`.
///
/// # Safety
/// `cat` must be a live handle or NULL; `out` NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn einl_check_transitivity(cat: *const EinlCategory, out: *mut bool) -> EinlStatus {
    guarded(|| {
        let cat = category(cat)?;
        write(out, check_transitivity(cat, cat.max_object())?.passed, "out")
    })
}

/// Least `j₀` such that `μ_{i,j}` is bijective and `m_{i,j}` injective for
/// all `j ∈ [j₀, J-1]`. `*found` is false when there is none.
///
/// # Safety
/// `cat` must be a live handle or NULL; `onset` and `found` NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn einl_bijectivity_onset(
    cat: *const EinlCategory,
    i: usize,
    onset: *mut usize,
    found: *mut bool,
) -> EinlStatus {
    guarded(|| {
        let cat = category(cat)?;
        if onset.is_null() || found.is_null() {
            return Err(null("onset or found"));
        }
        let top = cat.max_object();
        let r = check_bijectivity(cat, i, top.saturating_sub(1))?;
        write(onset, r.onset.unwrap_or(0), "onset")?;
        write(found, r.onset.is_some(), "found")
    })
}

/// Runs a CLI command (`check-conditions`, `orbits`, `stabilize`,
/// `fg-torsion`) with a `key = value` configuration and returns the report.
///
/// # Safety
/// `command` and `config` must be NULL or NUL-terminated strings; `out`
/// NULL or writable. A returned string must be freed with `einl_string_free`.
#[no_mangle]
pub unsafe extern "C" fn einl_run_report(
    command: *const c_char,
    config: *const c_char,
    out: *mut *mut c_char,
) -> EinlStatus {
    guarded(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let command = read_str(command, "command")?;
        let config = read_str(config, "config")?;
        let text = einl::cli::run_with_config_text(command, config)?;
        let c = CString::new(text).map_err(|_| Failure(EinlStatus::Internal, "report contains NUL".into()))?;
        write(out, c.into_raw(), "out")
    })
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must be NULL or a string from `einl_run_report` not yet freed.
#[no_mangle]
pub unsafe extern "C" fn einl_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
