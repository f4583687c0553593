//! C interface to `solvmodel`. Every function returns an [`SmStatus`];
//! results come back through out-pointers and the message of the most recent
//! failure on the calling thread is available from [`sm_last_error`].
//!
//! Handles returned by this library must be released with the matching
//! `*_free` function. Strings handed out are NUL-terminated UTF-8.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use solvmodel::cli::{run_audit, CliError, LieAlgebraFile, PipelineOptions};
use solvmodel::gca::cohomology;
use solvmodel::liealg::{abelian, benson_gordon, heisenberg3, LieAlgebra};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SmStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidAlgebra = 4,
    UnknownName = 5,
    Computation = 6,
    BufferTooSmall = 7,
    Panic = 8,
}

/// Validated Lie algebra together with the basis name of the complement of
/// its nilradical, if one is known.
pub struct SmAlgebra {
    algebra: LieAlgebra,
    s: Option<String>,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

fn fail(status: SmStatus, msg: impl Into<String>) -> SmStatus {
    set_error(msg);
    status
}

fn status_of(e: &CliError) -> SmStatus {
    match e {
        CliError::Parse { .. } | CliError::Io { .. } => SmStatus::Parse,
        CliError::Record { .. } | CliError::Validation(_) => SmStatus::InvalidAlgebra,
        CliError::Usage(_) => SmStatus::UnknownName,
        _ => SmStatus::Computation,
    }
}

fn guard(f: impl FnOnce() -> SmStatus) -> SmStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| fail(SmStatus::Panic, "internal panic"))
}

unsafe fn read_str<'a>(p: *const c_char) -> Result<&'a str, SmStatus> {
    if p.is_null() {
        return Err(fail(SmStatus::NullPointer, "null string argument"));
    }
    CStr::from_ptr(p).to_str().map_err(|_| fail(SmStatus::InvalidUtf8, "argument is not UTF-8"))
}

fn hand_out(out: *mut *mut SmAlgebra, a: SmAlgebra) -> SmStatus {
    unsafe { *out = Box::into_raw(Box::new(a)) };
    SmStatus::Ok
}

/// Message describing the last failure on this thread, or NULL. The pointer
/// stays valid until the next call into this library from the same thread.
#[no_mangle]
pub extern "C" fn sm_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Parse and validate a Lie algebra from its JSON file format.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sm_algebra_from_json(json: *const c_char, out: *mut *mut SmAlgebra) -> SmStatus {
    guard(|| {
        if out.is_null() {
            return fail(SmStatus::NullPointer, "null output pointer");
        }
        let text = match read_str(json) {
            Ok(t) => t,
            Err(s) => return s,
        };
        let parsed = LieAlgebraFile::parse(text).and_then(|f| f.to_algebra().map(|g| (g, f.s)));
        match parsed {
            Ok((algebra, s)) => hand_out(out, SmAlgebra { algebra, s }),
            Err(e) => fail(status_of(&e), e.to_string()),
        }
    })
}

/// One of the bundled algebras: `benson_gordon`, `heisenberg3` or
/// `abelian_<k>`.
///
/// # Safety
/// `name` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sm_algebra_builtin(name: *const c_char, out: *mut *mut SmAlgebra) -> SmStatus {
    guard(|| {
        if out.is_null() {
            return fail(SmStatus::NullPointer, "null output pointer");
        }
        let name = match read_str(name) {
            Ok(t) => t,
            Err(s) => return s,
        };
        let a = match name {
            "benson_gordon" => SmAlgebra { algebra: benson_gordon(), s: Some("S".into()) },
            "heisenberg3" => SmAlgebra { algebra: heisenberg3(), s: None },
            other => match other.strip_prefix("abelian_").and_then(|k| k.parse::<usize>().ok()) {
                Some(k) if (1..=8).contains(&k) => SmAlgebra { algebra: abelian(k), s: Some("E1".into()) },
                _ => return fail(SmStatus::UnknownName, format!("no bundled algebra named {other:?}")),
            },
        };
        hand_out(out, a)
    })
}

/// # Safety
/// `algebra` must come from this library and not have been freed; NULL is
/// ignored.
#[no_mangle]
pub unsafe extern "C" fn sm_algebra_free(algebra: *mut SmAlgebra) {
    if !algebra.is_null() {
        drop(Box::from_raw(algebra));
    }
}

/// # Safety
/// `algebra` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sm_algebra_dimension(algebra: *const SmAlgebra, out: *mut usize) -> SmStatus {
    guard(|| match (algebra.as_ref(), out.is_null()) {
        (Some(a), false) => {
            *out = a.algebra.dimension();
            SmStatus::Ok
        }
        _ => fail(SmStatus::NullPointer, "null argument"),
    })
}

/// Betti numbers `b_0, …, b_n` of the algebra. `capacity` is the length of
/// `betti`; `written` receives `n + 1` even when the buffer is too small.
///
/// # Safety
/// `betti` must point to `capacity` writable elements; `written` must be valid.
#[no_mangle]
pub unsafe extern "C" fn sm_algebra_betti(
    algebra: *const SmAlgebra,
    betti: *mut usize,
    capacity: usize,
    written: *mut usize,
) -> SmStatus {
    guard(|| {
        let Some(a) = algebra.as_ref() else {
            return fail(SmStatus::NullPointer, "null algebra");
        };
        if written.is_null() || (betti.is_null() && capacity > 0) {
            return fail(SmStatus::NullPointer, "null output pointer");
        }
        let numbers = match a.algebra.ce_complex().map_err(|e| e.to_string()).and_then(|(alg, d)| {
            cohomology(&alg, &d, a.algebra.dimension() as u32).map_err(|e| e.to_string())
        }) {
            Ok(h) => h.betti_numbers(),
            Err(e) => return fail(SmStatus::Computation, e),
        };
        *written = numbers.len();
        if capacity < numbers.len() {
            return fail(SmStatus::BufferTooSmall, format!("need room for {} entries", numbers.len()));
        }
        ptr::copy_nonoverlapping(numbers.as_ptr(), betti, numbers.len());
        SmStatus::Ok
    })
}

/// Run the full audit. `s_name` selects the complement of the nilradical by
/// basis name; NULL uses the one recorded with the algebra. On success
/// `report_json` receives the report (free with [`sm_string_free`]) and
/// `exit_code` the command-line exit status: 0 for a certificate, 2 when
/// inconclusive.
///
/// # Safety
/// `algebra` must be a live handle, `s_name` NULL or a NUL-terminated string,
/// and the output pointers valid.
#[no_mangle]
pub unsafe extern "C" fn sm_audit_json(
    algebra: *const SmAlgebra,
    s_name: *const c_char,
    report_json: *mut *mut c_char,
    exit_code: *mut i32,
) -> SmStatus {
    guard(|| {
        let Some(a) = algebra.as_ref() else {
            return fail(SmStatus::NullPointer, "null algebra");
        };
        if report_json.is_null() || exit_code.is_null() {
            return fail(SmStatus::NullPointer, "null output pointer");
        }
        let key = if s_name.is_null() {
            match &a.s {
                Some(s) => s.as_str(),
                None => return fail(SmStatus::UnknownName, "no complement S recorded; pass s_name"),
            }
        } else {
            match read_str(s_name) {
                Ok(s) => s,
                Err(s) => return s,
            }
        };
        let s = match a.algebra.resolve(key) {
            Ok(i) => i,
            Err(e) => return fail(SmStatus::UnknownName, e.to_string()),
        };
        match run_audit(&a.algebra, &PipelineOptions::new(s)) {
            Ok((report, _)) => {
                let text = CString::new(report.to_json()).expect("JSON has no NUL bytes");
                *report_json = text.into_raw();
                *exit_code = if report.is_certificate() { 0 } else { 2 };
                SmStatus::Ok
            }
            Err(e) => fail(status_of(&e), e.to_string()),
        }
    })
}

/// # Safety
/// `s` must be NULL or a string returned by this library.
#[no_mangle]
pub unsafe extern "C" fn sm_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
