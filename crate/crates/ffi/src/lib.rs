//! C interface to `qsemicat`.
//!
//! A workspace document is loaded into an opaque [`QsWorkspace`] handle.
//! Every call returns a [`QsStatus`]; on failure the message is available
//! from [`qs_last_error`] on the same thread. Strings returned through
//! `char **` out-parameters are owned by the caller and released with
//! [`qs_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use qsemicat::completion;
use qsemicat::presheaf::enumerate_presheaves;
use qsemicat::report::{self, PresheafClass, Report};
use qsemicat::{Error, Variance, Workspace};

/// Result of every call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QsStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    /// Malformed document, unknown name or unreadable file.
    Parse = 3,
    /// An object fails its axioms or the inputs do not fit together.
    Invalid = 4,
    NotRegular = 5,
    CapExceeded = 6,
    /// An internal panic was caught at the boundary.
    Panic = 7,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QsVariance {
    Contravariant = 0,
    Covariant = 1,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QsPresheafClass {
    All = 0,
    Regular = 1,
    Yoneda = 2,
}

/// Opaque handle to a loaded workspace.
pub struct QsWorkspace {
    inner: Workspace,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

enum Fail {
    Status(QsStatus, String),
    Lib(Error),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail::Lib(e)
    }
}

fn status_of(e: &Error) -> QsStatus {
    match e {
        Error::Parse(_) => QsStatus::Parse,
        Error::NotRegular(_) => QsStatus::NotRegular,
        Error::EnumerationCapExceeded { .. } | Error::SearchCapExceeded { .. } => QsStatus::CapExceeded,
        _ => QsStatus::Invalid,
    }
}

/// Runs `f` behind the panic boundary and records any error.
fn guard(f: impl FnOnce() -> Result<(), Fail>) -> QsStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => QsStatus::Ok,
        Ok(Err(Fail::Status(s, msg))) => {
            set_error(msg);
            s
        }
        Ok(Err(Fail::Lib(e))) => {
            set_error(e.to_string());
            status_of(&e)
        }
        Err(p) => {
            let msg = p
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| p.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_error(format!("internal panic: {msg}"));
            QsStatus::Panic
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(Fail::Status(QsStatus::NullArgument, format!("{what} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Fail::Status(QsStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn opt_str_arg<'a>(p: *const c_char, what: &str) -> Result<Option<&'a str>, Fail> {
    if p.is_null() {
        Ok(None)
    } else {
        str_arg(p, what).map(Some)
    }
}

unsafe fn ws_arg<'a>(ws: *const QsWorkspace) -> Result<&'a Workspace, Fail> {
    ws.as_ref()
        .map(|w| &w.inner)
        .ok_or_else(|| Fail::Status(QsStatus::NullArgument, "workspace is null".into()))
}

unsafe fn out_arg<'a, T>(p: *mut T) -> Result<&'a mut T, Fail> {
    p.as_mut()
        .ok_or_else(|| Fail::Status(QsStatus::NullArgument, "output pointer is null".into()))
}

fn to_c_string(s: String) -> *mut c_char {
    CString::new(s).expect("JSON has no interior nul").into_raw()
}

unsafe fn write_report(out: *mut *mut c_char, r: Result<Report, Error>) -> Result<(), Fail> {
    let out = out_arg(out)?;
    let r = r?;
    *out = to_c_string(serde_json::to_string(&r.json).expect("json"));
    Ok(())
}

fn variance(v: QsVariance) -> Variance {
    match v {
        QsVariance::Contravariant => Variance::Contravariant,
        QsVariance::Covariant => Variance::Covariant,
    }
}

fn class(c: QsPresheafClass) -> PresheafClass {
    match c {
        QsPresheafClass::All => PresheafClass::All,
        QsPresheafClass::Regular => PresheafClass::Regular,
        QsPresheafClass::Yoneda => PresheafClass::Yoneda,
    }
}

/// Message of the last failed call on this thread, or null. Valid until the
/// next call on the same thread.
#[no_mangle]
pub extern "C" fn qs_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Static name of a status code.
#[no_mangle]
pub extern "C" fn qs_status_name(status: QsStatus) -> *const c_char {
    let s: &'static CStr = match status {
        QsStatus::Ok => c"ok",
        QsStatus::NullArgument => c"null argument",
        QsStatus::InvalidUtf8 => c"invalid utf-8",
        QsStatus::Parse => c"parse error",
        QsStatus::Invalid => c"invalid",
        QsStatus::NotRegular => c"not regular",
        QsStatus::CapExceeded => c"cap exceeded",
        QsStatus::Panic => c"panic",
    };
    s.as_ptr()
}

/// Parses a workspace document. Objects that fail validation do not make
/// this call fail; see `qs_validate_json`.
///
/// # Safety
/// `json` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn qs_workspace_from_json(json: *const c_char, out: *mut *mut QsWorkspace) -> QsStatus {
    guard(|| {
        let out = out_arg(out)?;
        let inner = Workspace::from_json(str_arg(json, "json")?)?;
        *out = Box::into_raw(Box::new(QsWorkspace { inner }));
        Ok(())
    })
}

/// Reads and parses a workspace document from a file.
///
/// # Safety
/// `path` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn qs_workspace_load(path: *const c_char, out: *mut *mut QsWorkspace) -> QsStatus {
    guard(|| {
        let out = out_arg(out)?;
        let inner = Workspace::load(std::path::Path::new(str_arg(path, "path")?))?;
        *out = Box::into_raw(Box::new(QsWorkspace { inner }));
        Ok(())
    })
}

/// Releases a workspace. Null is ignored.
///
/// # Safety
/// `ws` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn qs_workspace_free(ws: *mut QsWorkspace) {
    if !ws.is_null() {
        drop(Box::from_raw(ws));
    }
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn qs_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Validation report as JSON.
///
/// # Safety
/// Pointers must be valid; `ws` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn qs_validate_json(ws: *const QsWorkspace, out: *mut *mut c_char) -> QsStatus {
    guard(|| write_report(out, Ok(report::validate(ws_arg(ws)?))))
}

/// Presheaf listing as JSON. `ty` may be null for every type.
///
/// # Safety
/// Pointers must be valid; strings nul-terminated.
#[no_mangle]
pub unsafe extern "C" fn qs_presheaves_json(
    ws: *const QsWorkspace,
    name: *const c_char,
    ty: *const c_char,
    cls: QsPresheafClass,
    var: QsVariance,
    cap: u64,
    out: *mut *mut c_char,
) -> QsStatus {
    guard(|| {
        let r = report::presheaves(
            ws_arg(ws)?,
            str_arg(name, "name")?,
            opt_str_arg(ty, "type")?,
            class(cls),
            variance(var),
            cap as u128,
        );
        write_report(out, r)
    })
}

/// Morita report as JSON.
///
/// # Safety
/// Pointers must be valid; strings nul-terminated.
#[no_mangle]
pub unsafe extern "C" fn qs_morita_json(
    ws: *const QsWorkspace,
    a: *const c_char,
    b: *const c_char,
    cap: u64,
    out: *mut *mut c_char,
) -> QsStatus {
    guard(|| {
        let r = report::morita(ws_arg(ws)?, str_arg(a, "a")?, str_arg(b, "b")?, cap as u128);
        write_report(out, r)
    })
}

/// Objects and homs of the idempotent completion of a quantaloid, as JSON.
///
/// # Safety
/// Pointers must be valid; strings nul-terminated.
#[no_mangle]
pub unsafe extern "C" fn qs_completion_idm_json(
    ws: *const QsWorkspace,
    quantaloid: *const c_char,
    out: *mut *mut c_char,
) -> QsStatus {
    guard(|| write_report(out, report::completion_idm(ws_arg(ws)?, str_arg(quantaloid, "quantaloid")?)))
}

/// Report on regular semidistributors `a => b` as fixed matrices, as JSON.
///
/// # Safety
/// Pointers must be valid; strings nul-terminated.
#[no_mangle]
pub unsafe extern "C" fn qs_completion_verify_json(
    ws: *const QsWorkspace,
    a: *const c_char,
    b: *const c_char,
    cap: u64,
    out: *mut *mut c_char,
) -> QsStatus {
    guard(|| {
        let r = report::completion_verify(ws_arg(ws)?, str_arg(a, "a")?, str_arg(b, "b")?, cap as u128);
        write_report(out, r)
    })
}

/// Whether a semicategory of the workspace is regular.
///
/// # Safety
/// Pointers must be valid; strings nul-terminated.
#[no_mangle]
pub unsafe extern "C" fn qs_is_regular(ws: *const QsWorkspace, name: *const c_char, out: *mut bool) -> QsStatus {
    guard(|| {
        let out = out_arg(out)?;
        *out = ws_arg(ws)?.semicategory(str_arg(name, "name")?)?.is_regular();
        Ok(())
    })
}

/// Whether a semicategory of the workspace is a category.
///
/// # Safety
/// Pointers must be valid; strings nul-terminated.
#[no_mangle]
pub unsafe extern "C" fn qs_is_category(ws: *const QsWorkspace, name: *const c_char, out: *mut bool) -> QsStatus {
    guard(|| {
        let out = out_arg(out)?;
        *out = ws_arg(ws)?.semicategory(str_arg(name, "name")?)?.is_category();
        Ok(())
    })
}

/// Number of presheaves of one type in a class.
///
/// # Safety
/// Pointers must be valid; strings nul-terminated.
#[no_mangle]
pub unsafe extern "C" fn qs_presheaf_count(
    ws: *const QsWorkspace,
    name: *const c_char,
    ty: *const c_char,
    cls: QsPresheafClass,
    var: QsVariance,
    cap: u64,
    out: *mut u64,
) -> QsStatus {
    guard(|| {
        let out = out_arg(out)?;
        let a = ws_arg(ws)?.semicategory(str_arg(name, "name")?)?;
        let ty = str_arg(ty, "type")?;
        let t = a
            .base()
            .object_id(ty)
            .ok_or_else(|| Error::Parse(format!("unknown type {ty:?}")))?;
        let keep = class(cls);
        let n = enumerate_presheaves(&a, t, variance(var), cap as u128)?
            .iter()
            .filter(|p| keep.keeps(p))
            .count();
        *out = n as u64;
        Ok(())
    })
}

/// Whether two regular semicategories are Morita equivalent.
///
/// # Safety
/// Pointers must be valid; strings nul-terminated.
#[no_mangle]
pub unsafe extern "C" fn qs_morita(
    ws: *const QsWorkspace,
    a: *const c_char,
    b: *const c_char,
    cap: u64,
    out: *mut bool,
) -> QsStatus {
    guard(|| {
        let out = out_arg(out)?;
        *out = report::morita(ws_arg(ws)?, str_arg(a, "a")?, str_arg(b, "b")?, cap as u128)?.ok;
        Ok(())
    })
}

/// Whether regular semidistributors `a => b` coincide with the fixed
/// matrices of the idempotent completion.
///
/// # Safety
/// Pointers must be valid; strings nul-terminated.
#[no_mangle]
pub unsafe extern "C" fn qs_verify_rsdist_idm(
    ws: *const QsWorkspace,
    a: *const c_char,
    b: *const c_char,
    cap: u64,
    out: *mut bool,
) -> QsStatus {
    guard(|| {
        let out = out_arg(out)?;
        let w = ws_arg(ws)?;
        let (sa, sb) = (w.semicategory(str_arg(a, "a")?)?, w.semicategory(str_arg(b, "b")?)?);
        for (n, s) in [(a, &sa), (b, &sb)] {
            if !s.is_regular() {
                let n = str_arg(n, "name")?;
                return Err(Error::NotRegular(format!("{n} is not a regular semicategory")).into());
            }
        }
        *out = completion::verify_rsdist_is_idm_matr(&sa, &sb, cap as u128)?.holds();
        Ok(())
    })
}
