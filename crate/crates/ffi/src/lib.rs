//! C interface to `fcat`.
//!
//! Two opaque handles cross the boundary. An [`FcatDocument`] is a parsed
//! input document; an [`FcatResult`] holds what one command-line invocation
//! produced. Every entry point returns an [`FcatStatus`] and writes its
//! product through an out-pointer, so callers never receive a null handle on
//! success. After a non-`OK` status, [`fcat_last_error`] describes the
//! failure on the calling thread.
//!
//! Strings handed out by this library are released with
//! [`fcat_string_free`]; handles with their own `_free` function. Borrowed
//! buffers (such as [`fcat_result_stdout`]) live as long as their handle.

use std::cell::RefCell;
use std::collections::HashMap;
use std::ffi::{c_char, c_int, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::sync::{Mutex, OnceLock};

use fcat::cli::{self, Item, Outcome};

/// Status codes returned by every function in this library.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FcatStatus {
    Ok = 0,
    /// A check ran and at least one law failed.
    CheckFailed = 1,
    /// The command could not run: usage, cap or structural error.
    CommandError = 2,
    NullArgument = 3,
    InvalidUtf8 = 4,
    ParseError = 5,
    Panic = 6,
}

/// A parsed document.
pub struct FcatDocument {
    item: Item,
}

/// The output of one invocation.
pub struct FcatResult {
    outcome: Outcome,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let text = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(text).ok());
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn guarded(f: impl FnOnce() -> FcatStatus) -> FcatStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(p) => {
            let msg = p.downcast_ref::<&str>().map(|s| s.to_string()).or_else(|| p.downcast_ref::<String>().cloned()).unwrap_or_else(|| "panic".into());
            set_error(format!("internal panic: {msg}"));
            FcatStatus::Panic
        }
    }
}

fn status_of(code: i32) -> FcatStatus {
    match code {
        0 => FcatStatus::Ok,
        1 => FcatStatus::CheckFailed,
        _ => FcatStatus::CommandError,
    }
}

fn into_c_string(bytes: Vec<u8>) -> *mut c_char {
    let cleaned: Vec<u8> = bytes.into_iter().filter(|&b| b != 0).collect();
    CString::new(cleaned).map(CString::into_raw).unwrap_or(ptr::null_mut())
}

/// Message describing the most recent failure on this thread, or null. The
/// pointer stays valid until the next call into the library on this thread.
#[no_mangle]
pub extern "C" fn fcat_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn fcat_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Parses `len` bytes of JSON into a document.
///
/// # Safety
/// `bytes` must point to `len` readable bytes and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fcat_document_parse(bytes: *const u8, len: usize, out: *mut *mut FcatDocument) -> FcatStatus {
    guarded(|| {
        if bytes.is_null() || out.is_null() {
            set_error("null argument");
            return FcatStatus::NullArgument;
        }
        let data = unsafe { std::slice::from_raw_parts(bytes, len) };
        match cli::parse_document(data) {
            Ok(item) => {
                unsafe { *out = Box::into_raw(Box::new(FcatDocument { item })) };
                FcatStatus::Ok
            }
            Err(e) => {
                set_error(e.to_string());
                FcatStatus::ParseError
            }
        }
    })
}

/// Kind label of a document, for example `"two_monad"`; a static string.
///
/// # Safety
/// `doc` must be null or a live handle from [`fcat_document_parse`].
#[no_mangle]
pub unsafe extern "C" fn fcat_document_kind(doc: *const FcatDocument) -> *const c_char {
    let Some(doc) = (unsafe { doc.as_ref() }) else { return ptr::null() };
    static LABELS: OnceLock<Mutex<HashMap<&'static str, &'static CStr>>> = OnceLock::new();
    let label = doc.item.kind().label();
    let mut table = LABELS.get_or_init(Default::default).lock().unwrap_or_else(|e| e.into_inner());
    match table.get(label) {
        Some(s) => s.as_ptr(),
        None => match CString::new(label) {
            Ok(s) => table.entry(label).or_insert(Box::leak(s.into_boxed_c_str())).as_ptr(),
            Err(_) => ptr::null(),
        },
    }
}

/// Canonical JSON of a document; free it with [`fcat_string_free`].
///
/// # Safety
/// `doc` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn fcat_document_to_json(doc: *const FcatDocument, out: *mut *mut c_char) -> FcatStatus {
    guarded(|| {
        let Some(doc) = (unsafe { doc.as_ref() }) else {
            set_error("null document");
            return FcatStatus::NullArgument;
        };
        if out.is_null() {
            set_error("null out-pointer");
            return FcatStatus::NullArgument;
        }
        unsafe { *out = into_c_string(cli::serialize_document(&doc.item)) };
        FcatStatus::Ok
    })
}

/// Releases a document. Null is ignored.
///
/// # Safety
/// `doc` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn fcat_document_free(doc: *mut FcatDocument) {
    if !doc.is_null() {
        drop(unsafe { Box::from_raw(doc) });
    }
}

/// Runs the command line `argv[0..argc]` (without a program name) exactly as
/// the `fcat` binary would. The status mirrors the exit code; `*out`
/// receives the result even when a check fails or the command errors.
///
/// # Safety
/// `argv` must hold `argc` NUL-terminated strings and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fcat_run(argc: c_int, argv: *const *const c_char, out: *mut *mut FcatResult) -> FcatStatus {
    guarded(|| {
        if out.is_null() || (argc > 0 && argv.is_null()) {
            set_error("null argument");
            return FcatStatus::NullArgument;
        }
        let mut args = vec!["fcat".to_string()];
        for i in 0..usize::try_from(argc).unwrap_or(0) {
            let p = unsafe { *argv.add(i) };
            if p.is_null() {
                set_error(format!("argv[{i}] is null"));
                return FcatStatus::NullArgument;
            }
            match unsafe { CStr::from_ptr(p) }.to_str() {
                Ok(s) => args.push(s.to_string()),
                Err(_) => {
                    set_error(format!("argv[{i}] is not UTF-8"));
                    return FcatStatus::InvalidUtf8;
                }
            }
        }
        let outcome = cli::run(args);
        let status = status_of(outcome.code);
        if status != FcatStatus::Ok {
            set_error(String::from_utf8_lossy(&outcome.stderr).trim_end().to_string());
        }
        unsafe { *out = Box::into_raw(Box::new(FcatResult { outcome })) };
        status
    })
}

/// Process exit code the invocation would have produced, or -1 for null.
///
/// # Safety
/// `res` must be null or a live handle from [`fcat_run`].
#[no_mangle]
pub unsafe extern "C" fn fcat_result_exit_code(res: *const FcatResult) -> c_int {
    unsafe { res.as_ref() }.map_or(-1, |r| r.outcome.code)
}

/// Borrowed view of the report written to standard output.
///
/// # Safety
/// `res` must be a live handle; `len` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn fcat_result_stdout(res: *const FcatResult, len: *mut usize) -> *const u8 {
    unsafe { buffer(res, len, |r| &r.outcome.stdout) }
}

/// Borrowed view of the diagnostics written to standard error.
///
/// # Safety
/// As for [`fcat_result_stdout`].
#[no_mangle]
pub unsafe extern "C" fn fcat_result_stderr(res: *const FcatResult, len: *mut usize) -> *const u8 {
    unsafe { buffer(res, len, |r| &r.outcome.stderr) }
}

unsafe fn buffer(res: *const FcatResult, len: *mut usize, pick: impl Fn(&FcatResult) -> &Vec<u8>) -> *const u8 {
    let Some(r) = (unsafe { res.as_ref() }) else {
        if !len.is_null() {
            unsafe { *len = 0 };
        }
        return ptr::null();
    };
    let bytes = pick(r);
    if !len.is_null() {
        unsafe { *len = bytes.len() };
    }
    bytes.as_ptr()
}

/// Releases a result. Null is ignored.
///
/// # Safety
/// `res` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn fcat_result_free(res: *mut FcatResult) {
    if !res.is_null() {
        drop(unsafe { Box::from_raw(res) });
    }
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or a string from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn fcat_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}
