use std::ffi::{CStr, CString};
use std::ptr;

use fcat::cli::{serialize_document, Item};
use fcat::fincat::fixtures::terminal;
use fcat_ffi::*;

fn terminal_json() -> Vec<u8> {
    serialize_document(&Item::Category(std::sync::Arc::new(terminal())))
}

fn run(args: &[&str]) -> (FcatStatus, *mut FcatResult) {
    let owned: Vec<CString> = args.iter().map(|a| CString::new(*a).unwrap()).collect();
    let ptrs: Vec<*const std::ffi::c_char> = owned.iter().map(|c| c.as_ptr()).collect();
    let mut out = ptr::null_mut();
    let status = unsafe { fcat_run(ptrs.len() as i32, ptrs.as_ptr(), &mut out) };
    (status, out)
}

fn stdout_of(res: *const FcatResult) -> String {
    let mut len = 0;
    let p = unsafe { fcat_result_stdout(res, &mut len) };
    String::from_utf8(unsafe { std::slice::from_raw_parts(p, len) }.to_vec()).unwrap()
}

#[test]
fn parse_and_reserialize_round_trips() {
    let json = terminal_json();
    let mut doc = ptr::null_mut();
    assert_eq!(unsafe { fcat_document_parse(json.as_ptr(), json.len(), &mut doc) }, FcatStatus::Ok);
    let kind = unsafe { CStr::from_ptr(fcat_document_kind(doc)) };
    assert_eq!(kind.to_str().unwrap(), "category");
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { fcat_document_to_json(doc, &mut s) }, FcatStatus::Ok);
    assert_eq!(unsafe { CStr::from_ptr(s) }.to_bytes(), &json[..]);
    unsafe {
        fcat_string_free(s);
        fcat_document_free(doc);
    }
}

#[test]
fn parse_errors_set_the_message() {
    let bad = b"{ nope";
    let mut doc = ptr::null_mut();
    assert_eq!(unsafe { fcat_document_parse(bad.as_ptr(), bad.len(), &mut doc) }, FcatStatus::ParseError);
    assert!(doc.is_null());
    let msg = unsafe { CStr::from_ptr(fcat_last_error()) }.to_string_lossy().into_owned();
    assert!(msg.contains("syntax"), "{msg}");
}

#[test]
fn null_arguments_are_rejected() {
    let mut doc = ptr::null_mut();
    assert_eq!(unsafe { fcat_document_parse(ptr::null(), 0, &mut doc) }, FcatStatus::NullArgument);
    assert_eq!(unsafe { fcat_run(0, ptr::null(), ptr::null_mut()) }, FcatStatus::NullArgument);
    assert_eq!(unsafe { fcat_result_exit_code(ptr::null()) }, -1);
    unsafe {
        fcat_document_free(ptr::null_mut());
        fcat_result_free(ptr::null_mut());
        fcat_string_free(ptr::null_mut());
    }
}

#[test]
fn run_matches_the_cli() {
    let dir = std::env::temp_dir().join(format!("fcat-ffi-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("terminal.json");
    std::fs::write(&path, terminal_json()).unwrap();
    let p = path.to_str().unwrap();

    let (status, res) = run(&["--mode", "machine", "validate", p]);
    assert_eq!(status, FcatStatus::Ok);
    assert_eq!(unsafe { fcat_result_exit_code(res) }, 0);
    let direct = fcat::cli::run(["fcat", "--mode", "machine", "validate", p]);
    assert_eq!(stdout_of(res).as_bytes(), &direct.stdout[..]);
    unsafe { fcat_result_free(res) };

    let (status, res) = run(&["build-talg", p]);
    assert_eq!(status, FcatStatus::CheckFailed);
    assert_eq!(unsafe { fcat_result_exit_code(res) }, 1);
    assert!(!fcat_last_error().is_null());
    unsafe { fcat_result_free(res) };

    let (status, res) = run(&["no-such-command"]);
    assert_eq!(status, FcatStatus::CommandError);
    let mut len = 0;
    unsafe { fcat_result_stderr(res, &mut len) };
    assert!(len > 0);
    unsafe { fcat_result_free(res) };
}

#[test]
fn version_is_the_package_version() {
    let v = unsafe { CStr::from_ptr(fcat_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}

#[test]
fn header_declares_every_entry_point() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/fcat.h")).unwrap();
    for name in ["fcat_run", "fcat_document_parse", "fcat_document_free", "fcat_result_stdout", "fcat_string_free", "FCAT_STATUS_CHECK_FAILED", "typedef struct FcatResult FcatResult"] {
        assert!(header.contains(name), "missing {name}");
    }
}
