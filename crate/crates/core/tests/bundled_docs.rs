//! The shipped sample documents match their canonical serialization and every
//! sample command line succeeds. Set `FCAT_BLESS=1` to rewrite the files.

use std::path::PathBuf;

use fcat::cli::samples::{bundled_documents, sample_invocations};
use fcat::cli::{canonicalize, run, serialize_document};

fn dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

fn expand(args: &[&str]) -> Vec<String> {
    let mut v = vec!["fcat".to_string(), "--mode".into(), "machine".into()];
    for a in args {
        match a.strip_prefix('{').and_then(|a| a.strip_suffix('}')) {
            Some(name) => v.push(dir().join(name).to_string_lossy().into_owned()),
            None => v.push(a.to_string()),
        }
    }
    v
}

#[test]
fn shipped_documents_are_canonical() {
    let bless = std::env::var_os("FCAT_BLESS").is_some();
    for (name, item) in bundled_documents().unwrap() {
        let bytes = serialize_document(&item);
        let path = dir().join(name);
        if bless {
            std::fs::create_dir_all(dir()).unwrap();
            std::fs::write(&path, &bytes).unwrap();
        }
        let on_disk = std::fs::read(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        assert!(on_disk == bytes, "{name} is stale; rerun with FCAT_BLESS=1");
        assert_eq!(canonicalize(&on_disk).unwrap(), on_disk, "{name} is not a fixed point of canonicalization");
    }
}

#[test]
fn sample_commands_pass() {
    for args in sample_invocations() {
        let out = run(expand(&args));
        assert_eq!(out.code, 0, "{args:?}\n{}\n{}", String::from_utf8_lossy(&out.stdout), String::from_utf8_lossy(&out.stderr));
    }
}
