//! The `fcat` command line: documents in, reports out.
//!
//! [`run`] is the whole program minus process I/O, so tests and the FFI can
//! drive it directly. Exit status: `0` when every check passes, `1` when a law
//! or verdict fails (witnesses are in the report), `2` for usage, parse and
//! cap errors.

pub mod commands;
pub mod document;
pub mod report;
pub mod samples;

use std::io::Read;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand};

pub use commands::Settings;
pub use document::{canonicalize, document_value, parse_document, serialize_document, FillerSpec, Item, Kind, ParseError, FORMAT_VERSION};
pub use report::{emit_report, Certificate, Mode, Report, Verdict};

use crate::search::{Cap, DEFAULT_CAP};
use crate::variance::Variance;
use crate::Error;

#[derive(Debug, Parser)]
#[command(name = "fcat", version, about = "Finite-scale checks for F-categories, doctrinal adjunction and 2-dimensional monadicity")]
pub struct Cli {
    /// Variance of morphisms: s, p, l or c.
    #[arg(long, global = true, default_value = "l")]
    pub variance: Variance,
    /// Enumeration cap; overrides FCAT_CAP.
    #[arg(long, global = true, env = "FCAT_CAP")]
    pub cap: Option<u64>,
    /// Largest number of morphisms in a test category for universal-property checks.
    #[arg(long, global = true, default_value_t = 3)]
    pub test_battery: usize,
    /// Report format: readable text or sorted JSON.
    #[arg(long, global = true, value_enum, default_value_t = Mode::Human)]
    pub mode: Mode,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Validate any document against the laws of its kind.
    Validate { doc: PathBuf },
    /// Lift an adjunction with a monoidal adjoint to a monoidal adjunction.
    LiftAdjunction { doc: PathBuf },
    /// Limit of an arrow in Cat, checked against the test battery.
    Limit { doc: PathBuf },
    /// Factor a functor through the limit of its arrow.
    Factor { doc: PathBuf },
    /// Compose the span factorizations of `f` and then `g`.
    SpanCompose { f: PathBuf, g: PathBuf },
    /// Represent a natural transformation through the span calculus.
    #[command(name = "represent-2cell")]
    Represent2Cell { doc: PathBuf },
    /// Decide w-doctrinality of an F-functor.
    DoctrinalCheck { doc: PathBuf },
    /// Build the classifier of w-adjunctions.
    Classifier,
    /// Build T-Alg_w for a 2-monad.
    BuildTalg { doc: PathBuf },
    /// Construct the orthogonality filler and confirm its uniqueness.
    Filler { doc: PathBuf },
    /// Extend the comparison of T-Alg_w along its free-algebra adjunction.
    EmExtend { doc: PathBuf },
    /// Check the naturality square for T-Alg_p ⊆ T-Alg_w.
    Naturality { doc: PathBuf },
    /// Run the monadicity check on U: T-Alg_w → C.
    Monadicity { doc: PathBuf },
    /// Emit the op-dual or co-dual document.
    Dualize { doc: PathBuf },
}

/// Everything a process would write.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: Vec<u8>,
    pub stderr: Vec<u8>,
    pub code: i32,
}

fn read_input(path: &Path) -> Result<Vec<u8>, String> {
    if path.as_os_str() == "-" {
        let mut buf = Vec::new();
        std::io::stdin().read_to_end(&mut buf).map_err(|e| format!("reading stdin: {e}"))?;
        return Ok(buf);
    }
    std::fs::read(path).map_err(|e| format!("reading {}: {e}", path.display()))
}

enum Failure {
    Usage(String),
    Parse(ParseError),
    Domain(Error),
}

fn load(path: &Path) -> Result<Item, Failure> {
    let bytes = read_input(path).map_err(Failure::Usage)?;
    parse_document(&bytes).map_err(Failure::Parse)
}

fn dispatch(cmd: &Command, s: Settings, r: &mut Report) -> Result<(), Failure> {
    use commands as c;
    let d = Failure::Domain;
    match cmd {
        Command::Validate { doc } => c::validate(&load(doc)?, s, r).map_err(d),
        Command::LiftAdjunction { doc } => c::lift(&load(doc)?, s, r).map_err(d),
        Command::Limit { doc } => c::limit(&load(doc)?, s, r).map_err(d),
        Command::Factor { doc } => c::factor(&load(doc)?, s, r).map_err(d),
        Command::SpanCompose { f, g } => c::span_compose(&load(f)?, &load(g)?, s, r).map_err(d),
        Command::Represent2Cell { doc } => c::represent(&load(doc)?, s, r).map_err(d),
        Command::DoctrinalCheck { doc } => c::doctrinal_check(&load(doc)?, s, r).map_err(d),
        Command::Classifier => c::classifier(s, r).map_err(d),
        Command::BuildTalg { doc } => c::talg(&load(doc)?, s, r).map_err(d),
        Command::Filler { doc } => c::filler(&load(doc)?, s, r).map_err(d),
        Command::EmExtend { doc } => c::em_extend(&load(doc)?, s, r).map_err(d),
        Command::Naturality { doc } => c::naturality(&load(doc)?, s, r).map_err(d),
        Command::Monadicity { doc } => c::monadicity(&load(doc)?, s, r).map_err(d),
        Command::Dualize { doc } => c::dualize(&load(doc)?, r).map_err(d),
    }
}

/// Runs a full command line (including the program name) and returns what
/// the process would print together with its exit status.
pub fn run<I, S>(argv: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let argv: Vec<std::ffi::OsString> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string().into_bytes();
            return if e.use_stderr() { Outcome { stdout: Vec::new(), stderr: text, code: 2 } } else { Outcome { stdout: text, stderr: Vec::new(), code: 0 } };
        }
    };
    let echo = argv.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect();
    let settings = Settings { variance: cli.variance, cap: Cap(cli.cap.unwrap_or(DEFAULT_CAP)), battery: cli.test_battery };
    let mut report = Report::new(echo);
    let start = Instant::now();
    match dispatch(&cli.command, settings, &mut report) {
        Ok(()) => report.settle(),
        Err(Failure::Usage(m)) => report.fail_with(Verdict::Error, m),
        Err(Failure::Parse(e)) => report.fail_with(Verdict::Error, e.to_string()),
        Err(Failure::Domain(e)) => {
            let verdict = match e {
                Error::Structure(_) | Error::Cap(_) => Verdict::Error,
                _ => Verdict::Fail,
            };
            if let Error::Invalid(v) = &e {
                report.push(Certificate::from_validation("input laws", v));
            }
            report.fail_with(verdict, e.to_string());
        }
    }
    report.elapsed_ms = Some(start.elapsed().as_millis());
    let stdout = emit_report(&report, cli.mode);
    let stderr = report.error.as_ref().map(|e| format!("fcat: {e}\n").into_bytes()).unwrap_or_default();
    Outcome { stdout, stderr, code: report.verdict.exit_code() }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::fixtures::terminal;
    use std::sync::Arc;

    fn temp(name: &str, bytes: &[u8]) -> PathBuf {
        let dir = std::env::temp_dir().join(format!("fcat-cli-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let p = dir.join(name);
        std::fs::write(&p, bytes).unwrap();
        p
    }

    #[test]
    fn validate_terminal_exits_zero() {
        let p = temp("terminal.json", &serialize_document(&Item::Category(Arc::new(terminal()))));
        let out = run(["fcat", "--mode", "machine", "validate", p.to_str().unwrap()]);
        assert_eq!(out.code, 0, "{}", String::from_utf8_lossy(&out.stdout));
    }

    #[test]
    fn exit_codes_follow_the_contract() {
        assert_eq!(run(["fcat", "frobnicate"]).code, 2);
        let p = temp("garbage.json", b"{ not json");
        assert_eq!(run(["fcat", "validate", p.to_str().unwrap()]).code, 2);
        let p = temp("cat.json", &serialize_document(&Item::Category(Arc::new(terminal()))));
        assert_eq!(run(["fcat", "build-talg", p.to_str().unwrap()]).code, 1);
        assert_eq!(run(["fcat", "--help"]).code, 0);
    }

    #[test]
    fn cap_flag_wins_over_environment() {
        let cli = Cli::try_parse_from(["fcat", "--cap", "7", "classifier"]).unwrap();
        assert_eq!(cli.cap, Some(7));
    }
}
