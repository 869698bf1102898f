//! Reports and their two renderings.

use std::fmt::Write as _;

use clap::ValueEnum;
use serde::Serialize;
use serde_json::Value;

use super::document::FORMAT_VERSION;
use crate::check::Validation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Human,
    Machine,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Error,
}

impl Verdict {
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Pass => 0,
            Verdict::Fail => 1,
            Verdict::Error => 2,
        }
    }

    fn label(self) -> &'static str {
        match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Error => "ERROR",
        }
    }
}

/// One named check with its evidence.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Certificate {
    pub tag: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Value::is_null")]
    pub evidence: Value,
}

impl Certificate {
    pub fn new(tag: impl Into<String>, pass: bool, evidence: impl Serialize) -> Self {
        Certificate { tag: tag.into(), pass, evidence: serde_json::to_value(evidence).expect("evidence serializes") }
    }

    pub fn flag(tag: impl Into<String>, pass: bool) -> Self {
        Certificate { tag: tag.into(), pass, evidence: Value::Null }
    }

    pub fn from_validation(tag: impl Into<String>, v: &Validation) -> Self {
        Certificate::new(tag, v.is_ok(), v)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub format_version: &'static str,
    pub command: Vec<String>,
    pub verdict: Verdict,
    pub certificates: Vec<Certificate>,
    #[serde(skip_serializing_if = "Value::is_null")]
    pub data: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    /// Wall-clock time, rendered in human mode only.
    #[serde(skip)]
    pub elapsed_ms: Option<u128>,
}

impl Report {
    pub fn new(command: Vec<String>) -> Self {
        Report { format_version: FORMAT_VERSION, command, verdict: Verdict::Pass, certificates: Vec::new(), data: Value::Null, error: None, elapsed_ms: None }
    }

    pub fn push(&mut self, c: Certificate) {
        self.certificates.push(c);
    }

    /// Sets the verdict from the certificates unless an error was recorded.
    pub fn settle(&mut self) {
        if self.verdict != Verdict::Error {
            self.verdict = if self.certificates.iter().all(|c| c.pass) { Verdict::Pass } else { Verdict::Fail };
        }
    }

    pub fn fail_with(&mut self, verdict: Verdict, message: String) {
        self.verdict = verdict;
        self.error = Some(message);
    }
}

/// Renders a report. Machine mode is pretty-printed JSON with sorted object
/// keys; human mode prints one line per certificate.
pub fn emit_report(r: &Report, mode: Mode) -> Vec<u8> {
    match mode {
        Mode::Machine => {
            let mut out = serde_json::to_vec_pretty(&serde_json::to_value(r).expect("reports serialize")).expect("reports serialize");
            out.push(b'\n');
            out
        }
        Mode::Human => human(r).into_bytes(),
    }
}

fn human(r: &Report) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "fcat {}", r.command.join(" "));
    for c in &r.certificates {
        let _ = writeln!(s, "{} check: {}", c.tag, if c.pass { "PASS" } else { "FAIL" });
        if !c.pass {
            for line in failure_lines(&c.evidence) {
                let _ = writeln!(s, "  {line}");
            }
        }
    }
    if let Some(e) = &r.error {
        let _ = writeln!(s, "error: {e}");
    }
    if let Value::Object(m) = &r.data {
        for (k, v) in m {
            if let Some(text) = scalar(v) {
                let _ = writeln!(s, "{k}: {text}");
            }
        }
    }
    let _ = writeln!(s, "verdict: {}", r.verdict.label());
    if let Some(ms) = r.elapsed_ms {
        let _ = writeln!(s, "elapsed: {ms} ms");
    }
    s
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::String(x) => Some(x.clone()),
        Value::Number(n) => Some(n.to_string()),
        Value::Bool(b) => Some(b.to_string()),
        _ => None,
    }
}

/// Violations from a serialized [`Validation`], if that is what the evidence is.
fn failure_lines(v: &Value) -> Vec<String> {
    let Some(Value::Array(vs)) = v.get("violations") else { return Vec::new() };
    vs.iter()
        .take(8)
        .map(|x| {
            let law = x.get("law").and_then(Value::as_str).unwrap_or("?");
            let w: Vec<&str> = x.get("witness").and_then(Value::as_array).map(|a| a.iter().filter_map(Value::as_str).collect()).unwrap_or_default();
            format!("{law} at [{}]", w.join(", "))
        })
        .collect()
}
