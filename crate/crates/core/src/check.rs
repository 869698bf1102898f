//! Validation reports with witnesses.

use std::fmt;

use serde::Serialize;

/// One failed law together with the cells that witness the failure.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Violation {
    pub law: String,
    pub witness: Vec<String>,
}

/// Outcome of a validator: empty `violations` means the structure is lawful.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Validation {
    pub subject: String,
    pub violations: Vec<Violation>,
}

impl Validation {
    pub fn new(subject: impl Into<String>) -> Self {
        Validation { subject: subject.into(), violations: Vec::new() }
    }

    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn fail<I, S>(&mut self, law: &str, witness: I)
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        self.violations.push(Violation {
            law: law.to_string(),
            witness: witness.into_iter().map(Into::into).collect(),
        });
    }

    /// Records a failure unless `cond` holds.
    pub fn require<I, S>(&mut self, cond: bool, law: &str, witness: impl FnOnce() -> I)
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        if !cond {
            self.fail(law, witness());
        }
    }

    pub fn absorb(&mut self, prefix: &str, other: Validation) {
        for v in other.violations {
            self.violations.push(Violation { law: format!("{prefix}{}", v.law), witness: v.witness });
        }
    }

    pub fn has(&self, law: &str) -> bool {
        self.violations.iter().any(|v| v.law == law)
    }

    /// Turns a failing report into an error.
    pub fn into_result(self) -> crate::Result<()> {
        if self.is_ok() {
            Ok(())
        } else {
            Err(crate::Error::Invalid(self))
        }
    }
}

impl fmt::Display for Validation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_ok() {
            return write!(f, "{}: ok", self.subject);
        }
        write!(f, "{}: {} violation(s)", self.subject, self.violations.len())?;
        for v in &self.violations {
            write!(f, "; {} at [{}]", v.law, v.witness.join(", "))?;
        }
        Ok(())
    }
}
