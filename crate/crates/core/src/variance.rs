use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

/// Strict, pseudo, lax or colax.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Variance {
    #[serde(rename = "s")]
    Strict,
    #[serde(rename = "p")]
    Pseudo,
    #[serde(rename = "l")]
    Lax,
    #[serde(rename = "c")]
    Colax,
}

impl Variance {
    /// Swaps lax and colax, fixing the other two.
    pub fn dual(self) -> Self {
        match self {
            Variance::Lax => Variance::Colax,
            Variance::Colax => Variance::Lax,
            v => v,
        }
    }

    /// Join in the orders `s ≤ p ≤ l` and `s ≤ p ≤ c`; `None` when lax meets colax.
    pub fn join(self, other: Self) -> Option<Self> {
        use Variance::*;
        match (self, other) {
            (Lax, Colax) | (Colax, Lax) => None,
            (Strict, v) | (v, Strict) => Some(v),
            (Pseudo, v) | (v, Pseudo) => Some(v),
            (v, _) => Some(v),
        }
    }

    pub fn letter(self) -> &'static str {
        match self {
            Variance::Strict => "s",
            Variance::Pseudo => "p",
            Variance::Lax => "l",
            Variance::Colax => "c",
        }
    }

    pub fn all() -> [Variance; 4] {
        [Variance::Strict, Variance::Pseudo, Variance::Lax, Variance::Colax]
    }
}

impl fmt::Display for Variance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.letter())
    }
}

#[derive(Debug, Clone, thiserror::Error)]
#[error("unknown variance `{0}` (expected one of s, p, l, c)")]
pub struct ParseVarianceError(String);

impl FromStr for Variance {
    type Err = ParseVarianceError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "s" => Ok(Variance::Strict),
            "p" => Ok(Variance::Pseudo),
            "l" => Ok(Variance::Lax),
            "c" => Ok(Variance::Colax),
            other => Err(ParseVarianceError(other.to_string())),
        }
    }
}
