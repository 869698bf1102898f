//! Enumeration budgets.
//!
//! Every brute-force search in the crate draws from a [`Budget`]. When the
//! number of visited candidates would exceed the configured [`Cap`] the search
//! stops with [`CapExceeded`] instead of running unbounded.

use thiserror::Error;

/// Default number of candidates a single search may visit.
pub const DEFAULT_CAP: u64 = 1_000_000;

/// Upper bound on visited candidates for one search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Cap(pub u64);

impl Default for Cap {
    fn default() -> Self {
        Cap(DEFAULT_CAP)
    }
}

impl Cap {
    pub fn budget(self, what: impl Into<String>) -> Budget {
        Budget { what: what.into(), limit: self.0, used: 0 }
    }

    /// Refuses a product search space up front when it is already known to be
    /// larger than the cap.
    pub fn admit(self, what: &str, sizes: impl IntoIterator<Item = usize>) -> Result<(), CapExceeded> {
        let mut total: u128 = 1;
        for s in sizes {
            total = total.saturating_mul(s as u128);
            if total > self.0 as u128 {
                return Err(CapExceeded { what: what.to_string(), limit: self.0 });
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
#[error("search too large: {what} exceeds the cap of {limit} candidates")]
pub struct CapExceeded {
    pub what: String,
    pub limit: u64,
}

/// A running candidate counter.
#[derive(Debug, Clone)]
pub struct Budget {
    what: String,
    limit: u64,
    used: u64,
}

impl Budget {
    pub fn tick(&mut self) -> Result<(), CapExceeded> {
        self.used += 1;
        if self.used > self.limit {
            Err(CapExceeded { what: self.what.clone(), limit: self.limit })
        } else {
            Ok(())
        }
    }

    pub fn used(&self) -> u64 {
        self.used
    }
}

/// Visits every tuple of the cartesian product of `sizes` in lexicographic
/// order, stopping early when `visit` returns `false`.
pub fn for_each_tuple(
    sizes: &[usize],
    budget: &mut Budget,
    mut visit: impl FnMut(&[usize]) -> bool,
) -> Result<(), CapExceeded> {
    if sizes.contains(&0) {
        return Ok(());
    }
    let mut idx = vec![0usize; sizes.len()];
    loop {
        budget.tick()?;
        if !visit(&idx) {
            return Ok(());
        }
        let mut pos = sizes.len();
        loop {
            if pos == 0 {
                return Ok(());
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < sizes[pos] {
                break;
            }
            idx[pos] = 0;
        }
    }
}
