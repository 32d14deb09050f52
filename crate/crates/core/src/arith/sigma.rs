use crate::error::{Error, Result};

use super::factor::{factorize_u64, positive};

/// Default memory budget for [`sigma_sieve`]: 512 MiB.
pub const DEFAULT_SIEVE_BUDGET: u64 = 512 << 20;

/// σ(1..=limit), indexable by `m` directly.
#[derive(Debug, Clone)]
pub struct SigmaTable {
    values: Vec<u64>,
}

impl SigmaTable {
    /// Largest `m` covered.
    pub fn limit(&self) -> u64 {
        (self.values.len() - 1) as u64
    }

    pub fn get(&self, m: u64) -> Option<u64> {
        if m == 0 {
            return None;
        }
        self.values.get(m as usize).copied()
    }

    /// σ(1), σ(2), ..., σ(limit).
    pub fn as_slice(&self) -> &[u64] {
        &self.values[1..]
    }
}

pub fn sigma_sieve(limit: i64) -> Result<SigmaTable> {
    sigma_sieve_with_budget(limit, DEFAULT_SIEVE_BUDGET)
}

pub fn sigma_sieve_with_budget(limit: i64, budget_bytes: u64) -> Result<SigmaTable> {
    let limit = positive(limit)?;
    let needed = (limit + 1).saturating_mul(std::mem::size_of::<u64>() as u64);
    if needed > budget_bytes {
        return Err(Error::SieveBudget {
            limit,
            needed,
            budget: budget_bytes,
        });
    }
    let n = limit as usize;
    let mut values = vec![0u64; n + 1];
    for e in 1..=n {
        for m in (e..=n).step_by(e) {
            values[m] += e as u64;
        }
    }
    Ok(SigmaTable { values })
}

/// Where scan code gets σ from.
#[derive(Debug, Clone, Copy)]
pub enum SigmaSource<'a> {
    Pointwise,
    Table(&'a SigmaTable),
}

impl SigmaSource<'_> {
    /// Falls back to factorization for `m` past the end of a table.
    pub fn sigma(&self, m: u64) -> u128 {
        match self {
            SigmaSource::Table(t) => match t.get(m) {
                Some(v) => v as u128,
                None => factorize_u64(m).sigma(),
            },
            SigmaSource::Pointwise => factorize_u64(m).sigma(),
        }
    }
}
