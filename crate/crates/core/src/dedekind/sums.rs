//! Generalized Dedekind sums `S^i(h, k)` for `i ∈ {2, 3}`.
//!
//! With `B̄_j` the periodic Bernoulli functions,
//!
//! ```text
//! S^i(h, k) = Σ_{μ mod k} B̄_{4−i}(μ/k) · B̄_i(hμ/k).
//! ```
//!
//! For `i = 3` this is Apostol's `s_3(h, k) = Σ_{μ=1}^{k−1} (μ/k)·B̄_3(hμ/k)`
//! because `Σ_μ B̄_3(hμ/k) = 0`. Both raw sums are here; the closed forms
//! are what the Lang evaluator consumes.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;

use crate::arith::Rational;
use crate::error::{Error, Result};

/// Which of the two sums.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SumIndex {
    Two,
    Three,
}

impl SumIndex {
    pub fn as_u8(self) -> u8 {
        match self {
            SumIndex::Two => 2,
            SumIndex::Three => 3,
        }
    }
}

impl TryFrom<u8> for SumIndex {
    type Error = Error;

    fn try_from(i: u8) -> Result<Self> {
        match i {
            2 => Ok(SumIndex::Two),
            3 => Ok(SumIndex::Three),
            _ => Err(Error::HypothesisViolation(format!(
                "sum index must be 2 or 3, got {i}"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DedekindSumQuery {
    pub index: SumIndex,
    pub h: i64,
    pub k: i64,
}

impl DedekindSumQuery {
    pub fn new(index: SumIndex, h: i64, k: i64) -> Result<Self> {
        if k < 1 {
            return Err(Error::NonPositive(k as i128));
        }
        Ok(DedekindSumQuery { index, h, k })
    }
}

/// The closed-form row that produced a value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosedFormRow {
    /// `S^i(±1, m)`
    UnitArgument,
    /// `S^i(m ± 1, 2m)`, `m` even
    HalfModulus,
    /// `S^i(m ± 1, 4m)`, `m = 2` or `m ≡ 0 (mod 4)`
    QuarterModulus,
}

impl fmt::Display for ClosedFormRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClosedFormRow::UnitArgument => "S(±1, m)",
            ClosedFormRow::HalfModulus => "S(m±1, 2m)",
            ClosedFormRow::QuarterModulus => "S(m±1, 4m)",
        })
    }
}

fn poly(m: i64, c4: i64, c3: i64, c2: i64, c0: i64, den: i64) -> Rational {
    let m = BigInt::from(m);
    let m2 = &m * &m;
    let m3 = &m2 * &m;
    let num = BigInt::from(c4) * &m2 * &m2 + BigInt::from(c3) * &m3 + BigInt::from(c2) * &m2 + c0;
    Rational::new(num, BigInt::from(den) * m3)
}

// `hr` is already reduced into [0, k).
fn closed_reduced(index: SumIndex, hr: i64, k: i64) -> Option<(Rational, ClosedFormRow)> {
    use SumIndex::*;
    if hr == 1 % k || hr == k - 1 {
        let sign = if hr == 1 % k { 1 } else { -1 };
        let m = k;
        let v = match index {
            Three => poly(m, -1, 0, 5, -4, 120) * Rational::from(sign),
            Two => poly(m, 1, 0, 10, -6, 180),
        };
        return Some((v, ClosedFormRow::UnitArgument));
    }
    if k % 4 == 0 {
        let m = k / 2;
        if hr == m + 1 || hr == m - 1 {
            let v = match index {
                Three => {
                    let sign = if hr == m + 1 { -1 } else { 1 };
                    poly(m, 1, 0, -50, 4, 960) * Rational::from(sign)
                }
                Two => poly(m, 1, 0, 100, -6, 1440),
            };
            return Some((v, ClosedFormRow::HalfModulus));
        }
    }
    if k % 8 == 0 {
        let m = k / 4;
        // the printed 4m rows only hold for m = 2 and m ≡ 0 (mod 4)
        if (m == 2 || m % 4 == 0) && (hr == m + 1 || hr == m - 1) {
            let v = match (index, hr == m + 1) {
                (Three, true) => poly(m, -1, -180, 410, -4, 7680),
                (Three, false) => poly(m, 1, -180, -410, 4, 7680),
                (Two, _) => poly(m, 1, 0, 820, -6, 11520),
            };
            return Some((v, ClosedFormRow::QuarterModulus));
        }
    }
    None
}

/// Closed-form value and the row it came from.
///
/// `h` is reduced mod `k` first; if no row matches, `−h` is tried and the
/// parity of the sum applied (`S^3` odd, `S^2` even in `h`).
pub fn dedekind_sum_closed_row(q: DedekindSumQuery) -> Result<(Rational, ClosedFormRow)> {
    let DedekindSumQuery { index, h, k } = q;
    if k < 1 {
        return Err(Error::NonPositive(k as i128));
    }
    if let Some(hit) = closed_reduced(index, h.rem_euclid(k), k) {
        return Ok(hit);
    }
    if let Some((v, row)) = closed_reduced(index, (-h).rem_euclid(k), k) {
        let v = match index {
            SumIndex::Three => -v,
            SumIndex::Two => v,
        };
        return Ok((v, row));
    }
    Err(Error::UnsupportedPattern {
        index: index.as_u8(),
        h,
        k,
    })
}

pub fn dedekind_sum_closed(q: DedekindSumQuery) -> Result<Rational> {
    dedekind_sum_closed_row(q).map(|(v, _)| v)
}

fn coprime(h: i64, k: i64) -> Result<()> {
    if k < 1 {
        return Err(Error::NonPositive(k as i128));
    }
    let g = h.gcd(&k);
    if g != 1 {
        return Err(Error::NotCoprime { h, k, g });
    }
    Ok(())
}

// 2k³·B_3(j/k) for 0 ≤ j < k
fn b3_scaled(j: i128, k: i128) -> i128 {
    2 * j * j * j - 3 * j * j * k + j * k * k
}

// 6k²·B_2(j/k)
fn b2_scaled(j: i128, k: i128) -> i128 {
    6 * j * j - 6 * j * k + k * k
}

/// Apostol's `s_3(h, k) = Σ_{μ=1}^{k−1} (μ/k)·B̄_3(hμ/k)`.
pub fn apostol_s3_raw(h: i64, k: i64) -> Result<Rational> {
    coprime(h, k)?;
    let (kk, hh) = (k as i128, h.rem_euclid(k) as i128);
    let mut acc = BigInt::from(0);
    for mu in 1..kk {
        let j = hh * mu % kk;
        acc += BigInt::from(mu * b3_scaled(j, kk));
    }
    Ok(Rational::new(
        acc,
        BigInt::from(2) * BigInt::from(kk).pow(4),
    ))
}

/// `Σ_{μ mod k} B̄_{4−i}(μ/k)·B̄_i(hμ/k)`, the normalization the closed
/// forms use for both indices.
pub fn dedekind_sum_raw(index: SumIndex, h: i64, k: i64) -> Result<Rational> {
    coprime(h, k)?;
    let (kk, hh) = (k as i128, h.rem_euclid(k) as i128);
    let mut acc = BigInt::from(0);
    let den = match index {
        SumIndex::Three => {
            // B̄_1(μ/k) = (2μ − k)/(2k), zero at μ = 0
            for mu in 1..kk {
                let j = hh * mu % kk;
                acc += BigInt::from(2 * mu - kk) * BigInt::from(b3_scaled(j, kk));
            }
            BigInt::from(4) * BigInt::from(kk).pow(4)
        }
        SumIndex::Two => {
            for mu in 0..kk {
                let j = hh * mu % kk;
                acc += BigInt::from(b2_scaled(mu, kk)) * BigInt::from(b2_scaled(j, kk));
            }
            BigInt::from(36) * BigInt::from(kk).pow(4)
        }
    };
    Ok(Rational::new(acc, den))
}
