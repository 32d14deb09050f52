//! Shape of radicands `d ≡ 5 (mod 8)` with class number one: `d = p² + 4`
//! or `d = 4q² + 1` with `p`, `q` prime.

use std::fmt;

use rayon::prelude::*;

use crate::arith::{is_prime, is_squarefree};
use crate::error::{Error, Result};
use crate::forms::class_number;
use crate::quad::classify_rd;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ShapeStatus {
    /// `h = 1` and `n` has the predicted shape.
    Consistent,
    /// `h = 1` but no odd prime divides `n`, so the split-prime machinery
    /// behind the prediction never applies.
    OutOfScope,
    /// `h ≠ 1`.
    NotTriggered,
    Violation,
}

impl ShapeStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            ShapeStatus::Consistent => "consistent",
            ShapeStatus::OutOfScope => "out of scope",
            ShapeStatus::NotTriggered => "not triggered",
            ShapeStatus::Violation => "violation",
        }
    }
}

impl fmt::Display for ShapeStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShapeEntry {
    pub n: i64,
    pub r: i64,
    pub d: i64,
    pub h: u64,
    pub status: ShapeStatus,
}

pub fn shape_status(n: i64, r: i64, h: u64) -> ShapeStatus {
    if h != 1 {
        return ShapeStatus::NotTriggered;
    }
    let odd_part = n >> n.trailing_zeros();
    if odd_part == 1 {
        return ShapeStatus::OutOfScope;
    }
    let shaped = match r {
        4 => is_prime(n as u64),
        1 => n % 2 == 0 && is_prime((n / 2) as u64),
        _ => false,
    };
    if shaped {
        ShapeStatus::Consistent
    } else {
        ShapeStatus::Violation
    }
}

/// Status of one `(n, r)`, `r ∈ {1, 4}`, `d = n² + r ≡ 5 (mod 8)`.
pub fn shape_entry(n: i64, r: i64) -> Result<ShapeEntry> {
    let f = classify_rd(n, r)?;
    if !matches!(r, 1 | 4) || f.d % 8 != 5 {
        return Err(Error::WrongCongruence {
            d: f.d,
            found: format!("{} mod 8 with r={r}", f.d % 8),
            expected: "d ≡ 5 mod 8 with r ∈ {1, 4}",
        });
    }
    let h = class_number(f.d)?;
    Ok(ShapeEntry {
        n,
        r,
        d: f.d,
        h,
        status: shape_status(n, r, h),
    })
}

#[derive(Debug, Clone, Default)]
pub struct ShapeReport {
    pub d_max: i64,
    pub entries: Vec<ShapeEntry>,
}

impl ShapeReport {
    pub fn count(&self, status: ShapeStatus) -> usize {
        self.entries.iter().filter(|e| e.status == status).count()
    }

    pub fn violations(&self) -> impl Iterator<Item = &ShapeEntry> {
        self.entries
            .iter()
            .filter(|e| e.status == ShapeStatus::Violation)
    }

    pub fn is_clean(&self) -> bool {
        self.violations().next().is_none()
    }
}

impl fmt::Display for ShapeReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "radicands checked: {} (d ≤ {})",
            self.entries.len(),
            self.d_max
        )?;
        for e in self.entries.iter().filter(|e| e.h == 1) {
            writeln!(f, "h=1 d={} n={} r={}: {}", e.d, e.n, e.r, e.status)?;
        }
        for status in [
            ShapeStatus::Consistent,
            ShapeStatus::OutOfScope,
            ShapeStatus::NotTriggered,
            ShapeStatus::Violation,
        ] {
            writeln!(f, "{status}: {}", self.count(status))?;
        }
        write!(
            f,
            "{}",
            if self.is_clean() {
                "no violations"
            } else {
                "violations found"
            }
        )
    }
}

pub fn check_class_one_shape(d_max: i64) -> Result<ShapeReport> {
    if d_max < 5 {
        return Err(Error::Config(format!(
            "max-d must be at least 5, got {d_max}"
        )));
    }
    let mut pairs = Vec::new();
    let mut n = 1i64;
    while n * n < d_max {
        // n² + 4 ≡ 5 (mod 8) needs n odd, n² + 1 ≡ 5 (mod 8) needs n ≡ 2 (mod 4)
        let r = if n % 2 == 1 {
            4
        } else if n % 4 == 2 {
            1
        } else {
            0
        };
        if r != 0 && n * n + r <= d_max && is_squarefree(n * n + r)? && classify_rd(n, r).is_ok() {
            pairs.push((n, r));
        }
        n += 1;
    }
    let entries: Result<Vec<ShapeEntry>> =
        pairs.par_iter().map(|&(n, r)| shape_entry(n, r)).collect();
    let mut entries = entries?;
    entries.sort_by_key(|e| e.d);
    Ok(ShapeReport { d_max, entries })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let five = shape_entry(1, 4).unwrap();
        assert_eq!(
            (five.d, five.h, five.status),
            (5, 1, ShapeStatus::OutOfScope)
        );
        let e = shape_entry(7, 4).unwrap();
        assert_eq!((e.d, e.h, e.status), (53, 1, ShapeStatus::Consistent));
        let e = shape_entry(15, 4).unwrap();
        assert_eq!((e.d, e.h, e.status), (229, 3, ShapeStatus::NotTriggered));
        assert_eq!(shape_status(9, 4, 1), ShapeStatus::Violation);
        assert_eq!(shape_status(6, 1, 1), ShapeStatus::Consistent);
        assert_eq!(shape_status(2, 1, 1), ShapeStatus::OutOfScope);
        assert!(check_class_one_shape(4).is_err());
    }

    #[test]
    fn small_range_is_clean() {
        let rep = check_class_one_shape(20_000).unwrap();
        assert!(rep.is_clean(), "{rep}");
        assert!(rep.entries.iter().any(|e| e.d == 53));
        assert!(rep.entries.iter().all(|e| e.d % 8 == 5));
    }
}
