use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::{is_squarefree, Rational};
use crate::error::{Error, Result};

use super::QuadElement;

/// Field discriminant of `Q(√d)` for squarefree `d`.
pub fn discriminant(d: i64) -> i64 {
    if d.rem_euclid(4) == 1 {
        d
    } else {
        4 * d
    }
}

/// Radicand of a real quadratic field discriminant; rejects anything that
/// is not the discriminant of some `Q(√d)`.
pub fn field_radicand(disc: i64) -> Result<i64> {
    if disc <= 1 || !matches!(disc.rem_euclid(4), 0 | 1) {
        return Err(Error::InvalidDiscriminant(disc));
    }
    let root = num_integer::Roots::sqrt(&disc);
    if root * root == disc {
        return Err(Error::InvalidDiscriminant(disc));
    }
    let d = if disc % 4 == 1 {
        disc
    } else {
        let d = disc / 4;
        if d % 4 == 1 {
            return Err(Error::NonFundamental(disc));
        }
        d
    };
    if !is_squarefree(d)? {
        return Err(Error::NonFundamental(disc));
    }
    Ok(d)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RdKind {
    /// `|r| = 1`
    Narrow1,
    /// `|r| = 4`
    Narrow4,
    /// `|r| ∉ {1, 4}`
    Wide,
}

impl RdKind {
    pub fn of(r: i64) -> Self {
        match r.abs() {
            1 => RdKind::Narrow1,
            4 => RdKind::Narrow4,
            _ => RdKind::Wide,
        }
    }
}

impl fmt::Display for RdKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RdKind::Narrow1 => "|r|=1",
            RdKind::Narrow4 => "|r|=4",
            RdKind::Wide => "wide",
        })
    }
}

/// The four residue cases that cover every narrow R-D radicand.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NarrowCase {
    /// `n² + 1 ≡ 1, 2 (mod 4)`
    PlusOne,
    /// `n² − 1 ≡ 3 (mod 4)`
    MinusOne,
    /// `n² + 4 ≡ 1 (mod 4)`
    PlusFour,
    /// `n² − 4 ≡ 5 (mod 8)`
    MinusFour,
}

/// A real quadratic field `Q(√d)` with `d = n² + r` of Richaud-Degert type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RdField {
    pub n: i64,
    pub r: i64,
    pub d: i64,
    pub disc: i64,
    pub kind: RdKind,
    /// `d mod 8`
    pub congruence: u8,
    pub eps: QuadElement,
    pub norm_eps: i8,
}

impl RdField {
    pub fn narrow_case(&self) -> Option<NarrowCase> {
        match (self.r, self.d.rem_euclid(4), self.d.rem_euclid(8)) {
            (1, 1 | 2, _) => Some(NarrowCase::PlusOne),
            (-1, 3, _) => Some(NarrowCase::MinusOne),
            (4, 1, _) => Some(NarrowCase::PlusFour),
            (-4, _, 5) => Some(NarrowCase::MinusFour),
            _ => None,
        }
    }

    pub fn radicand_class(&self) -> String {
        format!("d ≡ {} (mod 8)", self.congruence)
    }
}

/// Validate `d = n² + r` as an R-D radicand and attach its fundamental unit.
///
/// Besides `r | 4n` and `−n < r ≤ n`, the pairs `(1, 4)` and `(3, 4)`
/// (d = 5 and 13) are accepted: the `|r| = 4` unit formula holds for them.
/// `(2, 1)` is rejected because `2 + √5` is the cube of the fundamental unit.
pub fn classify_rd(n: i64, r: i64) -> Result<RdField> {
    let not_rd = |reason: &str| Error::NotRd {
        n,
        r,
        reason: reason.to_string(),
    };
    if n < 1 {
        return Err(not_rd("n must be positive"));
    }
    if r == 0 || (4 * n) % r != 0 {
        return Err(not_rd("r does not divide 4n"));
    }
    let small_plus_four = r == 4 && (n == 1 || n == 3);
    if !(-n < r && r <= n) && !small_plus_four {
        return Err(not_rd("r outside (-n, n]"));
    }
    if (n, r) == (2, 1) {
        return Err(not_rd("d = 5 is written as 1² + 4"));
    }
    let d = n
        .checked_mul(n)
        .and_then(|s| s.checked_add(r))
        .ok_or_else(|| not_rd("n² + r overflows"))?;
    if d <= 1 {
        return Err(Error::DegenerateRadicand(d));
    }
    if !is_squarefree(d)? {
        return Err(Error::NotSquarefree(d));
    }
    let (eps, norm_eps) = degert_unit(n, r);
    Ok(RdField {
        n,
        r,
        d,
        disc: discriminant(d),
        kind: RdKind::of(r),
        congruence: d.rem_euclid(8) as u8,
        eps,
        norm_eps,
    })
}

fn degert_unit(n: i64, r: i64) -> (QuadElement, i8) {
    let d = n * n + r;
    let minus_sgn_r = if r > 0 { -1 } else { 1 };
    match RdKind::of(r) {
        RdKind::Narrow1 => (QuadElement::new(d, n, 1), minus_sgn_r),
        RdKind::Narrow4 => (QuadElement::halves(d, n, 1), minus_sgn_r),
        RdKind::Wide => {
            let ar = r.abs();
            (
                QuadElement::new(
                    d,
                    Rational::new(2 * n * n + r, ar),
                    Rational::new(2 * n, ar),
                ),
                1,
            )
        }
    }
}

/// Fundamental unit and its norm from Degert's closed forms.
pub fn fundamental_unit_closed(f: &RdField) -> (QuadElement, i8) {
    degert_unit(f.n, f.r)
}
