//! The five class-number criteria: a Zagier divisor sum on one side, a
//! polynomial in `(n, r, p)` on the other.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arith::{is_prime, odd_prime_divisors, Rational, SigmaSource};
use crate::error::{Error, Result};
use crate::quad::{classify_rd, RdField, RdKind};

use super::zagier::zagier_sum_with;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CriterionTag {
    T33,
    T34,
    T35,
    T42,
    T43,
}

impl CriterionTag {
    pub const ALL: [CriterionTag; 5] = [
        CriterionTag::T33,
        CriterionTag::T34,
        CriterionTag::T35,
        CriterionTag::T42,
        CriterionTag::T43,
    ];

    /// The class number the criterion characterizes.
    pub fn target_class_number(self) -> u64 {
        match self {
            CriterionTag::T43 => 2,
            _ => 3,
        }
    }

    /// The radicand excluded from the converse.
    pub fn exceptional_d(self) -> Option<i64> {
        match self {
            CriterionTag::T33 => Some(17),
            CriterionTag::T34 => Some(2),
            CriterionTag::T35 => Some(33),
            _ => None,
        }
    }

    /// Whether the criterion takes an odd prime `p | n`.
    pub fn uses_prime(self) -> bool {
        matches!(
            self,
            CriterionTag::T34 | CriterionTag::T42 | CriterionTag::T43
        )
    }

    /// The converse needs `h` odd; T43 is a plain biconditional.
    pub fn converse_needs_odd_h(self) -> bool {
        self != CriterionTag::T43
    }

    pub fn as_str(self) -> &'static str {
        match self {
            CriterionTag::T33 => "T33",
            CriterionTag::T34 => "T34",
            CriterionTag::T35 => "T35",
            CriterionTag::T42 => "T42",
            CriterionTag::T43 => "T43",
        }
    }
}

impl fmt::Display for CriterionTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CriterionTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CriterionTag::ALL
            .into_iter()
            .find(|t| t.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Config(format!("unknown criterion family {s:?}")))
    }
}

/// One criterion instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CriterionFamily {
    pub tag: CriterionTag,
    pub n: i64,
    pub r: i64,
    pub p: Option<i64>,
}

fn violation(msg: impl Into<String>) -> Error {
    Error::HypothesisViolation(msg.into())
}

impl CriterionFamily {
    pub fn new(tag: CriterionTag, n: i64, r: i64, p: Option<i64>) -> Self {
        CriterionFamily { tag, n, r, p }
    }

    /// Check every hypothesis of the family and return the field.
    pub fn validate(&self) -> Result<RdField> {
        use CriterionTag::*;
        let f = classify_rd(self.n, self.r)?;
        match self.tag {
            T33 | T34 if self.r != 1 => return Err(violation(format!("{} needs r = 1", self.tag))),
            T33 if f.congruence != 1 => return Err(violation("T33 needs d ≡ 1 (mod 8)")),
            T34 if f.d % 4 != 2 => return Err(violation("T34 needs d ≡ 2 (mod 4)")),
            T35 if f.kind != RdKind::Wide => return Err(violation("T35 needs |r| ∉ {1, 4}")),
            T35 if f.congruence != 1 => return Err(violation("T35 needs d ≡ 1 (mod 8)")),
            T42 | T43 if !matches!(self.r, 1 | 4) => {
                return Err(violation(format!("{} needs r ∈ {{1, 4}}", self.tag)))
            }
            T42 | T43 if f.congruence != 5 => {
                return Err(violation(format!("{} needs d ≡ 5 (mod 8)", self.tag)))
            }
            _ => {}
        }
        if self.tag.uses_prime() {
            let Some(p) = self.p else {
                if odd_prime_divisors(self.n)?.is_empty() {
                    return Err(Error::NoAdmissiblePrime(self.n));
                }
                return Err(violation(format!("{} needs a prime p", self.tag)));
            };
            if p <= 2 || self.n % p != 0 || !is_prime(p as u64) {
                return Err(Error::NotOddPrimeDivisor { p, n: self.n });
            }
            if matches!(self.tag, T42 | T43) {
                if self.r == 4 && self.n == p {
                    return Err(violation("r = 4 needs n ≠ p"));
                }
                if self.r == 1 && self.n == 2 * p {
                    return Err(violation("r = 1 needs n ≠ 2p"));
                }
            }
        } else if self.p.is_some() {
            return Err(violation(format!("{} takes no prime", self.tag)));
        }
        Ok(f)
    }
}

/// Right-hand side of the criterion.
pub fn criterion_rhs(c: &CriterionFamily) -> Result<Rational> {
    use CriterionTag::*;
    c.validate()?;
    let (n, r) = (c.n as i128, c.r as i128);
    let n3 = n * n * n;
    let q = |a: i128, b: i128| Rational::new(a, b);
    let p2 = c.p.map(|p| (p as i128) * (p as i128)).unwrap_or(1);
    Ok(match c.tag {
        T33 => q(n3 + 44 * n, 4),
        T34 => q(2 * n3 + 13 * n, 3) + q(8 * n3 + 2 * n * (p2 * p2 + 10 * p2), 3 * p2),
        T35 => q(
            2 * n3 * (r * r + 1) + n * (3 * r * r * r + 170 * r * r + 3 * r),
            8 * r * r,
        ),
        T42 | T43 => {
            let halves = if c.tag == T42 { 3 } else { 6 };
            let (principal, lead) = if c.r == 4 { (11, 1) } else { (14, 4) };
            q(n3 + principal * n, 6) + q(n3 + n * (lead * p2 * p2 + 10 * p2), halves * p2)
        }
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriterionCheck {
    pub lhs: u128,
    pub rhs: Rational,
    pub equal: bool,
}

pub fn criterion_holds(c: &CriterionFamily) -> Result<CriterionCheck> {
    criterion_holds_with(c, SigmaSource::Pointwise)
}

pub fn criterion_holds_with(c: &CriterionFamily, sigma: SigmaSource<'_>) -> Result<CriterionCheck> {
    let f = c.validate()?;
    let rhs = criterion_rhs(c)?;
    let lhs = zagier_sum_with(f.disc, sigma)?;
    let equal = rhs == Rational::from(lhs);
    Ok(CriterionCheck { lhs, rhs, equal })
}

#[cfg(test)]
mod tests {
    use super::*;
    use CriterionTag::*;

    fn fam(tag: CriterionTag, n: i64, r: i64, p: Option<i64>) -> CriterionFamily {
        CriterionFamily::new(tag, n, r, p)
    }

    #[test]
    fn rhs_examples() {
        assert_eq!(
            criterion_rhs(&fam(T33, 16, 1, None)).unwrap(),
            Rational::from(1200)
        );
        assert_eq!(
            criterion_rhs(&fam(T35, 18, -3, None)).unwrap(),
            Rational::from(1980)
        );
        assert_eq!(
            criterion_rhs(&fam(T43, 9, 4, Some(3))).unwrap(),
            Rational::from(180)
        );
        assert_eq!(
            criterion_rhs(&fam(T42, 54, 1, Some(3))).unwrap(),
            Rational::from(33030)
        );
        assert_eq!(
            criterion_rhs(&fam(T34, 3, 1, Some(3))).unwrap(),
            Rational::from(77)
        );
    }

    #[test]
    fn holds_examples() {
        let c = criterion_holds(&fam(T33, 16, 1, None)).unwrap();
        assert_eq!(
            (c.lhs, c.rhs.clone(), c.equal),
            (1200, Rational::from(1200), true)
        );
        let c = criterion_holds(&fam(T34, 3, 1, Some(3))).unwrap();
        assert_eq!(
            (c.lhs, c.rhs.clone(), c.equal),
            (70, Rational::from(77), false)
        );
        let c = criterion_holds(&fam(T35, 6, -3, None)).unwrap();
        assert_eq!(
            (c.lhs, c.rhs.clone(), c.equal),
            (60, Rational::from(180), false)
        );
    }

    #[test]
    fn hypothesis_violations() {
        assert!(matches!(
            criterion_rhs(&fam(T33, 3, 1, None)),
            Err(Error::HypothesisViolation(_))
        ));
        assert!(matches!(
            criterion_rhs(&fam(T34, 1, 1, None)),
            Err(Error::NoAdmissiblePrime(1))
        ));
        assert!(matches!(
            criterion_rhs(&fam(T34, 3, 1, Some(5))),
            Err(Error::NotOddPrimeDivisor { .. })
        ));
        assert!(matches!(
            criterion_rhs(&fam(T35, 4, 1, None)),
            Err(Error::HypothesisViolation(_))
        ));
        assert!(matches!(
            criterion_rhs(&fam(T42, 3, 4, Some(3))),
            Err(Error::HypothesisViolation(_))
        ));
        assert!(matches!(
            criterion_rhs(&fam(T43, 6, 1, Some(3))),
            Err(Error::HypothesisViolation(_))
        ));
        assert!(matches!(
            criterion_rhs(&fam(T42, 15, 4, None)),
            Err(Error::HypothesisViolation(_))
        ));
        assert!(matches!(
            criterion_rhs(&fam(T33, 16, 1, Some(2))),
            Err(Error::HypothesisViolation(_))
        ));
        assert!(matches!(
            criterion_rhs(&fam(T42, 10, 1, Some(3))),
            Err(Error::NotOddPrimeDivisor { .. })
        ));
    }

    #[test]
    fn tags_parse() {
        assert_eq!("t35".parse::<CriterionTag>().unwrap(), T35);
        assert!("T99".parse::<CriterionTag>().is_err());
        assert_eq!(T43.target_class_number(), 2);
        assert_eq!(T35.exceptional_d(), Some(33));
    }
}
