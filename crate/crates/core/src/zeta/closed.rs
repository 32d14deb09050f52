//! Closed forms for partial zeta values `ζ_k(−1, 𝔄)` of R-D fields.

use crate::arith::{is_prime, Rational};
use crate::error::{Error, Result};
use crate::quad::{RdField, RdKind};

fn q(num: i128, den: i128) -> Rational {
    Rational::new(num, den)
}

/// Value on the principal class.
pub fn principal_zeta_closed(f: &RdField) -> Result<Rational> {
    let (n, r) = (f.n as i128, f.r as i128);
    let n3 = n * n * n;
    match (f.congruence, f.kind, f.r) {
        (1, RdKind::Narrow1, _) => Ok(q(n3 + 14 * n, 360)),
        (1, RdKind::Wide, _) => Ok(q(
            2 * n3 * (r * r + 1) + n * (3 * r * r * r + 50 * r * r + 3 * r),
            720 * r * r,
        )),
        (5, _, 4) => Ok(q(n3 + 11 * n, 360)),
        (5, _, 1) => Ok(q(n3 + 14 * n, 360)),
        _ => Err(Error::UncoveredCase(format!(
            "principal class with r = {}, {}",
            f.r,
            f.radicand_class()
        ))),
    }
}

/// Value on the class of either prime above 2, `d ≡ 1 (mod 8)`.
pub fn nonprincipal_zeta_over2(f: &RdField) -> Result<Rational> {
    if f.congruence != 1 {
        return Err(Error::WrongCongruence {
            d: f.d,
            found: f.radicand_class(),
            expected: "d ≡ 1 (mod 8)",
        });
    }
    let (n, r) = (f.n as i128, f.r as i128);
    let n3 = n * n * n;
    match f.kind {
        RdKind::Narrow1 => Ok(q(n3 + 104 * n, 1440)),
        RdKind::Wide => Ok(q(
            2 * n3 * (r * r + 1) + n * (3 * r * r * r + 410 * r * r + 3 * r),
            2880 * r * r,
        )),
        // n² ± 4 is never 1 mod 8
        RdKind::Narrow4 => Err(Error::Inconsistent(format!(
            "|r| = 4 with d = {} ≡ 1 (mod 8)",
            f.d
        ))),
    }
}

pub(crate) fn check_split_prime(f: &RdField, p: i64) -> Result<()> {
    if f.congruence != 5 {
        return Err(Error::WrongCongruence {
            d: f.d,
            found: f.radicand_class(),
            expected: "d ≡ 5 (mod 8)",
        });
    }
    if !matches!(f.r, 1 | 4) {
        return Err(Error::HypothesisViolation(format!(
            "r must be 1 or 4, got {}",
            f.r
        )));
    }
    if p <= 2 || f.n % p != 0 || !is_prime(p as u64) {
        return Err(Error::NotOddPrimeDivisor { p, n: f.n });
    }
    Ok(())
}

/// Value on the class of a prime above an odd `p | n`, `d ≡ 5 (mod 8)`.
pub fn split_prime_zeta(f: &RdField, p: i64) -> Result<Rational> {
    check_split_prime(f, p)?;
    let (n, p) = (f.n as i128, p as i128);
    let (n3, p2) = (n * n * n, p * p);
    let lead = if f.r == 4 { 1 } else { 4 };
    Ok(q(n3 + n * (lead * p2 * p2 + 10 * p2), 360 * p2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quad::classify_rd;

    fn field(n: i64, r: i64) -> RdField {
        classify_rd(n, r).unwrap()
    }

    #[test]
    fn principal_examples() {
        assert_eq!(principal_zeta_closed(&field(4, 1)).unwrap(), q(1, 3));
        assert_eq!(principal_zeta_closed(&field(18, -3)).unwrap(), q(19, 1));
        assert_eq!(principal_zeta_closed(&field(9, 4)).unwrap(), q(23, 10));
        assert!(matches!(
            principal_zeta_closed(&field(3, 1)),
            Err(Error::UncoveredCase(_))
        ));
        assert!(matches!(
            principal_zeta_closed(&field(5, -4)),
            Err(Error::UncoveredCase(_))
        ));
    }

    #[test]
    fn over_two_examples() {
        assert_eq!(nonprincipal_zeta_over2(&field(4, 1)).unwrap(), q(1, 3));
        assert_eq!(nonprincipal_zeta_over2(&field(16, 1)).unwrap(), q(4, 1));
        assert_eq!(nonprincipal_zeta_over2(&field(18, -3)).unwrap(), q(7, 1));
        assert!(matches!(
            nonprincipal_zeta_over2(&field(9, 4)),
            Err(Error::WrongCongruence { .. })
        ));
    }

    #[test]
    fn split_prime_examples() {
        assert_eq!(split_prime_zeta(&field(9, 4), 3).unwrap(), q(7, 10));
        assert_eq!(split_prime_zeta(&field(15, 4), 3).unwrap(), q(11, 6));
        assert_eq!(split_prime_zeta(&field(15, 4), 5).unwrap(), q(11, 6));
        assert!(split_prime_zeta(&field(15, 4), 7).is_err());
        assert!(split_prime_zeta(&field(4, 1), 3).is_err());
    }

    #[test]
    fn closed_forms_are_positive() {
        for n in 1..=400i64 {
            for r in -n + 1..=n {
                let Ok(f) = classify_rd(n, r) else { continue };
                if let Ok(v) = principal_zeta_closed(&f) {
                    assert!(v.is_positive(), "principal n={n} r={r}");
                }
                if let Ok(v) = nonprincipal_zeta_over2(&f) {
                    assert!(v.is_positive(), "over 2 n={n} r={r}");
                }
                for p in crate::arith::odd_prime_divisors(n).unwrap() {
                    if let Ok(v) = split_prime_zeta(&f, p as i64) {
                        assert!(v.is_positive(), "over p n={n} r={r} p={p}");
                    }
                }
            }
        }
    }
}
