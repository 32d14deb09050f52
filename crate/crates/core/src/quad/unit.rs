//! Fundamental units from continued fractions.
//!
//! The expansion starts at `√d` (d ≡ 2, 3 mod 4) or `(1 + √d)/2`
//! (d ≡ 1 mod 4). Complete quotients are kept as `(P + √d)/Q` with
//! `Q | d − P²`; after the first step the expansion is purely periodic.
//! If `ξ` is the first periodic complete quotient and the period has
//! length `l`, then `q_{l-1}·ξ + q_{l-2}` is the fundamental unit and its
//! norm is `(−1)^l`.

use num_bigint::BigInt;
use num_integer::Roots;
use num_traits::{One, Zero};

use crate::arith::{is_squarefree, Rational};
use crate::error::{Error, Result};

use super::QuadElement;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Quotient {
    p: i64,
    q: i64,
}

fn validate(d: i64) -> Result<()> {
    if d < 2 {
        return Err(Error::DegenerateRadicand(d));
    }
    if !is_squarefree(d)? {
        return Err(Error::NotSquarefree(d));
    }
    Ok(())
}

fn step(state: Quotient, d: i64, root: i64) -> (i64, Quotient) {
    let a = (state.p + root).div_euclid(state.q);
    let p = a * state.q - state.p;
    let q = (d - p * p) / state.q;
    (a, Quotient { p, q })
}

fn start(d: i64) -> Quotient {
    if d.rem_euclid(4) == 1 {
        Quotient { p: 1, q: 2 }
    } else {
        Quotient { p: 0, q: 1 }
    }
}

/// First periodic complete quotient and the partial quotients of one period.
fn period(d: i64) -> (Quotient, Vec<i64>) {
    let root = d.sqrt();
    let (_, first) = step(start(d), d, root);
    let mut terms = Vec::new();
    let mut state = first;
    loop {
        let (a, next) = step(state, d, root);
        terms.push(a);
        state = next;
        if state == first {
            return (first, terms);
        }
    }
}

/// Length of the continued-fraction period.
pub fn cf_period_length(d: i64) -> Result<usize> {
    validate(d)?;
    Ok(period(d).1.len())
}

/// Norm of the fundamental unit, from the period parity alone.
pub fn unit_norm_cf(d: i64) -> Result<i8> {
    Ok(if cf_period_length(d)? % 2 == 0 { 1 } else { -1 })
}

/// Fundamental unit of the maximal order of `Q(√d)` and its norm.
pub fn fundamental_unit_cf(d: i64) -> Result<(QuadElement, i8)> {
    validate(d)?;
    let (xi, terms) = period(d);
    // q_{-2} = 1, q_{-1} = 0
    let (mut q_prev, mut q_cur) = (BigInt::one(), BigInt::zero());
    for a in &terms {
        let next = BigInt::from(*a) * &q_cur + &q_prev;
        q_prev = q_cur;
        q_cur = next;
    }
    let xi = QuadElement::new(d, Rational::new(xi.p, xi.q), Rational::new(1, xi.q));
    let eps = &xi.scale(&Rational::from(q_cur)) + &QuadElement::rational(d, Rational::from(q_prev));
    let norm = if terms.len() % 2 == 0 { 1 } else { -1 };
    debug_assert_eq!(eps.norm(), Rational::from(norm as i64));
    Ok((eps, norm))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_units() {
        assert_eq!(
            fundamental_unit_cf(2).unwrap(),
            (QuadElement::new(2, 1, 1), -1)
        );
        assert_eq!(
            fundamental_unit_cf(3).unwrap(),
            (QuadElement::new(3, 2, 1), 1)
        );
        assert_eq!(
            fundamental_unit_cf(5).unwrap(),
            (QuadElement::halves(5, 1, 1), -1)
        );
        assert_eq!(
            fundamental_unit_cf(13).unwrap(),
            (QuadElement::halves(13, 3, 1), -1)
        );
        assert_eq!(
            fundamental_unit_cf(321).unwrap(),
            (QuadElement::new(321, 215, 12), 1)
        );
        // period 11 for √94-type sizes; x = 2143295 for d = 94
        assert_eq!(
            fundamental_unit_cf(94).unwrap(),
            (QuadElement::new(94, 2143295, 221064), 1)
        );
    }

    #[test]
    fn rejects_invalid_radicands() {
        assert!(matches!(
            fundamental_unit_cf(1),
            Err(Error::DegenerateRadicand(1))
        ));
        assert!(matches!(
            fundamental_unit_cf(12),
            Err(Error::NotSquarefree(12))
        ));
        assert!(unit_norm_cf(-5).is_err());
    }

    #[test]
    fn unit_is_a_unit_above_one() {
        for d in 2..3000i64 {
            let Ok((eps, norm)) = fundamental_unit_cf(d) else {
                continue;
            };
            assert_eq!(eps.norm(), Rational::from(norm as i64), "d = {d}");
            assert_eq!((&eps - &QuadElement::rational(d, 1)).signum(), 1);
            assert_eq!(unit_norm_cf(d).unwrap(), norm);
            // integral: coordinates in Z, or both halves of odd integers when d ≡ 1 mod 4
            let two_x = eps.x() * &Rational::from(2);
            let two_y = eps.y() * &Rational::from(2);
            assert!(two_x.is_integer() && two_y.is_integer());
            if d % 4 != 1 {
                assert!(eps.x().is_integer() && eps.y().is_integer());
            }
        }
    }
}
