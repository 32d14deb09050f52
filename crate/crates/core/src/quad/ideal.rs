use crate::arith::{is_prime, Rational};
use crate::error::{Error, Result};

use super::{QuadElement, RdField};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

/// Integral ideal with ordered Z-basis `{r1, r2}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealData {
    pub field: RdField,
    pub r1: QuadElement,
    pub r2: QuadElement,
    pub norm: u64,
    /// `r1·r2' − r1'·r2`, always a nonzero rational multiple of `√d`.
    pub delta: QuadElement,
}

impl IdealData {
    fn from_basis(field: &RdField, r1: QuadElement, r2: QuadElement, norm: u64) -> Self {
        let delta = &(&r1 * &r2.conj()) - &(&r1.conj() * &r2);
        debug_assert!(delta.x().is_zero() && !delta.y().is_zero());
        IdealData {
            field: field.clone(),
            r1,
            r2,
            norm,
            delta,
        }
    }

    /// Sign of the `√d` coefficient of δ.
    pub fn delta_sign(&self) -> i32 {
        self.delta.y().signum()
    }
}

/// `(2, (1 ± √d)/2)` with basis `{(1 ± √d)/2, 2}`; needs `d ≡ 1 (mod 8)`.
pub fn ideal_over_2(f: &RdField, sign: Sign) -> Result<IdealData> {
    if f.congruence != 1 {
        return Err(Error::WrongCongruence {
            d: f.d,
            found: f.radicand_class(),
            expected: "d ≡ 1 (mod 8)",
        });
    }
    let r1 = QuadElement::halves(f.d, 1, sign.as_i64());
    let r2 = QuadElement::rational(f.d, 2);
    Ok(IdealData::from_basis(f, r1, r2, 2))
}

/// The conjugate primes above an odd `p | n` for `d ≡ 5 (mod 8)`, `r ∈ {1, 4}`.
///
/// Generators are `(p, (p + 2 ± √d)/2)` for `r = 4` and `(p, (1 ± √d)/2)`
/// for `r = 1`; the basis is `{g, p}` with `g` the second generator. The
/// first ideal of the pair takes the `+` sign, so its δ is `+p√d`.
pub fn ideal_over_p(f: &RdField, p: i64) -> Result<(IdealData, IdealData)> {
    if f.congruence != 5 {
        return Err(Error::WrongCongruence {
            d: f.d,
            found: f.radicand_class(),
            expected: "d ≡ 5 (mod 8)",
        });
    }
    if !matches!(f.r, 1 | 4) {
        return Err(Error::HypothesisViolation(format!(
            "split-prime ideals need r ∈ {{1, 4}}, got r = {}",
            f.r
        )));
    }
    if p <= 2 || f.n % p != 0 || !is_prime(p as u64) {
        return Err(Error::NotOddPrimeDivisor { p, n: f.n });
    }
    let offset = if f.r == 4 { p + 2 } else { 1 };
    let make = |sign: i64| {
        let g = QuadElement::halves(f.d, offset, sign);
        let ideal = IdealData::from_basis(f, g, QuadElement::rational(f.d, p), p as u64);
        debug_assert!((ideal.r1.norm() / Rational::from(p)).is_integer());
        ideal
    };
    Ok((make(1), make(-1)))
}
