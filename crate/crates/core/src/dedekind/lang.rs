//! Change-of-basis matrix for multiplication by ε and the Lang evaluation
//! of `ζ(−1, 𝔄)`.

use num_traits::ToPrimitive;

use crate::arith::Rational;
use crate::error::{Error, Result};
use crate::quad::{IdealData, QuadElement};

use super::sums::{apostol_s3_raw, dedekind_sum_closed, DedekindSumQuery, SumIndex};

/// `ε·(r1, r2)ᵀ = M·(r1, r2)ᵀ`, `M = [[a, b], [c, d]]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TransformMatrix {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
}

impl TransformMatrix {
    pub fn det(&self) -> i128 {
        self.a as i128 * self.d as i128 - self.b as i128 * self.c as i128
    }
}

fn integral_entry(entry: &'static str, value: Rational) -> Result<i64> {
    let int = value.to_integer().ok_or_else(|| Error::NonIntegralEntry {
        entry,
        value: value.to_string(),
    })?;
    int.to_i64()
        .ok_or_else(|| Error::Overflow(format!("matrix entry {entry} = {int}")))
}

/// Entries from the four trace formulas, checked against `ε·r = M·r`.
pub fn kim_matrix(ideal: &IdealData, eps: &QuadElement) -> Result<TransformMatrix> {
    let (r1, r2) = (&ideal.r1, &ideal.r2);
    let delta = &ideal.delta;
    if delta.is_zero() {
        return Err(Error::Inconsistent("ideal basis has δ = 0".into()));
    }
    let eps_c = eps.conj();
    let trace_over_delta =
        |x: QuadElement| -> Result<Rational> { Ok(x.try_div(delta)?.expect("δ ≠ 0").trace()) };
    let r1_r2c = r1.try_mul(&r2.conj())?;
    let a = integral_entry("a", trace_over_delta(r1_r2c.try_mul(eps)?)?)?;
    let b = integral_entry(
        "b",
        trace_over_delta(r1.try_mul(&r1.conj())?.try_mul(&eps_c)?)?,
    )?;
    let c = integral_entry(
        "c",
        trace_over_delta(r2.try_mul(&r2.conj())?.try_mul(eps)?)?,
    )?;
    let d = integral_entry("d", trace_over_delta(r1_r2c.try_mul(&eps_c)?)?)?;
    let m = TransformMatrix { a, b, c, d };

    let int = |v: i64| QuadElement::rational(ideal.field.d, v);
    let row1 = &(&int(a) * r1) + &(&int(b) * r2);
    let row2 = &(&int(c) * r1) + &(&int(d) * r2);
    if row1 != eps.try_mul(r1)? || row2 != eps.try_mul(r2)? {
        return Err(Error::Inconsistent(format!(
            "ε·r ≠ M·r for M = {m:?}; the basis is not a Z-basis of an ideal"
        )));
    }
    Ok(m)
}

/// `S^i(h, c)` at `|c|`: closed forms first, the raw Apostol sum as the
/// index-3 fallback.
fn resolve_sum(index: SumIndex, h: i64, c: i64) -> Result<Rational> {
    let q = DedekindSumQuery::new(index, h, c.abs())?;
    match dedekind_sum_closed(q) {
        Ok(v) => Ok(v),
        Err(e @ Error::UnsupportedPattern { .. }) => match index {
            SumIndex::Three => apostol_s3_raw(h, c.abs()),
            SumIndex::Two => Err(e),
        },
        Err(e) => Err(e),
    }
}

/// `ζ_k(−1, 𝔄)` for the class `𝔄` with `𝔞 ∈ 𝔄⁻¹`.
///
/// Dedekind sums with a negative modulus are taken at `|c|`.
pub fn lang_partial_zeta(ideal: &IdealData, m: &TransformMatrix, eps_norm: i8) -> Result<Rational> {
    if m.c == 0 {
        return Err(Error::ZeroC);
    }
    let sgn_delta = Rational::from(ideal.delta_sign() as i64);
    let sgn_c = Rational::from(m.c.signum());
    let (a, c, d) = (
        Rational::from(m.a),
        Rational::from(m.c),
        Rational::from(m.d),
    );
    let c3 = c.pow(3);
    let c3s = &c3 * &sgn_c;
    let tr = &a + &d;

    let s3a = resolve_sum(SumIndex::Three, m.a, m.c)?;
    let s2a = resolve_sum(SumIndex::Two, m.a, m.c)?;
    let s3d = resolve_sum(SumIndex::Three, m.d, m.c)?;
    let s2d = resolve_sum(SumIndex::Two, m.d, m.c)?;

    let bracket = tr.pow(3)
        - Rational::from(6) * &tr * Rational::from(eps_norm as i64)
        - Rational::from(240) * &c3s * s3a
        + Rational::from(180) * &a * &c3s * s2a
        - Rational::from(240) * &c3s * s3d
        + Rational::from(180) * &d * &c3s * s2d;

    let r2_norm = ideal.r2.norm();
    let prefactor = sgn_delta * r2_norm / (Rational::from(360u64 * ideal.norm) * c3);
    Ok(prefactor * bracket)
}
