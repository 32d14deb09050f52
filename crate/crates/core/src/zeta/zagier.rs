use crate::arith::{Rational, SigmaSource};
use crate::error::Result;
use crate::quad::field_radicand;

/// `Σ σ((D − t²)/4)` over `t² < D`, `t ≡ D (mod 2)`, both signs of `t`.
pub fn zagier_sum(disc: i64) -> Result<u128> {
    zagier_sum_with(disc, SigmaSource::Pointwise)
}

pub fn zagier_sum_with(disc: i64, sigma: SigmaSource<'_>) -> Result<u128> {
    field_radicand(disc)?;
    let disc = disc as u64;
    let mut t = disc % 2;
    let mut total = 0u128;
    while t * t < disc {
        let term = sigma.sigma((disc - t * t) / 4);
        total += if t == 0 { term } else { 2 * term };
        t += 2;
    }
    Ok(total)
}

/// `ζ_k(−1) = zagier_sum(D) / 60`.
pub fn zagier_zeta(disc: i64) -> Result<Rational> {
    Ok(Rational::new(zagier_sum(disc)?, 60))
}
