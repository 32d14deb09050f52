//! Integers, rationals and elementary multiplicative number theory.

mod factor;
mod rational;
mod sigma;

pub use factor::{
    factorize, factorize_u64, is_prime, is_squarefree, odd_prime_divisors, sigma, Factorization,
};
pub use rational::{ParseRationalError, Rational};
pub use sigma::{
    sigma_sieve, sigma_sieve_with_budget, SigmaSource, SigmaTable, DEFAULT_SIEVE_BUDGET,
};
