//! Factorization and the multiplicative functions built on it.
//!
//! Small factors come off by trial division against a sieved prime table;
//! any cofactor left over is split with deterministic Miller-Rabin and
//! Pollard-Brent rho, so every `u64` factors quickly.

use std::sync::OnceLock;

use crate::error::{Error, Result};

const TRIAL_LIMIT: u64 = 1 << 12;

/// `value = product of p^e`, primes strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub value: u64,
    pub factors: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn product(&self) -> u128 {
        self.factors
            .iter()
            .map(|&(p, e)| (p as u128).pow(e))
            .product()
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    /// Sum of divisors from the multiplicative formula.
    pub fn sigma(&self) -> u128 {
        self.factors
            .iter()
            .map(|&(p, e)| {
                let p = p as u128;
                let mut term = 1u128;
                let mut pk = 1u128;
                for _ in 0..e {
                    pk *= p;
                    term += pk;
                }
                term
            })
            .product()
    }
}

fn small_primes() -> &'static [u64] {
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let n = TRIAL_LIMIT as usize;
        let mut composite = vec![false; n + 1];
        let mut out = Vec::new();
        for i in 2..=n {
            if !composite[i] {
                out.push(i as u64);
                for j in (i * i..=n).step_by(i) {
                    composite[j] = true;
                }
            }
        }
        out
    })
}

pub(crate) fn positive(m: i64) -> Result<u64> {
    if m <= 0 {
        Err(Error::NonPositive(m as i128))
    } else {
        Ok(m as u64)
    }
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    acc
}

/// Deterministic for all `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

// Brent's variant; `n` must be odd and composite.
fn pollard_brent(n: u64) -> u64 {
    for c in 1u64.. {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let (mut x, mut y, mut q) = (2u64, 2u64, 1u64);
        let mut g = 1;
        let mut r = 1u64;
        let mut ys = y;
        while g == 1 {
            x = y;
            for _ in 0..r {
                y = f(y);
            }
            let mut k = 0;
            while k < r && g == 1 {
                ys = y;
                for _ in 0..(128.min(r - k)) {
                    y = f(y);
                    q = mul_mod(q, x.abs_diff(y), n);
                }
                g = gcd(q, n);
                k += 128;
            }
            r *= 2;
        }
        if g == n {
            loop {
                ys = f(ys);
                g = gcd(x.abs_diff(ys), n);
                if g > 1 {
                    break;
                }
            }
        }
        if g != n {
            return g;
        }
    }
    unreachable!()
}

fn split_large(n: u64, out: &mut Vec<u64>) {
    if n == 1 {
        return;
    }
    if is_prime(n) {
        out.push(n);
        return;
    }
    let f = pollard_brent(n);
    split_large(f, out);
    split_large(n / f, out);
}

/// Factorization of `m >= 1`; `factorize(1)` is empty.
pub fn factorize(m: i64) -> Result<Factorization> {
    Ok(factorize_u64(positive(m)?))
}

pub fn factorize_u64(value: u64) -> Factorization {
    assert!(value >= 1, "factorize_u64(0)");
    let mut rest = value;
    let mut factors: Vec<(u64, u32)> = Vec::new();
    for &p in small_primes() {
        if p * p > rest {
            break;
        }
        if rest % p == 0 {
            let mut e = 0;
            while rest % p == 0 {
                rest /= p;
                e += 1;
            }
            factors.push((p, e));
        }
    }
    if rest > 1 {
        if rest < TRIAL_LIMIT * TRIAL_LIMIT {
            factors.push((rest, 1));
        } else {
            let mut big = Vec::new();
            split_large(rest, &mut big);
            big.sort_unstable();
            for p in big {
                match factors.last_mut() {
                    Some((q, e)) if *q == p => *e += 1,
                    _ => factors.push((p, 1)),
                }
            }
        }
    }
    Factorization { value, factors }
}

/// Sum of the positive divisors of `m`.
pub fn sigma(m: i64) -> Result<u128> {
    Ok(factorize(m)?.sigma())
}

pub fn is_squarefree(m: i64) -> Result<bool> {
    Ok(factorize(m)?.factors.iter().all(|&(_, e)| e == 1))
}

/// Odd primes dividing `n`, increasing.
pub fn odd_prime_divisors(n: i64) -> Result<Vec<u64>> {
    Ok(factorize(n)?.primes().filter(|&p| p != 2).collect())
}
