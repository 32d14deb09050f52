//! Class numbers from cycles of reduced indefinite binary quadratic forms.
//!
//! Reduced forms of a fundamental discriminant `D > 0` split into cycles
//! under the neighbor map [`rho_step`], one cycle per proper equivalence
//! class, so the number of cycles is the narrow class number `h⁺`. The wide
//! class number is `h⁺` when the fundamental unit has norm −1 and `h⁺/2`
//! otherwise.
//!
//! `rho_step` is the signed convention: `(A, B, C) ↦ (C, B′, A′)`, so signs
//! of the leading coefficient alternate and every cycle has even length.
//! For `D = 5` the principal cycle is `(1, 1, −1) → (−1, 1, 1) → (1, 1, −1)`.

use std::collections::HashSet;
use std::fmt;

use num_integer::{Integer, Roots};

use crate::error::{Error, Result};
use crate::quad::{discriminant, field_radicand, unit_norm_cf};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuadraticForm {
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

impl fmt::Display for QuadraticForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.c)
    }
}

impl QuadraticForm {
    pub fn new(a: i64, b: i64, c: i64) -> Self {
        QuadraticForm { a, b, c }
    }

    pub fn discriminant(&self) -> i128 {
        let (a, b, c) = (self.a as i128, self.b as i128, self.c as i128);
        b * b - 4 * a * c
    }

    pub fn is_primitive(&self) -> bool {
        self.a.gcd(&self.b).gcd(&self.c) == 1
    }

    /// `0 < B < √D` and `√D − B < 2|A| < √D + B`.
    pub fn is_reduced(&self) -> bool {
        let disc = self.discriminant();
        let (a2, b) = (2 * (self.a as i128).abs(), self.b as i128);
        b > 0
            && b * b < disc
            && disc < (a2 + b) * (a2 + b)
            && (a2 - b < 0 || (a2 - b) * (a2 - b) < disc)
    }

    fn validate(&self) -> Result<i64> {
        let disc = self.discriminant();
        let disc =
            i64::try_from(disc).map_err(|_| Error::Overflow(format!("discriminant of {self}")))?;
        field_radicand(disc)?;
        if !self.is_primitive() {
            return Err(Error::HypothesisViolation(format!(
                "{self} is not primitive"
            )));
        }
        Ok(disc)
    }
}

// Neighbor of any form of discriminant `disc` with floor(√disc) = root.
fn rho(f: QuadraticForm, disc: i64, root: i64) -> QuadraticForm {
    let m = 2 * f.c.abs();
    let base = (-f.b).rem_euclid(m);
    let b = if (f.c as i128) * (f.c as i128) < disc as i128 {
        // largest B' ≡ −B (mod 2|C|) below √D
        base + m * ((root - base).div_euclid(m))
    } else {
        // −|C| < B' ≤ |C|
        if base > f.c.abs() {
            base - m
        } else {
            base
        }
    };
    let a = ((b as i128 * b as i128 - disc as i128) / (4 * f.c as i128)) as i64;
    QuadraticForm { a: f.c, b, c: a }
}

/// A properly equivalent reduced form.
pub fn reduce(f: QuadraticForm) -> Result<QuadraticForm> {
    let disc = f.validate()?;
    let root = disc.sqrt();
    let mut g = f;
    while !g.is_reduced() {
        g = rho(g, disc, root);
    }
    Ok(g)
}

/// The reduced right neighbor of a reduced form.
pub fn rho_step(f: QuadraticForm) -> Result<QuadraticForm> {
    let disc = f.validate()?;
    if !f.is_reduced() {
        return Err(Error::HypothesisViolation(format!("{f} is not reduced")));
    }
    Ok(rho(f, disc, disc.sqrt()))
}

/// One cycle of reduced forms, starting from its least member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionCycle {
    pub forms: Vec<QuadraticForm>,
    pub canonical_key: QuadraticForm,
}

impl ReductionCycle {
    pub fn len(&self) -> usize {
        self.forms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forms.is_empty()
    }

    pub fn contains(&self, f: &QuadraticForm) -> bool {
        self.forms.contains(f)
    }
}

fn walk(start: QuadraticForm, disc: i64, root: i64) -> Vec<QuadraticForm> {
    let mut forms = vec![start];
    let mut g = rho(start, disc, root);
    while g != start {
        forms.push(g);
        g = rho(g, disc, root);
    }
    forms
}

fn canonical(mut forms: Vec<QuadraticForm>) -> ReductionCycle {
    let (i, key) = forms
        .iter()
        .copied()
        .enumerate()
        .min_by_key(|&(_, f)| f)
        .expect("cycles are nonempty");
    forms.rotate_left(i);
    ReductionCycle {
        forms,
        canonical_key: key,
    }
}

/// The cycle through the reduction of `f`.
pub fn cycle_of(f: QuadraticForm) -> Result<ReductionCycle> {
    let g = reduce(f)?;
    let disc = g.discriminant() as i64;
    Ok(canonical(walk(g, disc, disc.sqrt())))
}

/// All primitive reduced forms of a fundamental discriminant.
pub fn reduced_forms(disc: i64) -> Result<Vec<QuadraticForm>> {
    field_radicand(disc)?;
    let root = disc.sqrt();
    let mut out = Vec::new();
    let mut b = if disc % 2 == 0 { 2 } else { 1 };
    while b <= root {
        let prod = (disc - b * b) / 4;
        let lo = ((root + 1 - b + 1) / 2).max(1);
        let hi = (root + b) / 2;
        for a in lo..=hi {
            if prod % a != 0 {
                continue;
            }
            let c = prod / a;
            for f in [QuadraticForm::new(a, b, -c), QuadraticForm::new(-a, b, c)] {
                if f.is_primitive() {
                    debug_assert!(f.is_reduced(), "{f}");
                    out.push(f);
                }
            }
        }
        b += 2;
    }
    out.sort_unstable();
    Ok(out)
}

/// The cycles partitioning [`reduced_forms`], ordered by canonical key.
pub fn cycles(disc: i64) -> Result<Vec<ReductionCycle>> {
    let forms = reduced_forms(disc)?;
    let root = disc.sqrt();
    let mut seen = HashSet::with_capacity(forms.len());
    let mut out = Vec::new();
    for &f in &forms {
        if seen.contains(&f) {
            continue;
        }
        let members = walk(f, disc, root);
        seen.extend(members.iter().copied());
        out.push(canonical(members));
    }
    Ok(out)
}

/// `h⁺(D)`.
pub fn narrow_class_number(disc: i64) -> Result<u64> {
    Ok(cycles(disc)?.len() as u64)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassNumbers {
    pub h: u64,
    pub h_plus: u64,
    pub unit_norm: i8,
}

pub fn class_numbers(d: i64) -> Result<ClassNumbers> {
    if d < 2 {
        return Err(Error::DegenerateRadicand(d));
    }
    let h_plus = narrow_class_number(discriminant(d))?;
    let unit_norm = unit_norm_cf(d)?;
    let h = if unit_norm == -1 {
        h_plus
    } else if h_plus % 2 == 0 {
        h_plus / 2
    } else {
        return Err(Error::Inconsistent(format!(
            "h⁺({d}) = {h_plus} is odd but the fundamental unit has norm +1"
        )));
    };
    Ok(ClassNumbers {
        h,
        h_plus,
        unit_norm,
    })
}

/// Wide class number `h(d)`.
pub fn class_number(d: i64) -> Result<u64> {
    class_numbers(d).map(|c| c.h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashMap;

    #[test]
    fn reduce_examples() {
        let f = QuadraticForm::new(1, 1, -1);
        assert!(f.is_reduced());
        assert_eq!(reduce(f).unwrap(), f);

        let g = reduce(QuadraticForm::new(1, 5, 2)).unwrap();
        assert!(g.is_reduced());
        assert_eq!(g.discriminant(), 17);

        let g = reduce(QuadraticForm::new(-1, 1, 1)).unwrap();
        assert!(cycle_of(QuadraticForm::new(1, 1, -1)).unwrap().contains(&g));
    }

    #[test]
    fn rejects_bad_discriminants() {
        assert!(matches!(
            reduce(QuadraticForm::new(1, 4, -1)),
            Err(Error::NonFundamental(20))
        ));
        assert!(matches!(
            rho_step(QuadraticForm::new(1, 4, -1)),
            Err(Error::NonFundamental(20))
        ));
        assert!(matches!(
            reduce(QuadraticForm::new(1, 2, 1)),
            Err(Error::InvalidDiscriminant(0))
        ));
        assert!(matches!(
            reduce(QuadraticForm::new(1, 1, 1)),
            Err(Error::InvalidDiscriminant(-3))
        ));
        assert!(matches!(
            narrow_class_number(16),
            Err(Error::InvalidDiscriminant(16))
        ));
        assert!(rho_step(QuadraticForm::new(1, 5, 2)).is_err());
    }

    #[test]
    fn principal_cycle_of_five() {
        let f = QuadraticForm::new(1, 1, -1);
        let g = rho_step(f).unwrap();
        assert_eq!(g, QuadraticForm::new(-1, 1, 1));
        assert_eq!(rho_step(g).unwrap(), f);
        assert_eq!(cycle_of(f).unwrap().len(), 2);
    }

    #[test]
    fn rho_is_periodic() {
        for disc in [5i64, 8, 12, 13, 17, 40, 85, 321, 1229] {
            for f in reduced_forms(disc).unwrap() {
                let mut g = rho_step(f).unwrap();
                let mut steps = 1;
                while g != f {
                    assert!(g.is_reduced());
                    g = rho_step(g).unwrap();
                    steps += 1;
                }
                assert_eq!(steps % 2, 0);
            }
        }
    }

    #[test]
    fn narrow_examples() {
        assert_eq!(narrow_class_number(5).unwrap(), 1);
        assert_eq!(narrow_class_number(321).unwrap(), 6);
        assert_eq!(narrow_class_number(85).unwrap(), 2);
    }

    #[test]
    fn class_number_examples() {
        assert_eq!(class_number(229).unwrap(), 3);
        assert_eq!(class_number(629).unwrap(), 2);
        assert_eq!(class_number(257).unwrap(), 3);
        assert_eq!(class_number(79).unwrap(), 3);
        assert_eq!(class_number(82).unwrap(), 4);
        assert_eq!(class_number(10).unwrap(), 2);
        assert!(class_number(12).is_err());
    }

    #[test]
    fn cycles_partition_reduced_forms() {
        for disc in 5..10_000i64 {
            let Ok(forms) = reduced_forms(disc) else {
                continue;
            };
            let cs = cycles(disc).unwrap();
            let mut owner: HashMap<QuadraticForm, usize> = HashMap::new();
            for (i, c) in cs.iter().enumerate() {
                for f in &c.forms {
                    assert!(f.is_reduced());
                    assert!(
                        owner.insert(*f, i).is_none(),
                        "{f} in two cycles, D = {disc}"
                    );
                }
                assert_eq!(rho_step(*c.forms.last().unwrap()).unwrap(), c.forms[0]);
            }
            assert_eq!(owner.len(), forms.len(), "D = {disc}");
        }
    }

    // Independent count: every reduced form of some fixed small A-window,
    // found by exhaustive (A, B) search rather than the divisor walk.
    #[test]
    fn enumeration_matches_exhaustive_search() {
        for disc in 5..3000i64 {
            let Ok(forms) = reduced_forms(disc) else {
                continue;
            };
            let root = disc.sqrt();
            let mut brute = Vec::new();
            for a in -root..=root {
                if a == 0 {
                    continue;
                }
                for b in 1..=root {
                    if (b * b - disc) % (4 * a) != 0 {
                        continue;
                    }
                    let f = QuadraticForm::new(a, b, (b * b - disc) / (4 * a));
                    if f.is_reduced() && f.is_primitive() {
                        brute.push(f);
                    }
                }
            }
            brute.sort_unstable();
            assert_eq!(forms, brute, "D = {disc}");
        }
    }

    #[test]
    fn h_plus_over_h() {
        for d in 2..3000i64 {
            let Ok(c) = class_numbers(d) else { continue };
            let ratio = c.h_plus / c.h;
            assert!(ratio == 1 || ratio == 2);
            assert_eq!(ratio == 1, c.unit_norm == -1, "d = {d}");
        }
    }
}
