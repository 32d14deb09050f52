//! Invariants that tie independent modules together: the divisor-sum side,
//! the Lang side, the closed forms, the unit and class-number oracles.

use proptest::prelude::*;

use rdzeta::arith::{sigma_sieve, SigmaSource};
use rdzeta::dedekind::{kim_matrix, lang_partial_zeta};
use rdzeta::forms::class_number;
use rdzeta::harness::{rd_fields_up_to, scan, ScanConfig, Verdict};
use rdzeta::quad::{
    classify_rd, discriminant, fundamental_unit_cf, fundamental_unit_closed, ideal_over_p, RdField,
};
use rdzeta::zeta::{
    criterion_holds, nonprincipal_zeta_over2, principal_zeta_closed, split_prime_zeta, zagier_sum,
    zagier_sum_with, zagier_zeta, CriterionFamily, CriterionTag,
};
use rdzeta::Rational;

fn fields(d_max: i64) -> Vec<RdField> {
    let mut seen = std::collections::HashSet::new();
    rd_fields_up_to(d_max)
        .into_iter()
        .filter(|f| seen.insert(f.d))
        .collect()
}

/// With two classes the total is the sum of the two partial values.
#[test]
fn class_sums_over_two() {
    let mut two_class = 0;
    for f in fields(20_000).into_iter().filter(|f| f.d % 8 == 1) {
        let total = zagier_zeta(f.disc).unwrap();
        let p = principal_zeta_closed(&f).unwrap();
        let a = nonprincipal_zeta_over2(&f).unwrap();
        match class_number(f.d).unwrap() {
            1 => assert!(total == p && p == a, "d={}", f.d),
            2 if p != a => {
                assert_eq!(total, &p + &a, "d={}", f.d);
                two_class += 1;
            }
            _ => {}
        }
    }
    assert!(two_class >= 2, "{two_class}");
}

#[test]
fn class_sums_over_split_primes() {
    let mut two_class = 0;
    for f in fields(20_000) {
        if f.d % 8 != 5 || !matches!(f.r, 1 | 4) {
            continue;
        }
        let total = zagier_zeta(f.disc).unwrap();
        let p = principal_zeta_closed(&f).unwrap();
        let h = class_number(f.d).unwrap();
        if h == 1 {
            assert_eq!(total, p, "d={}", f.d);
        }
        for q in rdzeta::arith::odd_prime_divisors(f.n).unwrap() {
            let Ok(a) = split_prime_zeta(&f, q as i64) else {
                continue;
            };
            if h == 2 && a != p {
                assert_eq!(total, &p + &a, "d={} p={q}", f.d);
                two_class += 1;
            }
        }
    }
    assert!(two_class >= 2, "{two_class}");
}

#[test]
fn lang_agrees_on_split_primes() {
    for f in fields(20_000) {
        if f.d % 8 != 5 || !matches!(f.r, 1 | 4) {
            continue;
        }
        let (eps, norm) = fundamental_unit_closed(&f);
        for q in rdzeta::arith::odd_prime_divisors(f.n).unwrap() {
            let q = q as i64;
            let Ok(closed) = split_prime_zeta(&f, q) else {
                continue;
            };
            let (a, b) = ideal_over_p(&f, q).unwrap();
            for ideal in [a, b] {
                let m = kim_matrix(&ideal, &eps).unwrap();
                assert_eq!(
                    lang_partial_zeta(&ideal, &m, norm).unwrap(),
                    closed,
                    "d={} p={q}",
                    f.d
                );
            }
        }
    }
}

#[test]
fn scan_hits_are_sound() {
    for (tag, cfg) in [
        (
            CriterionTag::T35,
            ScanConfig::new(CriterionTag::T35)
                .with_max_n(60)
                .with_max_abs_r(200),
        ),
        (
            CriterionTag::T42,
            ScanConfig::new(CriterionTag::T42).with_max_d(50_000),
        ),
        (
            CriterionTag::T43,
            ScanConfig::new(CriterionTag::T43).with_max_d(50_000),
        ),
    ] {
        let out = scan(&cfg).unwrap();
        assert!(out.failures.is_empty(), "{tag}: {:?}", out.failures);
        for r in &out.records {
            assert!(!r.contradicts_criterion(), "{tag}: {r:?}");
            if r.verdict == Verdict::CriterionAndH3 {
                let c = criterion_holds(&CriterionFamily::new(tag, r.n, r.r, r.p)).unwrap();
                assert!(c.equal && c.lhs == zagier_sum(r.disc).unwrap());
                assert_eq!(class_number(r.d).unwrap(), tag.target_class_number());
            }
        }
    }
}

#[test]
fn small_field_zeta_values() {
    // ζ(−1) = 1/30 for Q(√5), 1/12 for Q(√2), 1/6 for Q(√3)
    assert_eq!(zagier_zeta(5).unwrap(), Rational::new(1, 30));
    assert_eq!(zagier_zeta(8).unwrap(), Rational::new(1, 12));
    assert_eq!(zagier_zeta(12).unwrap(), Rational::new(1, 6));
    let f = classify_rd(1, 4).unwrap();
    assert_eq!(principal_zeta_closed(&f).unwrap(), Rational::new(1, 30));
}

fn rd_pair() -> impl Strategy<Value = (i64, i64)> {
    (2i64..20_000, any::<prop::sample::Index>()).prop_filter_map("R-D field", |(n, idx)| {
        let rs: Vec<i64> = (-n + 1..=n)
            .filter(|&r| r != 0 && (4 * n) % r == 0)
            .collect();
        let r = rs[idx.index(rs.len())];
        classify_rd(n, r).ok().map(|f| (f.n, f.r))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn unit_formula_matches_continued_fraction((n, r) in rd_pair()) {
        let f = classify_rd(n, r).unwrap();
        let (closed, nc) = fundamental_unit_closed(&f);
        let (cf, ncf) = fundamental_unit_cf(f.d).unwrap();
        prop_assert_eq!(closed, cf);
        prop_assert_eq!(nc, ncf);
    }

    #[test]
    fn sieve_and_pointwise_sums_agree(d in 2i64..200_000) {
        prop_assume!(rdzeta::arith::is_squarefree(d).unwrap());
        let disc = discriminant(d);
        let table = sigma_sieve(disc / 4 + 1).unwrap();
        prop_assert_eq!(
            zagier_sum_with(disc, SigmaSource::Table(&table)).unwrap(),
            zagier_sum_with(disc, SigmaSource::Pointwise).unwrap()
        );
    }
}
