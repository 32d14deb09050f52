//! Range scans over the admissible tuples of one criterion family.
//!
//! Tuples are grouped by radicand so the Zagier sum and the class number
//! are computed once per field. Groups are processed in parallel by a
//! bounded pool and the results are put back in `(d, p)` order, so the
//! output does not depend on the worker count.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::{
    factorize_u64, is_squarefree, odd_prime_divisors, sigma_sieve_with_budget, Rational,
    SigmaSource, DEFAULT_SIEVE_BUDGET,
};
use crate::error::{Error, Result};
use crate::forms::class_number;
use crate::quad::{classify_rd, discriminant, RdField, RdKind};
use crate::zeta::{criterion_rhs, zagier_sum_with, CriterionFamily, CriterionTag};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    /// Equality holds and `h` is the family's target class number.
    CriterionAndH3,
    CriterionOnly,
    H3Only,
    Neither,
    /// The radicand the family's converse excludes.
    Exception,
}

impl Verdict {
    pub fn classify(tag: CriterionTag, d: i64, equal: bool, h: u64) -> Self {
        if tag.exceptional_d() == Some(d) {
            return Verdict::Exception;
        }
        match (equal, h == tag.target_class_number()) {
            (true, true) => Verdict::CriterionAndH3,
            (true, false) => Verdict::CriterionOnly,
            (false, true) => Verdict::H3Only,
            (false, false) => Verdict::Neither,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::CriterionAndH3 => "criterion-and-h3",
            Verdict::CriterionOnly => "criterion-only",
            Verdict::H3Only => "h3-only",
            Verdict::Neither => "neither",
            Verdict::Exception => "exception",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Verdict {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        [
            Verdict::CriterionAndH3,
            Verdict::CriterionOnly,
            Verdict::H3Only,
            Verdict::Neither,
            Verdict::Exception,
        ]
        .into_iter()
        .find(|v| v.as_str() == s)
        .ok_or_else(|| Error::Config(format!("unknown verdict {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Odd,
    Even,
}

/// One criterion evaluation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanRecord {
    pub n: i64,
    pub r: i64,
    pub d: i64,
    pub disc: i64,
    pub family: CriterionTag,
    pub p: Option<i64>,
    pub lhs: u128,
    pub rhs: Rational,
    pub equal: bool,
    pub h: u64,
    pub verdict: Verdict,
}

impl ScanRecord {
    pub fn h_parity(&self) -> Parity {
        if self.h % 2 == 1 {
            Parity::Odd
        } else {
            Parity::Even
        }
    }

    /// `(n, r, d, p)`, the row shape of the published tables.
    pub fn key(&self) -> (i64, i64, i64, Option<i64>) {
        (self.n, self.r, self.d, self.p)
    }

    /// Whether this record contradicts the criterion as stated: `h` on
    /// target without equality, or equality with an admissible `h` off
    /// target (odd `h` unless the family is a plain biconditional).
    pub fn contradicts_criterion(&self) -> bool {
        match self.verdict {
            Verdict::H3Only => true,
            Verdict::CriterionOnly => {
                !self.family.converse_needs_odd_h() || self.h_parity() == Parity::Odd
            }
            _ => false,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Csv,
    Jsonl,
    Table,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(OutputFormat::Csv),
            "jsonl" => Ok(OutputFormat::Jsonl),
            "table" => Ok(OutputFormat::Table),
            _ => Err(Error::Config(format!("unknown output format {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanConfig {
    pub family: CriterionTag,
    pub max_n: Option<i64>,
    pub max_abs_r: Option<i64>,
    pub max_d: Option<i64>,
    /// 0 picks the number of CPUs.
    pub jobs: usize,
    pub format: OutputFormat,
    pub sieve_budget: u64,
}

impl ScanConfig {
    pub fn new(family: CriterionTag) -> Self {
        ScanConfig {
            family,
            max_n: None,
            max_abs_r: None,
            max_d: None,
            jobs: 0,
            format: OutputFormat::Csv,
            sieve_budget: DEFAULT_SIEVE_BUDGET,
        }
    }

    /// Bounds small enough to finish in seconds.
    pub fn desk_default(family: CriterionTag) -> Self {
        let mut cfg = ScanConfig::new(family);
        match family {
            CriterionTag::T33 => cfg.max_d = Some(1_000_000),
            CriterionTag::T34 => cfg.max_d = Some(100_000),
            CriterionTag::T35 => {
                cfg.max_n = Some(100);
                cfg.max_abs_r = Some(400);
            }
            CriterionTag::T42 | CriterionTag::T43 => cfg.max_d = Some(10_000),
        }
        cfg
    }

    /// The bounds of the published computations. Far beyond desk scale.
    pub fn published_bounds(family: CriterionTag) -> Self {
        let mut cfg = ScanConfig::new(family);
        match family {
            CriterionTag::T33 => cfg.max_d = Some(10_000_000_000),
            CriterionTag::T34 => cfg.max_d = Some(10_000_000_000),
            CriterionTag::T35 => {
                cfg.max_n = Some(10_000);
                cfg.max_abs_r = Some(40_000);
            }
            CriterionTag::T42 => cfg.max_d = Some(100_000_000),
            CriterionTag::T43 => cfg.max_d = Some(10_000_000_000),
        }
        cfg
    }

    pub fn with_max_n(mut self, v: i64) -> Self {
        self.max_n = Some(v);
        self
    }

    pub fn with_max_abs_r(mut self, v: i64) -> Self {
        self.max_abs_r = Some(v);
        self
    }

    pub fn with_max_d(mut self, v: i64) -> Self {
        self.max_d = Some(v);
        self
    }

    pub fn with_jobs(mut self, jobs: usize) -> Self {
        self.jobs = jobs;
        self
    }

    pub fn validate(&self) -> Result<()> {
        for (name, v) in [
            ("max-n", self.max_n),
            ("max-abs-r", self.max_abs_r),
            ("max-d", self.max_d),
        ] {
            if let Some(v) = v {
                if v <= 0 {
                    return Err(Error::Config(format!("{name} must be positive, got {v}")));
                }
            }
        }
        if let Some(d) = self.max_d {
            if d < 5 {
                return Err(Error::Config(format!("max-d must be at least 5, got {d}")));
            }
            if d > i64::MAX / 4 {
                return Err(Error::Config(format!("max-d {d} is too large")));
            }
        }
        if self.max_n.is_none() && self.max_d.is_none() {
            return Err(Error::Config("a bound on n or d is required".into()));
        }
        Ok(())
    }

    fn n_limit(&self) -> i64 {
        // d = n² + r > n² − n, so n² − n < max_d bounds n
        let from_d = self.max_d.map(|d| {
            let mut n = num_integer::Roots::sqrt(&d) + 1;
            while n * n - n >= d {
                n -= 1;
            }
            n
        });
        match (self.max_n, from_d) {
            (Some(a), Some(b)) => a.min(b),
            (Some(a), None) => a,
            (None, Some(b)) => b,
            (None, None) => 0,
        }
    }

    fn admits(&self, n: i64, r: i64, d: i64) -> bool {
        self.max_n.is_none_or(|m| n <= m)
            && self.max_abs_r.is_none_or(|m| r.abs() <= m)
            && self.max_d.is_none_or(|m| d <= m)
    }
}

/// All `(n, r)` with the same radicand and the primes to try.
#[derive(Debug, Clone)]
struct Case {
    n: i64,
    r: i64,
    d: i64,
    primes: Vec<Option<i64>>,
}

fn divisors_signed(m: u64) -> Vec<i64> {
    let f = factorize_u64(m);
    let mut divs = vec![1i64];
    for (p, e) in f.factors {
        let base = divs.clone();
        let mut pk = 1i64;
        for _ in 0..e {
            pk *= p as i64;
            divs.extend(base.iter().map(|x| x * pk));
        }
    }
    divs.iter().flat_map(|&x| [x, -x]).collect()
}

/// Every Richaud-Degert field with `d ≤ d_max`, one entry per `(n, r)`
/// representation, ordered by `(d, n)`.
pub fn rd_fields_up_to(d_max: i64) -> Vec<RdField> {
    let mut out = Vec::new();
    let mut n = 1i64;
    while n * n - n < d_max {
        for r in divisors_signed(4 * n as u64) {
            if n * n + r <= d_max {
                if let Ok(f) = classify_rd(n, r) {
                    out.push(f);
                }
            }
        }
        n += 1;
    }
    out.sort_by_key(|f| (f.d, f.n));
    out
}

fn enumerate(cfg: &ScanConfig) -> Vec<Case> {
    use CriterionTag::*;
    let tag = cfg.family;
    let mut cases = Vec::new();
    for n in 1..=cfg.n_limit() {
        let rs: Vec<i64> = match tag {
            T33 | T34 => vec![1],
            T42 | T43 => vec![1, 4],
            T35 => {
                let mut rs = divisors_signed(4 * n as u64);
                rs.retain(|&r| RdKind::of(r) == RdKind::Wide && -n < r && r <= n);
                rs.sort_unstable();
                rs
            }
        };
        for r in rs {
            let d = n * n + r;
            if !cfg.admits(n, r, d) {
                continue;
            }
            let primes: Vec<Option<i64>> = if tag.uses_prime() {
                odd_prime_divisors(n)
                    .unwrap_or_default()
                    .into_iter()
                    .map(|p| Some(p as i64))
                    .collect()
            } else {
                vec![None]
            };
            let primes: Vec<Option<i64>> = primes
                .into_iter()
                .filter(|&p| CriterionFamily::new(tag, n, r, p).validate().is_ok())
                .collect();
            if !primes.is_empty() {
                cases.push(Case { n, r, d, primes });
            }
        }
    }
    cases
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanFailure {
    pub n: i64,
    pub r: i64,
    pub p: Option<i64>,
    pub error: Error,
}

#[derive(Debug, Clone, Default)]
pub struct ScanOutcome {
    pub records: Vec<ScanRecord>,
    pub failures: Vec<ScanFailure>,
    pub warnings: Vec<String>,
}

impl ScanOutcome {
    pub fn hits(&self) -> impl Iterator<Item = &ScanRecord> {
        self.records
            .iter()
            .filter(|r| r.verdict == Verdict::CriterionAndH3)
    }
}

fn evaluate(
    case: &Case,
    tag: CriterionTag,
    sigma: SigmaSource<'_>,
) -> Vec<std::result::Result<ScanRecord, ScanFailure>> {
    let fail = |p: Option<i64>, error: Error| ScanFailure {
        n: case.n,
        r: case.r,
        p,
        error,
    };
    let disc = discriminant(case.d);
    let shared = zagier_sum_with(disc, sigma).and_then(|lhs| Ok((lhs, class_number(case.d)?)));
    let (lhs, h) = match shared {
        Ok(v) => v,
        Err(e) => {
            return case
                .primes
                .iter()
                .map(|&p| Err(fail(p, e.clone())))
                .collect()
        }
    };
    case.primes
        .iter()
        .map(|&p| {
            let fam = CriterionFamily::new(tag, case.n, case.r, p);
            let rhs = criterion_rhs(&fam).map_err(|e| fail(p, e))?;
            let equal = rhs == Rational::from(lhs);
            Ok(ScanRecord {
                n: case.n,
                r: case.r,
                d: case.d,
                disc,
                family: tag,
                p,
                lhs,
                rhs,
                equal,
                h,
                verdict: Verdict::classify(tag, case.d, equal, h),
            })
        })
        .collect()
}

pub fn scan(cfg: &ScanConfig) -> Result<ScanOutcome> {
    cfg.validate()?;
    let cases = enumerate(cfg);
    let mut out = ScanOutcome::default();

    let sigma_limit = cases
        .iter()
        .map(|c| discriminant(c.d) / 4)
        .max()
        .unwrap_or(1)
        .max(1);
    let table = match sigma_sieve_with_budget(sigma_limit, cfg.sieve_budget) {
        Ok(t) => Some(t),
        Err(e) => {
            out.warnings
                .push(format!("{e}; falling back to pointwise σ"));
            None
        }
    };
    let sigma = table
        .as_ref()
        .map_or(SigmaSource::Pointwise, SigmaSource::Table);

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs)
        .build()
        .map_err(|e| Error::Config(format!("cannot start worker pool: {e}")))?;
    let results: Vec<_> = pool.install(|| {
        cases
            .par_iter()
            .with_min_len(1)
            .flat_map_iter(|c| evaluate(c, cfg.family, sigma))
            .collect()
    });

    for r in results {
        match r {
            Ok(rec) => {
                if !rec.rhs.is_integer() {
                    out.warnings.push(format!(
                        "non-integer right-hand side {} at n={}, r={}, p={:?}",
                        rec.rhs, rec.n, rec.r, rec.p
                    ));
                }
                out.records.push(rec);
            }
            Err(f) => out.failures.push(f),
        }
    }
    out.records.sort_by_key(|r| (r.d, r.p));
    Ok(out)
}

/// Even squarefree `d = n² + 1 ≤ d_max` with `h(d) = 2`.
pub fn even_plus_one_with_h2(d_max: i64, jobs: usize) -> Result<Vec<i64>> {
    let ds: Vec<i64> = (1..)
        .step_by(2)
        .map(|n: i64| n * n + 1)
        .take_while(|&d| d <= d_max)
        .filter(|&d| is_squarefree(d).unwrap_or(false))
        .collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::Config(e.to_string()))?;
    let hs: Vec<Result<(i64, u64)>> =
        pool.install(|| ds.par_iter().map(|&d| Ok((d, class_number(d)?))).collect());
    let mut out = Vec::new();
    for r in hs {
        let (d, h) = r?;
        if h == 2 {
            out.push(d);
        }
    }
    Ok(out)
}
