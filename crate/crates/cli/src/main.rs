use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use rdzeta::dedekind::{
    dedekind_sum_closed_row, dedekind_sum_raw, kim_matrix, lang_partial_zeta, DedekindSumQuery,
    SumIndex,
};
use rdzeta::forms::class_numbers;
use rdzeta::harness::{check_class_one_shape, emit, scan, verify_tables, OutputFormat, ScanConfig};
use rdzeta::quad::{
    classify_rd, discriminant, fundamental_unit_closed, ideal_over_2, ideal_over_p, IdealData,
    RdField, Sign,
};
use rdzeta::zeta::{
    criterion_holds, nonprincipal_zeta_over2, principal_zeta_closed, split_prime_zeta, zagier_sum,
    zagier_zeta, CriterionFamily, CriterionTag,
};
use rdzeta::{Error, Rational};

/// Special values of Dedekind zeta functions of Richaud-Degert fields.
#[derive(Parser)]
#[command(name = "rdzeta", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// ζ_K(−1) from the divisor-sum formula.
    Zeta {
        #[arg(long, allow_hyphen_values = true)]
        d: i64,
    },
    /// Partial zeta value at −1 of one ideal class.
    PartialZeta {
        #[arg(long)]
        n: i64,
        #[arg(long, allow_hyphen_values = true)]
        r: i64,
        #[arg(long)]
        p: Option<i64>,
        #[arg(long, value_enum)]
        class: ClassArg,
    },
    /// Both sides of a criterion.
    Rhs {
        #[arg(long)]
        family: CriterionTag,
        #[arg(long)]
        n: i64,
        #[arg(long, allow_hyphen_values = true)]
        r: i64,
        #[arg(long)]
        p: Option<i64>,
    },
    /// Class number from reduction cycles.
    ClassNumber {
        #[arg(long, allow_hyphen_values = true)]
        d: i64,
        /// Also print the narrow class number and the norm of the unit.
        #[arg(long)]
        narrow: bool,
    },
    /// Generalized Dedekind sum S^index(h, k).
    Dedekind {
        #[arg(long, value_parser = parse_index)]
        index: SumIndex,
        #[arg(long, allow_hyphen_values = true)]
        h: i64,
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
        /// Evaluate the defining sum instead of the closed form.
        #[arg(long)]
        raw: bool,
    },
    /// Evaluate a criterion over a range.
    Scan {
        #[arg(long)]
        family: CriterionTag,
        #[arg(long, allow_hyphen_values = true)]
        max_d: Option<i64>,
        #[arg(long, allow_hyphen_values = true)]
        max_n: Option<i64>,
        #[arg(long, allow_hyphen_values = true)]
        max_abs_r: Option<i64>,
        /// Worker threads; 0 uses every CPU.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[arg(long, default_value = "csv")]
        format: OutputFormat,
        /// Byte budget for the shared σ table.
        #[arg(long)]
        sieve_budget: Option<u64>,
        /// Use the full published search bounds for omitted limits.
        #[arg(long)]
        published_bounds: bool,
    },
    /// Rerun the fixed scans and exception checks.
    VerifyTables,
    /// Check the shape of class-number-one radicands d ≡ 5 (mod 8).
    #[command(name = "check-remark41", alias = "check-class-one-shape")]
    ClassOneShape {
        #[arg(long, allow_hyphen_values = true)]
        max_d: i64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ClassArg {
    Principal,
    Over2,
    Overp,
}

fn parse_index(s: &str) -> Result<SumIndex, String> {
    let i: u8 = s
        .parse()
        .map_err(|_| format!("index must be 2 or 3, got {s:?}"))?;
    SumIndex::try_from(i).map_err(|e| e.to_string())
}

enum Failure {
    Mismatch,
    Usage(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e)
    }
}

fn io_fail(e: io::Error) -> Failure {
    Failure::Usage(Error::Config(format!("write failed: {e}")))
}

type Outcome = Result<(), Failure>;

fn lang_value(ideal: &IdealData, f: &RdField) -> rdzeta::Result<Rational> {
    let (eps, norm) = fundamental_unit_closed(f);
    let m = kim_matrix(ideal, &eps)?;
    lang_partial_zeta(ideal, &m, norm)
}

fn partial_zeta(out: &mut impl Write, n: i64, r: i64, p: Option<i64>, class: ClassArg) -> Outcome {
    let f = classify_rd(n, r)?;
    writeln!(out, "d={} kind={}", f.d, f.kind).map_err(io_fail)?;
    let agree = match class {
        ClassArg::Principal => {
            let closed = principal_zeta_closed(&f)?;
            writeln!(out, "closed={closed}").map_err(io_fail)?;
            let h = class_numbers(f.d)?.h;
            if h == 1 {
                let z = zagier_zeta(f.disc)?;
                writeln!(out, "zagier={z}").map_err(io_fail)?;
                z == closed
            } else {
                writeln!(out, "zagier=n/a (h={h})").map_err(io_fail)?;
                true
            }
        }
        ClassArg::Over2 => {
            let closed = nonprincipal_zeta_over2(&f)?;
            let plus = lang_value(&ideal_over_2(&f, Sign::Plus)?, &f)?;
            let minus = lang_value(&ideal_over_2(&f, Sign::Minus)?, &f)?;
            writeln!(out, "closed={closed}\nlang+={plus}\nlang-={minus}").map_err(io_fail)?;
            closed == plus && closed == minus
        }
        ClassArg::Overp => {
            let p = p.ok_or_else(|| Error::Config("--class overp needs --p".into()))?;
            let closed = split_prime_zeta(&f, p)?;
            let (q, qc) = ideal_over_p(&f, p)?;
            let plus = lang_value(&q, &f)?;
            let minus = lang_value(&qc, &f)?;
            writeln!(out, "closed={closed}\nlang+={plus}\nlang-={minus}").map_err(io_fail)?;
            closed == plus && closed == minus
        }
    };
    if agree {
        Ok(())
    } else {
        Err(Failure::Mismatch)
    }
}

fn run(cli: Cli, out: &mut impl Write) -> Outcome {
    match cli.command {
        Command::Zeta { d } => {
            let disc = discriminant(d);
            let sum = zagier_sum(disc)?;
            let z = zagier_zeta(disc)?;
            writeln!(out, "d={d} D={disc}\nsum={sum}\nzeta={z}").map_err(io_fail)?;
        }
        Command::PartialZeta { n, r, p, class } => partial_zeta(out, n, r, p, class)?,
        Command::Rhs { family, n, r, p } => {
            let c = criterion_holds(&CriterionFamily::new(family, n, r, p))?;
            writeln!(out, "lhs={}\nrhs={}\nequal={}", c.lhs, c.rhs, c.equal).map_err(io_fail)?;
        }
        Command::ClassNumber { d, narrow } => {
            let c = class_numbers(d)?;
            writeln!(out, "h={}", c.h).map_err(io_fail)?;
            if narrow {
                writeln!(out, "h+={}\nN(eps)={}", c.h_plus, c.unit_norm).map_err(io_fail)?;
            }
        }
        Command::Dedekind { index, h, k, raw } => {
            let q = DedekindSumQuery::new(index, h, k)?;
            if raw {
                writeln!(out, "{}", dedekind_sum_raw(index, h, k)?).map_err(io_fail)?;
            } else {
                let (v, row) = dedekind_sum_closed_row(q)?;
                writeln!(out, "{v}\nrow={row:?}").map_err(io_fail)?;
            }
        }
        Command::Scan {
            family,
            max_d,
            max_n,
            max_abs_r,
            jobs,
            format,
            sieve_budget,
            published_bounds,
        } => {
            let mut cfg = if published_bounds {
                ScanConfig::published_bounds(family)
            } else if max_d.is_none() && max_n.is_none() && max_abs_r.is_none() {
                ScanConfig::desk_default(family)
            } else {
                ScanConfig::new(family)
            };
            cfg.max_d = max_d.or(cfg.max_d);
            cfg.max_n = max_n.or(cfg.max_n);
            cfg.max_abs_r = max_abs_r.or(cfg.max_abs_r);
            cfg.jobs = jobs;
            cfg.format = format;
            if let Some(b) = sieve_budget {
                cfg.sieve_budget = b;
            }
            let outcome = scan(&cfg)?;
            emit(&outcome.records, cfg.format, &mut *out)?;
            for w in &outcome.warnings {
                eprintln!("warning: {w}");
            }
            for f in &outcome.failures {
                eprintln!("error at n={} r={} p={:?}: {}", f.n, f.r, f.p, f.error);
            }
            let bad: Vec<_> = outcome
                .records
                .iter()
                .filter(|r| r.contradicts_criterion())
                .collect();
            for r in &bad {
                eprintln!(
                    "counterexample: n={} r={} d={} p={:?} h={} {}",
                    r.n, r.r, r.d, r.p, r.h, r.verdict
                );
            }
            if !bad.is_empty() || !outcome.failures.is_empty() {
                return Err(Failure::Mismatch);
            }
        }
        Command::VerifyTables => {
            let report = verify_tables();
            writeln!(out, "{report}").map_err(io_fail)?;
            if !report.all_passed() {
                return Err(Failure::Mismatch);
            }
        }
        Command::ClassOneShape { max_d } => {
            let report = check_class_one_shape(max_d)?;
            writeln!(out, "{report}").map_err(io_fail)?;
            if !report.is_clean() {
                return Err(Failure::Mismatch);
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let result = run(cli, &mut out);
    let flushed = out.flush();
    match (result, flushed) {
        (Ok(()), Ok(())) => ExitCode::SUCCESS,
        (Err(Failure::Mismatch), _) => ExitCode::from(1),
        (Err(Failure::Usage(e)), _) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        (Ok(()), Err(e)) => {
            eprintln!("error: write failed: {e}");
            ExitCode::from(2)
        }
    }
}
