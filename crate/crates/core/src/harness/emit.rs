//! Record serialization: CSV, JSON lines and an aligned text table.

use std::io::{self, Write};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::scan::{OutputFormat, ScanRecord, Verdict};
use crate::arith::Rational;
use crate::error::{Error, Result};
use crate::zeta::CriterionTag;

pub const CSV_HEADER: &str = "n,r,d,D,family,p,lhs,rhs_num,rhs_den,equal,h,verdict";

/// Flat row shared by the CSV and JSONL writers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecordRow {
    pub n: i64,
    pub r: i64,
    pub d: i64,
    #[serde(rename = "D")]
    pub disc: i64,
    pub family: CriterionTag,
    pub p: Option<i64>,
    pub lhs: u128,
    pub rhs_num: i128,
    pub rhs_den: i128,
    pub equal: bool,
    pub h: u64,
    pub verdict: Verdict,
}

impl TryFrom<&ScanRecord> for RecordRow {
    type Error = Error;

    fn try_from(rec: &ScanRecord) -> Result<Self> {
        let (rhs_num, rhs_den) = rec.rhs.to_i128_pair().ok_or_else(|| {
            Error::Overflow(format!("right-hand side {} does not fit in i128", rec.rhs))
        })?;
        Ok(RecordRow {
            n: rec.n,
            r: rec.r,
            d: rec.d,
            disc: rec.disc,
            family: rec.family,
            p: rec.p,
            lhs: rec.lhs,
            rhs_num,
            rhs_den,
            equal: rec.equal,
            h: rec.h,
            verdict: rec.verdict,
        })
    }
}

impl TryFrom<RecordRow> for ScanRecord {
    type Error = Error;

    fn try_from(row: RecordRow) -> Result<Self> {
        if row.rhs_den == 0 {
            return Err(Error::Config("zero denominator in rhs".into()));
        }
        let rhs = Rational::new(BigInt::from(row.rhs_num), BigInt::from(row.rhs_den));
        Ok(ScanRecord {
            n: row.n,
            r: row.r,
            d: row.d,
            disc: row.disc,
            family: row.family,
            p: row.p,
            lhs: row.lhs,
            rhs,
            equal: row.equal,
            h: row.h,
            verdict: row.verdict,
        })
    }
}

fn io_err(e: impl std::fmt::Display) -> Error {
    Error::Config(format!("write failed: {e}"))
}

pub fn write_csv<W: Write>(records: &[ScanRecord], out: W) -> Result<()> {
    let mut w = csv::WriterBuilder::new()
        .has_headers(false)
        .from_writer(out);
    w.write_record(CSV_HEADER.split(',')).map_err(io_err)?;
    for rec in records {
        w.serialize(RecordRow::try_from(rec)?).map_err(io_err)?;
    }
    w.flush().map_err(io_err)
}

pub fn write_jsonl<W: Write>(records: &[ScanRecord], mut out: W) -> Result<()> {
    for rec in records {
        serde_json::to_writer(&mut out, &RecordRow::try_from(rec)?).map_err(io_err)?;
        out.write_all(b"\n").map_err(io_err)?;
    }
    out.flush().map_err(io_err)
}

pub fn write_table<W: Write>(records: &[ScanRecord], mut out: W) -> Result<()> {
    let head = ["n", "r", "d", "p", "h(d)", "lhs", "rhs", "verdict"];
    let rows: Vec<[String; 8]> = records
        .iter()
        .map(|r| {
            [
                r.n.to_string(),
                r.r.to_string(),
                r.d.to_string(),
                r.p.map_or_else(|| "-".into(), |p| p.to_string()),
                r.h.to_string(),
                r.lhs.to_string(),
                r.rhs.to_string(),
                r.verdict.to_string(),
            ]
        })
        .collect();
    let mut widths = head.map(str::len);
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: &[&str]| -> String {
        cells
            .iter()
            .zip(widths)
            .map(|(c, w)| format!("{c:>w$}"))
            .collect::<Vec<_>>()
            .join("  ")
    };
    writeln!(out, "{}", line(&head)).map_err(io_err)?;
    for row in &rows {
        let cells: Vec<&str> = row.iter().map(String::as_str).collect();
        writeln!(out, "{}", line(&cells).trim_end()).map_err(io_err)?;
    }
    out.flush().map_err(io_err)
}

pub fn emit<W: Write>(records: &[ScanRecord], format: OutputFormat, out: W) -> Result<()> {
    match format {
        OutputFormat::Csv => write_csv(records, out),
        OutputFormat::Jsonl => write_jsonl(records, out),
        OutputFormat::Table => write_table(records, out),
    }
}

pub fn read_csv<R: io::Read>(input: R) -> Result<Vec<ScanRecord>> {
    let mut rdr = csv::Reader::from_reader(input);
    rdr.deserialize::<RecordRow>()
        .map(|row| ScanRecord::try_from(row.map_err(|e| Error::Config(e.to_string()))?))
        .collect()
}

pub fn read_jsonl<R: io::BufRead>(input: R) -> Result<Vec<ScanRecord>> {
    input
        .lines()
        .filter(|l| l.as_ref().map_or(true, |l| !l.trim().is_empty()))
        .map(|line| {
            let line = line.map_err(|e| Error::Config(e.to_string()))?;
            let row: RecordRow =
                serde_json::from_str(&line).map_err(|e| Error::Config(e.to_string()))?;
            ScanRecord::try_from(row)
        })
        .collect()
}
