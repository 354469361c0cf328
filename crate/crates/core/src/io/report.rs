//! CSV and JSON renderings of a [`VerificationReport`].
//!
//! The CSV has three sections, each with its own header row. Scalar records
//! come first with no leading tag; partition bucket rows start with the
//! sentinel `partition`, and per-formula tallies with `summary`.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::verify::{Verdict, VerificationReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Csv,
    Json,
}

impl FromStr for ReportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(ReportFormat::Csv),
            "json" => Ok(ReportFormat::Json),
            other => Err(Error::InvalidParameter(format!(
                "unknown report format `{other}` (expected csv or json)"
            ))),
        }
    }
}

impl fmt::Display for ReportFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ReportFormat::Csv => "csv",
            ReportFormat::Json => "json",
        })
    }
}

pub const CSV_HEADER: &str = "k,n,formula,formula_value,oracle_value,verdict";
pub const CSV_PARTITION_HEADER: &str = "partition,k,n,id,bucket,predicted,actual,verdict";
pub const CSV_SUMMARY_HEADER: &str =
    "summary,formula,matches,mismatches,non_integer,status,matching_k";

fn csv(report: &VerificationReport) -> String {
    let mut out = String::new();
    out.push_str(CSV_HEADER);
    out.push('\n');
    for r in &report.records {
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            r.k, r.n, r.formula, r.formula_value, r.oracle_value, r.verdict
        ));
    }

    out.push_str(CSV_PARTITION_HEADER);
    out.push('\n');
    for d in &report.partition_diffs {
        let id = d.label();
        for b in &d.buckets {
            let verdict = if b.matches() {
                Verdict::Match
            } else {
                Verdict::Mismatch
            };
            out.push_str(&format!(
                "partition,{},{},{},{},{},{},{}\n",
                d.k,
                d.n,
                id,
                b.key(),
                b.predicted,
                b.actual,
                verdict
            ));
        }
    }

    out.push_str(CSV_SUMMARY_HEADER);
    out.push('\n');
    for t in &report.summary {
        let ks: Vec<String> = t.matching_k.iter().map(i64::to_string).collect();
        out.push_str(&format!(
            "summary,{},{},{},{},{},{}\n",
            t.formula,
            t.matches,
            t.mismatches,
            t.non_integer,
            t.status,
            ks.join(" ")
        ));
    }
    for t in &report.partition_summary {
        let ks: Vec<String> = t.matching_k.iter().map(i64::to_string).collect();
        out.push_str(&format!(
            "summary,{},{},{},0,{},{}\n",
            t.partition,
            t.matching_points,
            t.differing_points,
            t.status,
            ks.join(" ")
        ));
    }
    out
}

pub fn emit_report(report: &VerificationReport, fmt: ReportFormat) -> String {
    match fmt {
        ReportFormat::Csv => csv(report),
        ReportFormat::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("report is serialisable");
            s.push('\n');
            s
        }
    }
}
