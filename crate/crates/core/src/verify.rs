//! Verification harness: builds `L(S(CS_{k,n-k}))` and `L_c(S(CS_{k,n-k}))`
//! for each grid point, measures them by brute force, and compares the
//! measurements with the closed forms in [`crate::formulas`].
//!
//! The constructed graphs are the oracle. Formula values are only ever the
//! thing being checked.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::{cycle_star, CycleStarParams};
use crate::formulas::{
    check_domain, evaluate_formula, predicted_degree_partition, predicted_edge_partition,
    predicted_lcs_edge_partition, CutHubReading, ExactScalar, FormulaId,
};
use crate::graph::Graph;
use crate::indices::{
    first_coindex_identity, index_report, second_coindex_identity, DegreePartition, EdgePartition,
    IndexReport,
};
use crate::operators::{apply_pipeline, OperatorId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Verdict {
    Match,
    Mismatch,
    NonInteger,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Match => "Match",
            Verdict::Mismatch => "Mismatch",
            Verdict::NonInteger => "NonInteger",
        })
    }
}

impl Verdict {
    pub fn judge(formula_value: &ExactScalar, oracle_value: u64) -> Verdict {
        match formula_value.to_i128() {
            _ if !formula_value.is_integer() => Verdict::NonInteger,
            Some(v) if v == i128::from(oracle_value) => Verdict::Match,
            _ => Verdict::Mismatch,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationRecord {
    pub k: i64,
    pub n: i64,
    pub formula: FormulaId,
    pub formula_value: ExactScalar,
    pub oracle_value: u64,
    pub verdict: Verdict,
}

/// One bucket of a partition comparison. `degrees` holds one value for a
/// degree partition and the sorted pair for an edge partition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BucketDiff {
    pub degrees: Vec<usize>,
    pub predicted: usize,
    pub actual: usize,
}

impl BucketDiff {
    pub fn key(&self) -> String {
        self.degrees
            .iter()
            .map(usize::to_string)
            .collect::<Vec<_>>()
            .join("-")
    }

    pub fn matches(&self) -> bool {
        self.predicted == self.actual
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionDiff {
    pub k: i64,
    pub n: i64,
    pub partition: FormulaId,
    /// Set only for the `L_c` edge partition.
    pub reading: Option<CutHubReading>,
    pub buckets: Vec<BucketDiff>,
    pub matches: bool,
}

impl PartitionDiff {
    /// Report identifier, e.g. `LCS_EDGE_PARTITION/literal`.
    pub fn label(&self) -> String {
        match self.reading {
            Some(r) => format!("{}/{}", self.partition.code(), r.name()),
            None => self.partition.code().to_string(),
        }
    }

    fn compare<K: Ord + Clone>(
        k: i64,
        n: i64,
        partition: FormulaId,
        reading: Option<CutHubReading>,
        predicted: &BTreeMap<K, usize>,
        actual: &BTreeMap<K, usize>,
        degrees: impl Fn(&K) -> Vec<usize>,
    ) -> Self {
        let keys: BTreeSet<&K> = predicted.keys().chain(actual.keys()).collect();
        let buckets: Vec<BucketDiff> = keys
            .into_iter()
            .map(|key| BucketDiff {
                degrees: degrees(key),
                predicted: predicted.get(key).copied().unwrap_or(0),
                actual: actual.get(key).copied().unwrap_or(0),
            })
            .collect();
        let matches = buckets.iter().all(BucketDiff::matches);
        PartitionDiff {
            k,
            n,
            partition,
            reading,
            buckets,
            matches,
        }
    }

    fn degree(
        k: i64,
        n: i64,
        partition: FormulaId,
        predicted: &DegreePartition,
        actual: &DegreePartition,
    ) -> Self {
        Self::compare(k, n, partition, None, predicted, actual, |&d| vec![d])
    }

    fn edge(
        k: i64,
        n: i64,
        partition: FormulaId,
        reading: Option<CutHubReading>,
        predicted: &EdgePartition,
        actual: &EdgePartition,
    ) -> Self {
        Self::compare(k, n, partition, reading, predicted, actual, |&(a, b)| {
            vec![a, b]
        })
    }
}

/// The two constructed graphs at one grid point and their measurements.
#[derive(Debug, Clone)]
pub struct PointGraphs {
    pub line: Graph,
    pub line_cut: Graph,
    pub line_report: IndexReport,
    pub line_cut_report: IndexReport,
}

/// Builds `CS_{k,n-k}` and both operator pipelines, then measures them.
/// Each coindex is computed by enumeration and must agree with its identity.
pub fn build_point(k: i64, n: i64) -> Result<PointGraphs> {
    check_domain(k, n)?;
    let params = CycleStarParams::from_order(k as usize, n as usize)?;
    let base = cycle_star(params);
    let line = apply_pipeline(&base, &[OperatorId::Subdivision, OperatorId::LineGraph])?;
    let line_cut = apply_pipeline(&base, &[OperatorId::Subdivision, OperatorId::LineCutVertex])?;
    let line_report = index_report(&line)?;
    let line_cut_report = index_report(&line_cut)?;
    for (name, r) in [("L(S(CS))", &line_report), ("L_c(S(CS))", &line_cut_report)] {
        check_identities(name, r)?;
    }
    Ok(PointGraphs {
        line,
        line_cut,
        line_report,
        line_cut_report,
    })
}

fn check_identities(name: &str, r: &IndexReport) -> Result<()> {
    let first = first_coindex_identity(r.order, r.size, r.m1)?;
    let second = second_coindex_identity(r.size, r.m1, r.m2)?;
    if first != i128::from(r.m1_coindex) || second != i128::from(r.m2_coindex) {
        return Err(Error::OracleInconsistent(format!(
            "{name}: coindices by enumeration ({}, {}) differ from identities ({first}, {second})",
            r.m1_coindex, r.m2_coindex
        )));
    }
    Ok(())
}

fn scalar_oracles(p: &PointGraphs) -> BTreeMap<FormulaId, u64> {
    let (ls, lcs) = (&p.line_report, &p.line_cut_report);
    BTreeMap::from([
        (FormulaId::LsFirstZagreb, ls.m1),
        (FormulaId::LsSecondZagreb, ls.m2),
        (FormulaId::LsFirstCoindex, ls.m1_coindex),
        (FormulaId::LsSecondCoindex, ls.m2_coindex),
        (FormulaId::LcsFirstZagreb, lcs.m1),
        (FormulaId::LcsSecondZagreb, lcs.m2),
        (FormulaId::LcsFirstCoindex, lcs.m1_coindex),
        (FormulaId::LcsSecondCoindex, lcs.m2_coindex),
        (FormulaId::LsOrder, ls.order),
        (FormulaId::LsSize, ls.size),
        (FormulaId::LcsOrder, lcs.order),
        (FormulaId::LcsSize, lcs.size),
    ])
}

/// Brute-force value of every scalar formula at `(k, n)`.
pub fn oracle_values(k: i64, n: i64) -> Result<BTreeMap<FormulaId, u64>> {
    Ok(scalar_oracles(&build_point(k, n)?))
}

/// Scalar records and partition comparisons for one grid point.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointResult {
    pub records: Vec<VerificationRecord>,
    pub partition_diffs: Vec<PartitionDiff>,
}

pub fn verify_point(k: i64, n: i64) -> Result<PointResult> {
    let graphs = build_point(k, n)?;
    let oracle = scalar_oracles(&graphs);

    let records = FormulaId::SCALARS
        .iter()
        .map(|&formula| {
            let formula_value = evaluate_formula(formula, k, n)?;
            let oracle_value = oracle[&formula];
            let verdict = Verdict::judge(&formula_value, oracle_value);
            Ok(VerificationRecord {
                k,
                n,
                formula,
                formula_value,
                oracle_value,
                verdict,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let (ls, lcs) = (&graphs.line_report, &graphs.line_cut_report);
    let mut partition_diffs = vec![
        PartitionDiff::degree(
            k,
            n,
            FormulaId::LsDegreePartition,
            &predicted_degree_partition(FormulaId::LsDegreePartition, k, n)?,
            &ls.degree_distribution,
        ),
        PartitionDiff::degree(
            k,
            n,
            FormulaId::LcsDegreePartition,
            &predicted_degree_partition(FormulaId::LcsDegreePartition, k, n)?,
            &lcs.degree_distribution,
        ),
        PartitionDiff::edge(
            k,
            n,
            FormulaId::LsEdgePartition,
            None,
            &predicted_edge_partition(FormulaId::LsEdgePartition, k, n)?,
            &ls.edge_partition,
        ),
    ];
    for reading in CutHubReading::ALL {
        partition_diffs.push(PartitionDiff::edge(
            k,
            n,
            FormulaId::LcsEdgePartition,
            Some(reading),
            &predicted_lcs_edge_partition(reading, k, n)?,
            &lcs.edge_partition,
        ));
    }

    Ok(PointResult {
        records,
        partition_diffs,
    })
}

/// Inclusive parameter ranges: cycle length `k` and leaf count `n - k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridBounds {
    pub k_min: i64,
    pub k_max: i64,
    pub leaves_min: i64,
    pub leaves_max: i64,
}

impl GridBounds {
    pub fn new(k_min: i64, k_max: i64, leaves_min: i64, leaves_max: i64) -> Result<Self> {
        if k_min < 3 || k_min > k_max {
            return Err(Error::InvalidParameter(format!(
                "k range {k_min}..{k_max} must satisfy 3 <= k_min <= k_max"
            )));
        }
        if leaves_min < 1 || leaves_min > leaves_max {
            return Err(Error::InvalidParameter(format!(
                "leaves range {leaves_min}..{leaves_max} must satisfy 1 <= min <= max"
            )));
        }
        Ok(Self {
            k_min,
            k_max,
            leaves_min,
            leaves_max,
        })
    }

    /// `(k, n)` pairs, `k` ascending then `n` ascending.
    pub fn points(&self) -> Vec<(i64, i64)> {
        (self.k_min..=self.k_max)
            .flat_map(|k| (self.leaves_min..=self.leaves_max).map(move |l| (k, k + l)))
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FormulaStatus {
    AllMatch,
    /// No grid point matched.
    AllFail,
    /// Matched at some points only.
    DomainDependent,
}

impl fmt::Display for FormulaStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FormulaStatus::AllMatch => "all-match",
            FormulaStatus::AllFail => "all-fail",
            FormulaStatus::DomainDependent => "domain-dependent",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormulaTally {
    pub formula: FormulaId,
    pub matches: usize,
    pub mismatches: usize,
    pub non_integer: usize,
    pub status: FormulaStatus,
    /// Cycle lengths at which at least one point matched.
    pub matching_k: Vec<i64>,
}

impl FormulaTally {
    pub fn total(&self) -> usize {
        self.matches + self.mismatches + self.non_integer
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionTally {
    pub partition: String,
    pub matching_points: usize,
    pub differing_points: usize,
    pub status: FormulaStatus,
    pub matching_k: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub bounds: GridBounds,
    pub records: Vec<VerificationRecord>,
    pub partition_diffs: Vec<PartitionDiff>,
    pub summary: Vec<FormulaTally>,
    pub partition_summary: Vec<PartitionTally>,
}

impl VerificationReport {
    pub fn all_match(&self) -> bool {
        self.records.iter().all(|r| r.verdict == Verdict::Match)
    }

    pub fn tally(&self, formula: FormulaId) -> Option<&FormulaTally> {
        self.summary.iter().find(|t| t.formula == formula)
    }

    pub fn partition_tally(&self, label: &str) -> Option<&PartitionTally> {
        self.partition_summary.iter().find(|t| t.partition == label)
    }
}

fn status(matches: usize, total: usize) -> FormulaStatus {
    if matches == total {
        FormulaStatus::AllMatch
    } else if matches == 0 {
        FormulaStatus::AllFail
    } else {
        FormulaStatus::DomainDependent
    }
}

fn summarise(records: &[VerificationRecord]) -> Vec<FormulaTally> {
    FormulaId::SCALARS
        .iter()
        .map(|&formula| {
            let mut tally = FormulaTally {
                formula,
                matches: 0,
                mismatches: 0,
                non_integer: 0,
                status: FormulaStatus::AllMatch,
                matching_k: Vec::new(),
            };
            let mut ks = BTreeSet::new();
            for r in records.iter().filter(|r| r.formula == formula) {
                match r.verdict {
                    Verdict::Match => {
                        tally.matches += 1;
                        ks.insert(r.k);
                    }
                    Verdict::Mismatch => tally.mismatches += 1,
                    Verdict::NonInteger => tally.non_integer += 1,
                }
            }
            tally.status = status(tally.matches, tally.total());
            tally.matching_k = ks.into_iter().collect();
            tally
        })
        .collect()
}

fn summarise_partitions(diffs: &[PartitionDiff]) -> Vec<PartitionTally> {
    let mut groups: Vec<(String, Vec<&PartitionDiff>)> = Vec::new();
    for d in diffs {
        let label = d.label();
        match groups.iter_mut().find(|(l, _)| *l == label) {
            Some((_, v)) => v.push(d),
            None => groups.push((label, vec![d])),
        }
    }
    groups
        .into_iter()
        .map(|(partition, ds)| {
            let matching_points = ds.iter().filter(|d| d.matches).count();
            let matching_k: BTreeSet<i64> = ds.iter().filter(|d| d.matches).map(|d| d.k).collect();
            PartitionTally {
                partition,
                matching_points,
                differing_points: ds.len() - matching_points,
                status: status(matching_points, ds.len()),
                matching_k: matching_k.into_iter().collect(),
            }
        })
        .collect()
}

/// Runs [`verify_point`] over the whole grid. Points are evaluated in
/// parallel and merged back in `(k, n)` order, so the report does not
/// depend on scheduling.
pub fn verify_grid(
    k_min: i64,
    k_max: i64,
    leaves_min: i64,
    leaves_max: i64,
) -> Result<VerificationReport> {
    let bounds = GridBounds::new(k_min, k_max, leaves_min, leaves_max)?;
    let results: Vec<Result<PointResult>> = bounds
        .points()
        .into_par_iter()
        .map(|(k, n)| {
            verify_point(k, n).map_err(|e| Error::AtPoint {
                k,
                n,
                source: Box::new(e),
            })
        })
        .collect();

    let mut records = Vec::new();
    let mut partition_diffs = Vec::new();
    for r in results {
        let point = r?;
        records.extend(point.records);
        partition_diffs.extend(point.partition_diffs);
    }
    let summary = summarise(&records);
    let partition_summary = summarise_partitions(&partition_diffs);
    Ok(VerificationReport {
        bounds,
        records,
        partition_diffs,
        summary,
        partition_summary,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn record(p: &PointResult, f: FormulaId) -> &VerificationRecord {
        p.records.iter().find(|r| r.formula == f).unwrap()
    }

    #[test]
    fn oracle_at_3_4() {
        let o = oracle_values(3, 4).unwrap();
        assert_eq!(o[&FormulaId::LsFirstZagreb], 44);
        assert_eq!(o[&FormulaId::LsSecondZagreb], 54);
        assert_eq!(o[&FormulaId::LcsFirstZagreb], 90);
        assert_eq!(o[&FormulaId::LcsSecondZagreb], 147);
        assert_eq!(o[&FormulaId::LsSecondCoindex], 86);
        assert_eq!(o[&FormulaId::LcsSecondCoindex], 200);
        assert_eq!(o.len(), 12);
    }

    #[test]
    fn verdicts_at_3_4_and_3_5() {
        let p = verify_point(3, 4).unwrap();
        assert_eq!(p.records.len(), 12);
        assert_eq!(record(&p, FormulaId::LsFirstZagreb).verdict, Verdict::Match);
        let co = record(&p, FormulaId::LsSecondCoindex);
        assert_eq!(co.verdict, Verdict::Mismatch);
        assert_eq!(
            (co.formula_value.to_i128(), co.oracle_value),
            (Some(58), 86)
        );

        let p = verify_point(3, 5).unwrap();
        let m2 = record(&p, FormulaId::LsSecondZagreb);
        assert_eq!((m2.verdict, m2.oracle_value), (Verdict::Match, 132));
    }

    #[test]
    fn judge_distinguishes_non_integers() {
        assert_eq!(
            Verdict::judge(&ExactScalar::ratio(319, 2), 308),
            Verdict::NonInteger
        );
        assert_eq!(
            Verdict::judge(&ExactScalar::from_integer(-4), 4),
            Verdict::Mismatch
        );
        assert_eq!(
            Verdict::judge(&ExactScalar::from_integer(4), 4),
            Verdict::Match
        );
    }

    #[test]
    fn single_point_grid() {
        let r = verify_grid(3, 3, 1, 1).unwrap();
        assert_eq!(r.records.len(), 12);
        assert!(r.records.iter().all(|x| (x.k, x.n) == (3, 4)));
        assert_eq!(r.summary.len(), 12);
    }

    #[test]
    fn bad_bounds() {
        assert!(verify_grid(2, 4, 1, 1).is_err());
        assert!(verify_grid(5, 4, 1, 1).is_err());
        assert!(verify_grid(3, 4, 0, 1).is_err());
        assert!(verify_grid(3, 4, 3, 2).is_err());
    }

    #[test]
    fn domain_errors_propagate() {
        assert!(verify_point(3, 3).is_err());
        assert!(oracle_values(2, 5).is_err());
    }

    #[test]
    fn status_classification() {
        assert_eq!(status(5, 5), FormulaStatus::AllMatch);
        assert_eq!(status(0, 5), FormulaStatus::AllFail);
        assert_eq!(status(2, 5), FormulaStatus::DomainDependent);
    }
}
