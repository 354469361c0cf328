//! Closed-form expressions for `L(S(CS_{k,n-k}))` and `L_c(S(CS_{k,n-k}))`,
//! evaluated exactly over the rationals.
//!
//! The polynomials are written out term by term exactly as they were
//! published, including the ones the harness later shows to be wrong.
//! Deciding whether a value is right is the job of [`crate::verify`].

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::indices::{DegreePartition, EdgePartition};

/// Exact rational number in lowest terms.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExactScalar(BigRational);

impl ExactScalar {
    pub fn from_integer(v: i64) -> Self {
        ExactScalar(BigRational::from_integer(BigInt::from(v)))
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        ExactScalar(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// The value as an `i128` if it is an integer that fits.
    pub fn to_i128(&self) -> Option<i128> {
        if self.is_integer() {
            self.0.to_integer().to_i128()
        } else {
            None
        }
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn as_rational(&self) -> &BigRational {
        &self.0
    }

    /// Parses `p` or `p/q`.
    pub fn parse(s: &str) -> Option<Self> {
        let (num, den) = match s.split_once('/') {
            Some((p, q)) => (p.parse::<BigInt>().ok()?, q.parse::<BigInt>().ok()?),
            None => (s.parse::<BigInt>().ok()?, BigInt::one()),
        };
        if den.is_zero() {
            return None;
        }
        Some(ExactScalar(BigRational::new(num, den)))
    }
}

impl From<BigRational> for ExactScalar {
    fn from(r: BigRational) -> Self {
        ExactScalar(r)
    }
}

/// Integers print bare; everything else as `p/q` with the sign on `p`.
impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl Serialize for ExactScalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for ExactScalar {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        ExactScalar::parse(&s)
            .ok_or_else(|| serde::de::Error::custom(format!("bad rational `{s}`")))
    }
}

/// Every closed form under test. Scalar variants evaluate to a number;
/// partition variants predict a degree or edge partition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FormulaId {
    /// `M1(L(S(CS)))`.
    LsFirstZagreb,
    /// `M2(L(S(CS)))`.
    LsSecondZagreb,
    /// First coindex of `L(S(CS))`.
    LsFirstCoindex,
    /// Second coindex of `L(S(CS))`.
    LsSecondCoindex,
    /// `M1(L_c(S(CS)))`.
    LcsFirstZagreb,
    /// `M2(L_c(S(CS)))`.
    LcsSecondZagreb,
    /// First coindex of `L_c(S(CS))`.
    LcsFirstCoindex,
    /// Second coindex of `L_c(S(CS))`.
    LcsSecondCoindex,
    LsOrder,
    LsSize,
    LcsOrder,
    LcsSize,
    LsDegreePartition,
    LcsDegreePartition,
    LsEdgePartition,
    LcsEdgePartition,
}

impl FormulaId {
    /// Scalar formulas in report order.
    pub const SCALARS: [FormulaId; 12] = [
        FormulaId::LsFirstZagreb,
        FormulaId::LsSecondZagreb,
        FormulaId::LsFirstCoindex,
        FormulaId::LsSecondCoindex,
        FormulaId::LcsFirstZagreb,
        FormulaId::LcsSecondZagreb,
        FormulaId::LcsFirstCoindex,
        FormulaId::LcsSecondCoindex,
        FormulaId::LsOrder,
        FormulaId::LsSize,
        FormulaId::LcsOrder,
        FormulaId::LcsSize,
    ];

    pub const PARTITIONS: [FormulaId; 4] = [
        FormulaId::LsDegreePartition,
        FormulaId::LcsDegreePartition,
        FormulaId::LsEdgePartition,
        FormulaId::LcsEdgePartition,
    ];

    /// Stable identifier used in reports.
    pub fn code(self) -> &'static str {
        match self {
            FormulaId::LsFirstZagreb => "T21_M1",
            FormulaId::LsSecondZagreb => "T21_M2",
            FormulaId::LsFirstCoindex => "T24_M1CO",
            FormulaId::LsSecondCoindex => "T25_M2CO",
            FormulaId::LcsFirstZagreb => "T31_M1",
            FormulaId::LcsSecondZagreb => "T31_M2",
            FormulaId::LcsFirstCoindex => "T32_M1CO",
            FormulaId::LcsSecondCoindex => "T33_M2CO",
            FormulaId::LsOrder => "LS_ORDER",
            FormulaId::LsSize => "LS_SIZE",
            FormulaId::LcsOrder => "LCS_ORDER",
            FormulaId::LcsSize => "LCS_SIZE",
            FormulaId::LsDegreePartition => "LS_DEGREE_PARTITION",
            FormulaId::LcsDegreePartition => "LCS_DEGREE_PARTITION",
            FormulaId::LsEdgePartition => "LS_EDGE_PARTITION",
            FormulaId::LcsEdgePartition => "LCS_EDGE_PARTITION",
        }
    }

    pub fn from_code(code: &str) -> Option<Self> {
        FormulaId::SCALARS
            .into_iter()
            .chain(FormulaId::PARTITIONS)
            .find(|f| f.code() == code)
    }

    pub fn is_scalar(self) -> bool {
        FormulaId::SCALARS.contains(&self)
    }
}

impl fmt::Display for FormulaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

impl Serialize for FormulaId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.code())
    }
}

impl<'de> Deserialize<'de> for FormulaId {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        FormulaId::from_code(&s)
            .ok_or_else(|| serde::de::Error::custom(format!("unknown formula `{s}`")))
    }
}

/// `k >= 3` and `n - k >= 1`.
pub fn check_domain(k: i64, n: i64) -> Result<()> {
    if k >= 3 && n.checked_sub(k).is_some_and(|l| l >= 1) {
        Ok(())
    } else {
        Err(Error::Domain { k, n })
    }
}

/// Polynomial in `n` and `k` with rational coefficients.
struct Terms {
    n: BigRational,
    k: BigRational,
    acc: BigRational,
}

impl Terms {
    fn new(k: i64, n: i64) -> Self {
        Terms {
            n: BigRational::from_integer(n.into()),
            k: BigRational::from_integer(k.into()),
            acc: BigRational::zero(),
        }
    }

    /// Adds `(num/den) · n^pn · k^pk`.
    fn add(mut self, num: i64, den: i64, pn: i32, pk: i32) -> Self {
        let c = BigRational::new(num.into(), den.into());
        self.acc += c
            * num_traits::pow(self.n.clone(), pn as usize)
            * num_traits::pow(self.k.clone(), pk as usize);
        self
    }

    /// Integer-coefficient shorthand.
    fn t(self, c: i64, pn: i32, pk: i32) -> Self {
        self.add(c, 1, pn, pk)
    }

    fn done(self) -> ExactScalar {
        ExactScalar(self.acc)
    }
}

/// Evaluates a scalar formula at `(k, n)`.
pub fn evaluate_formula(id: FormulaId, k: i64, n: i64) -> Result<ExactScalar> {
    check_domain(k, n)?;
    let p = Terms::new(k, n);
    let v = match id {
        // n^3 + (6-3k)n^2 + (3k^2-12k+13)n - k^3 + 6k^2 - 5k
        FormulaId::LsFirstZagreb => p
            .t(1, 3, 0)
            .t(6, 2, 0)
            .t(-3, 2, 1)
            .t(3, 1, 2)
            .t(-12, 1, 1)
            .t(13, 1, 0)
            .t(-1, 0, 3)
            .t(6, 0, 2)
            .t(-5, 0, 1),
        // 1/2 (n^4 + (7-4k)n^3 + (6k^2-21k+20)n^2 - (4k^3-21k^2+40k-32)n)
        //   + 1/2 (k^4 - 7k^3 + 20k^2 - 16k)
        FormulaId::LsSecondZagreb => p
            .add(1, 2, 4, 0)
            .add(7, 2, 3, 0)
            .add(-4, 2, 3, 1)
            .add(6, 2, 2, 2)
            .add(-21, 2, 2, 1)
            .add(20, 2, 2, 0)
            .add(-4, 2, 1, 3)
            .add(21, 2, 1, 2)
            .add(-40, 2, 1, 1)
            .add(32, 2, 1, 0)
            .add(1, 2, 0, 4)
            .add(-7, 2, 0, 3)
            .add(20, 2, 0, 2)
            .add(-16, 2, 0, 1),
        // n^3 + (3-k)n^2 - (k^2-12k+18)n + k^3 - 7k^2 + 6k
        FormulaId::LsFirstCoindex => p
            .t(1, 3, 0)
            .t(3, 2, 0)
            .t(-1, 2, 1)
            .t(-1, 1, 2)
            .t(12, 1, 1)
            .t(-18, 1, 0)
            .t(1, 0, 3)
            .t(-7, 0, 2)
            .t(6, 0, 1),
        // n^3 + n^2/2 (2k-1) - n/2 (8k^3-32k^2+38k-19) + 1/2 (6k^3-25k^2+21k)
        FormulaId::LsSecondCoindex => p
            .t(1, 3, 0)
            .add(2, 2, 2, 1)
            .add(-1, 2, 2, 0)
            .add(-8, 2, 1, 3)
            .add(32, 2, 1, 2)
            .add(-38, 2, 1, 1)
            .add(19, 2, 1, 0)
            .add(6, 2, 0, 3)
            .add(-25, 2, 0, 2)
            .add(21, 2, 0, 1),
        // n^3 + (11-3k)n^2 + (3k^2-22k+40)n - k^3 + 11k^2 - 32k + 14
        FormulaId::LcsFirstZagreb => p
            .t(1, 3, 0)
            .t(11, 2, 0)
            .t(-3, 2, 1)
            .t(3, 1, 2)
            .t(-22, 1, 1)
            .t(40, 1, 0)
            .t(-1, 0, 3)
            .t(11, 0, 2)
            .t(-32, 0, 1)
            .t(14, 0, 0),
        // 1/2 (n^4 + k^4 + (13-4k)n^3 + (6k^2-37k+56)n^2 - (4k^3-35k^2+96k-80)n)
        //   - 11/2 k^3 + 22k^2 - 34k + 9
        FormulaId::LcsSecondZagreb => p
            .add(1, 2, 4, 0)
            .add(1, 2, 0, 4)
            .add(13, 2, 3, 0)
            .add(-4, 2, 3, 1)
            .add(6, 2, 2, 2)
            .add(-37, 2, 2, 1)
            .add(56, 2, 2, 0)
            .add(-4, 2, 1, 3)
            .add(35, 2, 1, 2)
            .add(-96, 2, 1, 1)
            .add(80, 2, 1, 0)
            .add(-11, 2, 0, 3)
            .t(22, 0, 2)
            .t(-34, 0, 1)
            .t(9, 0, 0),
        // 2n^3 + (22-4k)n^2 + (2k^2-10k-28)n - 4k^2 + 28k - 14
        FormulaId::LcsFirstCoindex => p
            .t(2, 3, 0)
            .t(22, 2, 0)
            .t(-4, 2, 1)
            .t(2, 1, 2)
            .t(-10, 1, 1)
            .t(-28, 1, 0)
            .t(-4, 0, 2)
            .t(28, 0, 1)
            .t(-14, 0, 0),
        // 1/2 (8n^3 + (62-18k)n^2 + (12k^2-52k-32)n)
        //   - 1/4 k^4 - 15/4 k^3 + 12k^2 + 5k - 7/2
        FormulaId::LcsSecondCoindex => p
            .add(8, 2, 3, 0)
            .add(62, 2, 2, 0)
            .add(-18, 2, 2, 1)
            .add(12, 2, 1, 2)
            .add(-52, 2, 1, 1)
            .add(-32, 2, 1, 0)
            .add(-1, 4, 0, 4)
            .add(-15, 4, 0, 3)
            .t(12, 0, 2)
            .t(5, 0, 1)
            .add(-7, 2, 0, 0),
        // 2n
        FormulaId::LsOrder => p.t(2, 1, 0),
        // 1/2 (n^2 + k^2 + 5n - 2nk - k)
        FormulaId::LsSize => p
            .add(1, 2, 2, 0)
            .add(1, 2, 0, 2)
            .add(5, 2, 1, 0)
            .add(-2, 2, 1, 1)
            .add(-1, 2, 0, 1),
        // 3n - k + 1
        FormulaId::LcsOrder => p.t(3, 1, 0).t(-1, 0, 1).t(1, 0, 0),
        // 1/2 (n^2 + k^2 + 11n - 7k - 2nk + 4)
        FormulaId::LcsSize => p
            .add(1, 2, 2, 0)
            .add(1, 2, 0, 2)
            .add(11, 2, 1, 0)
            .add(-7, 2, 0, 1)
            .add(-2, 2, 1, 1)
            .add(4, 2, 0, 0),
        other => return Err(Error::WrongFormulaKind(other.code(), "scalar formula")),
    };
    Ok(v.done())
}

/// How to read the `L_c` edge bucket printed as "degree n and n-1".
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CutHubReading {
    /// Degrees `(n-k+2, n-k+3)`: the hub's cut copy next to the two
    /// cycle edges at the hub. Agrees with the literal text when `k = 3`.
    Shifted,
    /// Degrees `(n-1, n)` taken at face value.
    Literal,
}

impl CutHubReading {
    pub const ALL: [CutHubReading; 2] = [CutHubReading::Shifted, CutHubReading::Literal];

    pub fn name(self) -> &'static str {
        match self {
            CutHubReading::Shifted => "shifted",
            CutHubReading::Literal => "literal",
        }
    }
}

fn domain_usize(k: i64, n: i64) -> Result<(usize, usize)> {
    check_domain(k, n)?;
    let k = usize::try_from(k).map_err(|_| Error::Domain { k, n })?;
    let n = usize::try_from(n).map_err(|_| Error::Domain { k: k as i64, n })?;
    Ok((k, n))
}

fn push_degree(map: &mut DegreePartition, degree: usize, count: usize) {
    if count > 0 {
        *map.entry(degree).or_insert(0) += count;
    }
}

fn push_edge(map: &mut EdgePartition, a: usize, b: usize, count: usize) {
    if count > 0 {
        *map.entry((a.min(b), a.max(b))).or_insert(0) += count;
    }
}

/// Predicted degree partition of `L(S(CS))` or `L_c(S(CS))`.
pub fn predicted_degree_partition(id: FormulaId, k: i64, n: i64) -> Result<DegreePartition> {
    let (k, n) = domain_usize(k, n)?;
    let l = n - k;
    let mut map = DegreePartition::new();
    match id {
        FormulaId::LsDegreePartition => {
            push_degree(&mut map, 2, 2 * k - 2);
            push_degree(&mut map, l + 2, l + 2);
            push_degree(&mut map, 1, l);
        }
        FormulaId::LcsDegreePartition => {
            push_degree(&mut map, 2, 2 * k - 2);
            push_degree(&mut map, 2, 2 * l);
            push_degree(&mut map, l + 3, 2);
            push_degree(&mut map, l + 2, 1);
            push_degree(&mut map, l + 4, l);
        }
        other => return Err(Error::WrongFormulaKind(other.code(), "degree partition")),
    }
    Ok(map)
}

/// Predicted edge partition; `L_c` buckets use the [`CutHubReading::Shifted`] reading.
pub fn predicted_edge_partition(id: FormulaId, k: i64, n: i64) -> Result<EdgePartition> {
    match id {
        FormulaId::LsEdgePartition => {
            let (k, n) = domain_usize(k, n)?;
            let l = n - k;
            let mut map = EdgePartition::new();
            push_edge(&mut map, 2, 2, 2 * k - 3);
            push_edge(&mut map, 2, l + 2, 2);
            push_edge(&mut map, 1, l + 2, l);
            push_edge(&mut map, l + 2, l + 2, (l + 2) * (l + 1) / 2);
            Ok(map)
        }
        FormulaId::LcsEdgePartition => predicted_lcs_edge_partition(CutHubReading::Shifted, k, n),
        other => Err(Error::WrongFormulaKind(other.code(), "edge partition")),
    }
}

/// The nine `L_c(S(CS))` edge buckets, with the cut-hub bucket read as chosen.
/// The bucket printed as "degree n-1 and n-k+4" is kept literally in both readings.
pub fn predicted_lcs_edge_partition(
    reading: CutHubReading,
    k: i64,
    n: i64,
) -> Result<EdgePartition> {
    let (k, n) = domain_usize(k, n)?;
    let l = n - k;
    let mut map = EdgePartition::new();
    push_edge(&mut map, 2, 2, 2 * k - 3);
    push_edge(&mut map, 2, 2, l);
    push_edge(&mut map, 2, l + 3, 2);
    push_edge(&mut map, 2, l + 4, 2 * l);
    match reading {
        CutHubReading::Shifted => push_edge(&mut map, l + 3, l + 2, 2),
        CutHubReading::Literal => push_edge(&mut map, n, n - 1, 2),
    }
    push_edge(&mut map, n - 1, l + 4, l);
    push_edge(&mut map, l + 3, l + 3, 1);
    push_edge(&mut map, l + 3, l + 4, 2 * l);
    push_edge(&mut map, l + 4, l + 4, l * l.saturating_sub(1) / 2);
    Ok(map)
}
