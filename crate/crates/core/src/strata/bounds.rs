use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::certify::Verdict;
use super::SkewLinearSpace;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundKind {
    Skew,
    Symmetric,
}

impl FromStr for BoundKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "skew" => Ok(BoundKind::Skew),
            "symmetric" => Ok(BoundKind::Symmetric),
            other => Err(Error::Parse(format!("unknown bound kind {other:?} (skew|symmetric)"))),
        }
    }
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BoundKind::Skew => "skew",
            BoundKind::Symmetric => "symmetric",
        })
    }
}

/// Form type, matrix size `N`, rank `r` and defect `e`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BoundQuery {
    pub kind: BoundKind,
    #[serde(rename = "N")]
    pub n: usize,
    pub r: usize,
    pub e: usize,
}

/// Largest base dimension `d` for which a family of forms of rank `r` can
/// avoid the next degeneracy locus: `2(N - r) + e` for skew forms,
/// `N - r + e` for symmetric ones.
pub fn degeneracy_bound(q: &BoundQuery) -> Result<usize> {
    if q.r > q.n {
        return Err(Error::InvalidParameter(format!(
            "need r <= N, got r = {}, N = {}",
            q.r, q.n
        )));
    }
    match q.kind {
        BoundKind::Skew if q.r % 2 == 1 => Err(Error::InvalidParameter(format!(
            "skew forms have even rank, got r = {}",
            q.r
        ))),
        BoundKind::Skew => Ok(2 * (q.n - q.r) + q.e),
        BoundKind::Symmetric => Ok(q.n - q.r + q.e),
    }
}

/// Projective dimension of the locus of `N x N` skew matrices of rank at most
/// `r`; `-1` for the empty locus `r = 0`.
pub fn ss_locus_dimension(n: usize, r: usize) -> Result<i64> {
    if r > n || r % 2 == 1 {
        return Err(Error::InvalidParameter(format!(
            "need even r <= N, got r = {r}, N = {n}"
        )));
    }
    let pairs = |k: usize| (k * k.saturating_sub(1) / 2) as i64;
    Ok(pairs(n) - pairs(n - r) - 1)
}

/// Outcome of comparing a measured dimension against a proved upper bound.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub statement: String,
    pub value: i64,
    pub bound: i64,
    pub slack: i64,
    pub holds: bool,
    pub tight: bool,
}

impl BoundReport {
    pub fn new(statement: impl Into<String>, value: i64, bound: i64) -> Self {
        Self {
            statement: statement.into(),
            value,
            bound,
            slack: bound - value,
            holds: value <= bound,
            tight: value == bound,
        }
    }
}

fn require_constant_rank(verdict: &Verdict) -> Result<()> {
    if verdict.is_constant_rank() {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!(
            "bound checks need a ConstantRank verdict, got {}",
            verdict.name()
        )))
    }
}

/// `m <= 2(N - r) + 1` for a space certified to have constant rank `r`.
pub fn verify_constant_rank_bound(u: &SkewLinearSpace, r: usize, verdict: &Verdict) -> Result<BoundReport> {
    require_constant_rank(verdict)?;
    let bound = 2 * (u.n() as i64 - r as i64) + 1;
    Ok(BoundReport::new("dim U <= 2(N - r) + 1", u.dim() as i64, bound))
}

/// `P(U)` is an `(m - 1)`-dimensional family in the rank-`r` locus avoiding
/// rank `r - 2`, so `m - 1 <= 2(N - r)`.
pub fn projectivized_family_check(u: &SkewLinearSpace, r: usize, verdict: &Verdict) -> Result<BoundReport> {
    require_constant_rank(verdict)?;
    let bound = 2 * (u.n() as i64 - r as i64);
    Ok(BoundReport::new("dim P(U) <= 2(N - r)", u.dim() as i64 - 1, bound))
}
