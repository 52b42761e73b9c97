use std::collections::BTreeMap;

use num_traits::Zero;
use serde::Serialize;

use super::macaulay::{zero_set_emptiness, MacaulayCertificate};
use super::mpoly::MPoly;
use super::SkewLinearSpace;
use crate::error::{Error, Result};
use crate::exact::{pfaffian_with, Rational};
use crate::exec::{map_indexed, Execution};
use crate::rng::{nonzero_int_vector, stream_rng};

/// Largest matrix size handled by exact certification.
pub const EXACT_MAX_N: usize = 8;
/// Largest space dimension handled by exact certification.
pub const EXACT_MAX_DIM: usize = 4;

/// Random sample coefficients are drawn from `[-SAMPLE_BOUND, SAMPLE_BOUND]`.
const SAMPLE_BOUND: i64 = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CertifyMode {
    /// Evaluate ranks on structured and random points only. Never returns
    /// `ConstantRank` for spaces of dimension above one.
    Probabilistic { seed: u64, trials: usize },
    /// Sample first, then certify `rank <= r` symbolically and `rank >= r`
    /// over the algebraic closure with a Macaulay matrix. Requires
    /// `N <= EXACT_MAX_N` and `m <= EXACT_MAX_DIM`.
    ExactSmall { seed: u64, trials: usize },
    /// `ExactSmall` when within its limits, `Probabilistic` otherwise.
    Auto { seed: u64, trials: usize },
}

impl CertifyMode {
    fn seed_trials(self) -> (u64, usize) {
        match self {
            CertifyMode::Probabilistic { seed, trials }
            | CertifyMode::ExactSmall { seed, trials }
            | CertifyMode::Auto { seed, trials } => (seed, trials),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UpperBound {
    /// Principal `(r+2)`-Pfaffians expanded and found identically zero.
    pub minors_checked: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LowerBound {
    /// Principal `r`-Pfaffians whose common zero set was tested.
    pub minors_checked: usize,
    pub macaulay: MacaulayCertificate,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict")]
pub enum Verdict {
    /// Every nonzero element, over the algebraic closure, has rank exactly `r`.
    ConstantRank {
        upper: UpperBound,
        lower: LowerBound,
        samples: usize,
    },
    /// A sampled element with `0 < rank < r`.
    FoundDrop { witness: Vec<i64>, rank: usize },
    /// An element with rank above `r`.
    FoundExcess { witness: Vec<i64>, rank: usize },
    /// Some nonzero complex element has rank below `r`, though no rational
    /// sample hit one.
    DropLocusNonempty {
        minors_checked: usize,
        macaulay: MacaulayCertificate,
        samples: usize,
    },
    /// No witness among the samples and no exact certificate attempted.
    Inconclusive { samples: usize, ranks_seen: Vec<usize> },
}

impl Verdict {
    pub fn name(&self) -> &'static str {
        match self {
            Verdict::ConstantRank { .. } => "ConstantRank",
            Verdict::FoundDrop { .. } => "FoundDrop",
            Verdict::FoundExcess { .. } => "FoundExcess",
            Verdict::DropLocusNonempty { .. } => "DropLocusNonempty",
            Verdict::Inconclusive { .. } => "Inconclusive",
        }
    }

    pub fn is_constant_rank(&self) -> bool {
        matches!(self, Verdict::ConstantRank { .. })
    }

    pub fn witness(&self) -> Option<&[i64]> {
        match self {
            Verdict::FoundDrop { witness, .. } | Verdict::FoundExcess { witness, .. } => Some(witness),
            _ => None,
        }
    }

    /// What the verdict actually establishes.
    pub fn confidence(&self) -> &'static str {
        match self {
            Verdict::ConstantRank { .. } => {
                "exact: rank <= r by symbolic Pfaffian minors, rank >= r on all nonzero complex points by Macaulay matrix rank"
            }
            Verdict::FoundDrop { .. } | Verdict::FoundExcess { .. } => {
                "exact: witness rank computed over the rationals"
            }
            Verdict::DropLocusNonempty { .. } => {
                "exact: rank-drop locus has complex points (Macaulay matrix rank deficient)"
            }
            Verdict::Inconclusive { .. } => {
                "sampled only: no witness found; rank-drop points may be irrational and are not excluded"
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RankBucket {
    pub count: usize,
    /// First sample (in sample order) with this rank.
    pub representative: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RankProfile {
    pub seed: u64,
    pub evaluated: usize,
    pub ranks: BTreeMap<usize, RankBucket>,
    /// Largest rank seen: a lower bound on the generic rank.
    pub max_rank: Option<usize>,
    pub min_nonzero_rank: Option<usize>,
}

/// Coordinate vectors, pairwise sums, then `random` nonzero integer vectors
/// with entries in `[-5, 5]`.
pub(crate) fn sample_vectors(m: usize, seed: u64, random: usize) -> Vec<Vec<i64>> {
    if m == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    for i in 0..m {
        let mut v = vec![0; m];
        v[i] = 1;
        out.push(v);
    }
    for i in 0..m {
        for j in i + 1..m {
            let mut v = vec![0; m];
            v[i] = 1;
            v[j] = 1;
            out.push(v);
        }
    }
    let mut rng = stream_rng(seed, 0);
    out.extend((0..random).map(|_| nonzero_int_vector(&mut rng, m, SAMPLE_BOUND)));
    out
}

fn sampled_ranks(u: &SkewLinearSpace, samples: &[Vec<i64>], exec: Execution) -> Vec<usize> {
    map_indexed(exec, samples.len(), |i| {
        u.element_at_ints(&samples[i]).expect("sample length matches").rank()
    })
}

/// Ranks of structured and random elements of `U`.
pub fn rank_profile(u: &SkewLinearSpace, seed: u64, samples: usize, exec: Execution) -> RankProfile {
    let vectors = sample_vectors(u.dim(), seed, samples);
    let ranks = sampled_ranks(u, &vectors, exec);
    let mut buckets: BTreeMap<usize, RankBucket> = BTreeMap::new();
    for (v, &r) in vectors.iter().zip(&ranks) {
        buckets
            .entry(r)
            .and_modify(|b| b.count += 1)
            .or_insert_with(|| RankBucket {
                count: 1,
                representative: v.clone(),
            });
    }
    RankProfile {
        seed,
        evaluated: vectors.len(),
        max_rank: buckets.keys().next_back().copied(),
        min_nonzero_rank: buckets.keys().copied().find(|&r| r > 0),
        ranks: buckets,
    }
}

/// Upper-triangle entries of a generic element `sum x_t B_t` as linear forms.
fn linear_entries(u: &SkewLinearSpace) -> Vec<Vec<MPoly>> {
    let n = u.n();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let coeffs: Vec<Rational> = u.basis().iter().map(|b| b.get(i, j).clone()).collect();
                    MPoly::linear(&coeffs)
                })
                .collect()
        })
        .collect()
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Principal `k`-Pfaffians of the generic element, as polynomials in the
/// coefficients.
fn principal_pfaffians(entries: &[Vec<MPoly>], k: usize, exec: Execution) -> Vec<MPoly> {
    let sets = subsets(entries.len(), k);
    map_indexed(exec, sets.len(), |s| {
        let idx = &sets[s];
        pfaffian_with(k, |a, b| entries[idx[a]][idx[b]].clone())
    })
}

/// Smallest-height integer point where `f` does not vanish.
fn nonvanishing_point(f: &MPoly, m: usize) -> Vec<i64> {
    let degree = f.degree().unwrap_or(0) as i64;
    for bound in 1..=degree.max(1) {
        let width = (2 * bound + 1) as usize;
        let total = width.pow(m as u32);
        for code in 0..total {
            let mut c = code;
            let v: Vec<i64> = (0..m)
                .map(|_| {
                    let digit = (c % width) as i64 - bound;
                    c /= width;
                    digit
                })
                .collect();
            let point: Vec<Rational> = v.iter().map(|&x| Rational::from_integer(x.into())).collect();
            if !f.eval(&point).is_zero() {
                return v;
            }
        }
    }
    unreachable!("a nonzero polynomial of degree d has a nonzero on the grid [-d, d]^m")
}

/// Decides whether every nonzero element of `U` has rank `r`.
pub fn is_constant_rank(u: &SkewLinearSpace, r: usize, mode: CertifyMode, exec: Execution) -> Result<Verdict> {
    Ok(certify(u, r, mode, exec, false)?.expect("exact lower bound always decides"))
}

/// With `screening`, a candidate whose Macaulay matrix is rank deficient
/// modulo every prefilter prime is dropped (`None`) without the exact rank
/// computation. `ConstantRank` verdicts are certified either way.
pub(crate) fn certify(
    u: &SkewLinearSpace,
    r: usize,
    mode: CertifyMode,
    exec: Execution,
    screening: bool,
) -> Result<Option<Verdict>> {
    if r % 2 == 1 {
        return Err(Error::InvalidParameter(format!(
            "skew-symmetric matrices have even rank, got r = {r}"
        )));
    }
    if r == 0 || r > u.n() {
        return Err(Error::InvalidParameter(format!(
            "need 0 < r <= N, got r = {r}, N = {}",
            u.n()
        )));
    }
    let exact_ok = u.n() <= EXACT_MAX_N && u.dim() <= EXACT_MAX_DIM;
    let exact = match mode {
        CertifyMode::Probabilistic { .. } => false,
        CertifyMode::ExactSmall { .. } if !exact_ok => {
            return Err(Error::InvalidParameter(format!(
                "exact certification needs N <= {EXACT_MAX_N} and m <= {EXACT_MAX_DIM}"
            )))
        }
        CertifyMode::ExactSmall { .. } => true,
        CertifyMode::Auto { .. } => exact_ok,
    };
    let (seed, trials) = mode.seed_trials();

    let vectors = sample_vectors(u.dim(), seed, trials);
    let ranks = sampled_ranks(u, &vectors, exec);
    if let Some(i) = ranks.iter().position(|&k| k > r) {
        return Ok(Some(Verdict::FoundExcess {
            witness: vectors[i].clone(),
            rank: ranks[i],
        }));
    }
    if let Some(i) = ranks.iter().position(|&k| k > 0 && k < r) {
        return Ok(Some(Verdict::FoundDrop {
            witness: vectors[i].clone(),
            rank: ranks[i],
        }));
    }
    if !exact {
        let mut seen: Vec<usize> = ranks.clone();
        seen.sort_unstable();
        seen.dedup();
        return Ok(Some(Verdict::Inconclusive {
            samples: vectors.len(),
            ranks_seen: seen,
        }));
    }

    let m = u.dim();
    let entries = linear_entries(u);
    let upper_minors = if r + 2 <= u.n() {
        principal_pfaffians(&entries, r + 2, exec)
    } else {
        Vec::new()
    };
    if let Some(f) = upper_minors.iter().find(|f| !f.is_zero()) {
        let witness = nonvanishing_point(f, m);
        let rank = u.element_at_ints(&witness)?.rank();
        return Ok(Some(Verdict::FoundExcess { witness, rank }));
    }
    let upper = UpperBound {
        minors_checked: upper_minors.len(),
    };
    if m == 0 {
        return Ok(Some(Verdict::ConstantRank {
            upper,
            lower: LowerBound {
                minors_checked: 0,
                macaulay: MacaulayCertificate {
                    degree: 0,
                    rows: 0,
                    columns: 0,
                    rank: 0,
                    empty: true,
                },
            },
            samples: 0,
        }));
    }
    let lower_minors = principal_pfaffians(&entries, r, exec);
    let Some(macaulay) = zero_set_emptiness(&lower_minors, m, !screening)? else {
        return Ok(None);
    };
    if macaulay.empty {
        Ok(Some(Verdict::ConstantRank {
            upper,
            lower: LowerBound {
                minors_checked: lower_minors.len(),
                macaulay,
            },
            samples: vectors.len(),
        }))
    } else {
        Ok(Some(Verdict::DropLocusNonempty {
            minors_checked: lower_minors.len(),
            macaulay,
            samples: vectors.len(),
        }))
    }
}
