use serde::Serialize;

use super::certify::{certify, CertifyMode, Verdict};
use super::SkewLinearSpace;
use crate::error::{Error, Result};
use crate::exact::{Rational, SkewMatrix};
use crate::exec::{find_first, Execution};
use crate::rng::{small_int, stream_rng};

/// Entries of candidate basis matrices are drawn from `[-3, 3]`.
const ENTRY_BOUND: i64 = 3;
/// Random samples tried before exact certification of each candidate.
const TRIALS_PER_CANDIDATE: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome")]
pub enum SearchOutcome {
    Found {
        /// Index of the restart that produced the space.
        restart: usize,
        space: SkewLinearSpace,
        verdict: Verdict,
    },
    /// No verified space within the budget. Not a proof of nonexistence.
    NotFound { budget: usize },
}

impl SearchOutcome {
    pub fn space(&self) -> Option<&SkewLinearSpace> {
        match self {
            SearchOutcome::Found { space, .. } => Some(space),
            SearchOutcome::NotFound { .. } => None,
        }
    }
}

fn candidate(n: usize, m: usize, seed: u64, restart: usize) -> Option<SkewLinearSpace> {
    let mut rng = stream_rng(seed, restart as u64);
    let width = n * n.saturating_sub(1) / 2;
    let basis: Vec<SkewMatrix> = (0..m)
        .map(|_| {
            let upper: Vec<Rational> = (0..width)
                .map(|_| Rational::from_integer(small_int(&mut rng, ENTRY_BOUND).into()))
                .collect();
            SkewMatrix::from_upper(n, &upper).expect("upper triangle has the right length")
        })
        .collect();
    SkewLinearSpace::new(n, basis).ok()
}

/// Seeded random restarts for an `m`-dimensional space of `N x N` skew
/// matrices of constant rank `r`. Restart `i` draws its candidate from stream
/// `i` of `seed`; the lowest successful restart wins regardless of execution.
pub fn search_constant_rank(
    n: usize,
    r: usize,
    m: usize,
    seed: u64,
    budget: usize,
    exec: Execution,
) -> Result<SearchOutcome> {
    if r == 0 || r % 2 == 1 || r > n {
        return Err(Error::InvalidParameter(format!(
            "need even 0 < r <= N, got r = {r}, N = {n}"
        )));
    }
    if m == 0 {
        return Err(Error::InvalidParameter("target dimension must be at least 1".into()));
    }
    if m > n * (n - 1) / 2 {
        return Err(Error::InvalidParameter(format!(
            "no {m}-dimensional subspace of skew {n} x {n} matrices"
        )));
    }
    // certification runs sequentially inside each restart; restarts are the
    // unit of parallelism
    let found = find_first(exec, budget, |i| {
        let space = candidate(n, m, seed, i)?;
        let mode = CertifyMode::Auto {
            seed: seed ^ (i as u64).rotate_left(32),
            trials: TRIALS_PER_CANDIDATE,
        };
        let verdict = certify(&space, r, mode, Execution::Sequential, true).ok()??;
        verdict.is_constant_rank().then_some((space, verdict))
    });
    Ok(match found {
        Some((restart, (space, verdict))) => SearchOutcome::Found {
            restart,
            space,
            verdict,
        },
        None => SearchOutcome::NotFound { budget },
    })
}
