use std::collections::BTreeMap;

use num_traits::Zero;
use serde::Serialize;

use super::LieAlgebra;
use crate::error::{Error, Result};
use crate::exact::{Rational, SkewMatrix};
use crate::exec::{map_indexed, Execution};
use crate::rng::{nonzero_int_vector, stream_rng};
use crate::strata::BoundReport;

/// Random covector entries are drawn from `[-5, 5]`.
const SAMPLE_BOUND: i64 = 5;

/// `(omega_lambda)_ij = lambda([x_i, x_j]) = sum_k c_ij^k lambda_k`.
pub fn omega_matrix(alg: &LieAlgebra, lambda: &[Rational]) -> Result<SkewMatrix> {
    let n = alg.dim();
    if lambda.len() != n {
        return Err(Error::Shape(format!(
            "covector of length {} for an algebra of dimension {n}",
            lambda.len()
        )));
    }
    let mut upper = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            let mut v = Rational::zero();
            for (k, l) in lambda.iter().enumerate() {
                if !l.is_zero() {
                    v += alg.constant(i, j, k) * l;
                }
            }
            upper.push(v);
        }
    }
    SkewMatrix::from_upper(n, &upper)
}

/// Dimension of the coadjoint orbit through `lambda`, the rank of
/// `omega_lambda`.
pub fn orbit_dimension(alg: &LieAlgebra, lambda: &[Rational]) -> Result<usize> {
    Ok(omega_matrix(alg, lambda)?.rank())
}

fn ints(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| Rational::from_integer(x.into())).collect()
}

/// Dual-basis covectors, then `e_i + e_j` and `e_i - e_j` for `i < j`.
fn structured_covectors(n: usize) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for i in 0..n {
        let mut v = vec![0; n];
        v[i] = 1;
        out.push(v);
    }
    for i in 0..n {
        for j in i + 1..n {
            for s in [1, -1] {
                let mut v = vec![0; n];
                v[i] = 1;
                v[j] = s;
                out.push(v);
            }
        }
    }
    out
}

/// Structured covectors followed by `random` nonzero ones; random covector
/// `t` comes from stream `t` of `seed`.
fn nonzero_samples(n: usize, seed: u64, random: usize) -> Vec<Vec<i64>> {
    let mut out = structured_covectors(n);
    if n > 0 {
        out.extend((0..random).map(|t| nonzero_int_vector(&mut stream_rng(seed, t as u64), n, SAMPLE_BOUND)));
    }
    out
}

fn ranks(alg: &LieAlgebra, samples: &[Vec<i64>], exec: Execution) -> Vec<usize> {
    map_indexed(exec, samples.len(), |i| {
        orbit_dimension(alg, &ints(&samples[i])).expect("sample length matches")
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MinOrbit {
    /// Smallest orbit dimension among nonzero sampled covectors.
    pub r: usize,
    /// First sampled covector attaining it.
    pub witness: Vec<i64>,
    pub evaluated: usize,
    pub note: &'static str,
}

/// Minimal orbit dimension over nonzero covectors (a zero-dimensional orbit of
/// a nonzero fixed covector counts). An upper bound on the true minimum.
pub fn min_nonzero_orbit_dim(alg: &LieAlgebra, seed: u64, samples: usize, exec: Execution) -> Result<MinOrbit> {
    if alg.dim() == 0 {
        return Err(Error::InvalidParameter(
            "the zero algebra has no nonzero covectors".into(),
        ));
    }
    let vectors = nonzero_samples(alg.dim(), seed, samples);
    let dims = ranks(alg, &vectors, exec);
    let (idx, &r) = dims
        .iter()
        .enumerate()
        .min_by_key(|&(i, &d)| (d, i))
        .expect("at least one structured covector");
    Ok(MinOrbit {
        r,
        witness: vectors[idx].clone(),
        evaluated: vectors.len(),
        note: "minimum over dual-basis covectors, their pairwise sums and differences, and seeded random covectors; an upper bound in general, exact for the catalog algebras",
    })
}

/// `2 floor((2N + 1) / 6)`.
pub fn min_orbit_bound(n: usize) -> usize {
    2 * ((2 * n + 1) / 6)
}

/// Compares a minimal orbit dimension `r` with `2 floor((2N + 1) / 6)`.
pub fn check_min_orbit_bound(alg: &LieAlgebra, r: usize) -> BoundReport {
    BoundReport::new(
        "r <= 2 floor((2N + 1) / 6)",
        r as i64,
        min_orbit_bound(alg.dim()) as i64,
    )
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitBucket {
    pub count: usize,
    pub example: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitHistogram {
    pub seed: u64,
    pub evaluated: usize,
    pub buckets: BTreeMap<usize, OrbitBucket>,
}

impl OrbitHistogram {
    pub fn keys(&self) -> Vec<usize> {
        self.buckets.keys().copied().collect()
    }
}

/// Orbit dimensions over `lambda = 0`, the structured covectors and `samples`
/// random ones.
pub fn rank_stratification_histogram(alg: &LieAlgebra, seed: u64, samples: usize, exec: Execution) -> OrbitHistogram {
    let mut vectors = vec![vec![0; alg.dim()]];
    vectors.extend(nonzero_samples(alg.dim(), seed, samples));
    let dims = ranks(alg, &vectors, exec);
    let mut buckets: BTreeMap<usize, OrbitBucket> = BTreeMap::new();
    for (v, d) in vectors.iter().zip(dims) {
        buckets
            .entry(d)
            .and_modify(|b| b.count += 1)
            .or_insert_with(|| OrbitBucket {
                count: 1,
                example: v.clone(),
            });
    }
    OrbitHistogram {
        seed,
        evaluated: vectors.len(),
        buckets,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::lie::catalog;

    #[test]
    fn omega_examples() {
        let sl2 = catalog::sl2();
        let h_star = vec![rat(0), rat(1), rat(0)];
        let w = omega_matrix(&sl2, &h_star).unwrap();
        // basis e, h, f
        assert_eq!(w.get(0, 2), &rat(1));
        assert!(w.get(0, 1).is_zero() && w.get(1, 2).is_zero());
        assert_eq!(w.rank(), 2);
        assert!(omega_matrix(&sl2, &vec![rat(0); 3]).unwrap().is_zero());
        assert!(omega_matrix(&sl2, &[rat(1)]).is_err());

        let heis = catalog::heisenberg3();
        assert!(omega_matrix(&heis, &[rat(1), rat(0), rat(0)]).unwrap().is_zero());
    }

    #[test]
    fn bound_values() {
        assert_eq!(min_orbit_bound(8), 4);
        assert_eq!(min_orbit_bound(3), 2);
        assert_eq!(min_orbit_bound(10), 6);
        assert_eq!(min_orbit_bound(2), 0);
    }

    #[test]
    fn heisenberg_minimum_and_histogram() {
        let heis = catalog::heisenberg3();
        let m = min_nonzero_orbit_dim(&heis, 0, 10, Execution::Sequential).unwrap();
        assert_eq!((m.r, m.witness.clone()), (0, vec![1, 0, 0]));
        let h = rank_stratification_histogram(&heis, 0, 50, Execution::Sequential);
        assert_eq!(h.keys(), vec![0, 2]);
        assert_eq!(h.evaluated, 1 + 3 + 6 + 50);
        assert_eq!(h.buckets[&0].example, vec![0, 0, 0]);
    }

    #[test]
    fn parallel_matches_sequential() {
        let sl3 = catalog::sl3();
        let a = rank_stratification_histogram(&sl3, 9, 200, Execution::Sequential);
        let b = rank_stratification_histogram(&sl3, 9, 200, Execution::Parallel);
        assert_eq!(a, b);
    }
}
