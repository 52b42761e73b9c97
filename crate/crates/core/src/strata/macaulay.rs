//! Emptiness of a projective zero set over the algebraic closure, decided by
//! linear algebra on a Macaulay matrix.
//!
//! For homogeneous `f_1, ..., f_s` in `m` variables with degrees
//! `d_1 >= d_2 >= ...`, the common zero set in `P^{m-1}` is empty exactly when
//! the ideal contains every monomial of degree
//! `D = (d_1 - 1) + ... + (d_m - 1) + 1` (Lazard's regularity bound; with fewer
//! than `m` generators the zero set is never empty). The degree-`D` part of
//! the ideal is spanned by the products `x^a f_i` with `|a| = D - d_i`, so
//! the test is a rank computation.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use super::mpoly::{monomials_of_degree, MPoly};
use crate::error::{Error, Result};
use crate::exact::{Rational, RationalMatrix};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MacaulayCertificate {
    /// Degree `D` at which the ideal was compared with the full polynomial space.
    pub degree: u32,
    pub rows: usize,
    pub columns: usize,
    pub rank: usize,
    /// Zero set empty over the algebraic closure.
    pub empty: bool,
}

const PRIMES: [u64; 2] = [(1 << 61) - 1, 4_611_686_018_427_387_847];

/// Decides whether homogeneous `gens` in `nvars` variables have a common zero
/// in projective space over the algebraic closure of the rationals.
pub fn projective_zero_set_is_empty(gens: &[MPoly], nvars: usize) -> Result<MacaulayCertificate> {
    Ok(zero_set_emptiness(gens, nvars, true)?.expect("exact fallback always decides"))
}

/// As [`projective_zero_set_is_empty`]; with `exact_fallback` off, returns
/// `None` instead of computing the rational rank when every modular rank is
/// deficient (the zero set is then nonempty unless all primes were unlucky).
pub(crate) fn zero_set_emptiness(
    gens: &[MPoly],
    nvars: usize,
    exact_fallback: bool,
) -> Result<Option<MacaulayCertificate>> {
    if nvars == 0 {
        return Err(Error::InvalidParameter(
            "projective space needs at least one variable".into(),
        ));
    }
    let gens: Vec<&MPoly> = gens.iter().filter(|g| !g.is_zero()).collect();
    if let Some(bad) = gens.iter().find(|g| !g.is_homogeneous()) {
        return Err(Error::InvalidParameter(format!(
            "generator of degree {:?} is not homogeneous",
            bad.degree()
        )));
    }
    if gens.iter().any(|g| g.degree() == Some(0)) {
        return Ok(Some(MacaulayCertificate {
            degree: 0,
            rows: 1,
            columns: 1,
            rank: 1,
            empty: true,
        }));
    }
    let mut degrees: Vec<u32> = gens.iter().map(|g| g.degree().expect("nonzero")).collect();
    degrees.sort_unstable_by(|a, b| b.cmp(a));
    if gens.len() < nvars {
        return Ok(Some(MacaulayCertificate {
            degree: 0,
            rows: 0,
            columns: 0,
            rank: 0,
            empty: false,
        }));
    }
    let target: u32 = degrees[..nvars].iter().map(|d| d - 1).sum::<u32>() + 1;

    let columns = monomials_of_degree(nvars, target);
    let index: HashMap<Vec<u32>, usize> = columns.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
    let mut rows: Vec<Vec<(usize, Rational)>> = Vec::new();
    for g in &gens {
        let d = g.degree().expect("nonzero");
        for shift in monomials_of_degree(nvars, target - d) {
            let row = g
                .terms()
                .map(|(m, c)| {
                    let mut full = shift.clone();
                    for (slot, e) in full.iter_mut().zip(m) {
                        *slot += e;
                    }
                    (index[&full], c.clone())
                })
                .collect();
            rows.push(row);
        }
    }
    let ncols = columns.len();
    let nrows = rows.len();

    // rank mod p never exceeds the rational rank
    for p in PRIMES {
        if let Some(rank) = modular_rank(&rows, ncols, p) {
            if rank == ncols {
                return Ok(Some(MacaulayCertificate {
                    degree: target,
                    rows: nrows,
                    columns: ncols,
                    rank,
                    empty: true,
                }));
            }
        }
    }
    if !exact_fallback {
        return Ok(None);
    }
    let mut dense = RationalMatrix::zeros(nrows, ncols);
    for (i, row) in rows.iter().enumerate() {
        for (j, c) in row {
            dense.set(i, *j, c.clone());
        }
    }
    let rank = dense.rank();
    Ok(Some(MacaulayCertificate {
        degree: target,
        rows: nrows,
        columns: ncols,
        rank,
        empty: rank == ncols,
    }))
}

fn to_mod(x: &Rational, p: u64) -> Option<u64> {
    let pb = BigInt::from(p);
    let num = x.numer().mod_floor(&pb).to_u64()?;
    let den = x.denom().mod_floor(&pb).to_u64()?;
    if den == 0 {
        return None;
    }
    Some(mul_mod(num, pow_mod(den, p - 2, p), p))
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Rank over `F_p`, or `None` if some denominator vanishes mod `p`.
fn modular_rank(rows: &[Vec<(usize, Rational)>], ncols: usize, p: u64) -> Option<usize> {
    let mut m: Vec<Vec<u64>> = Vec::with_capacity(rows.len());
    for row in rows {
        let mut dense = vec![0u64; ncols];
        for (j, c) in row {
            dense[*j] = to_mod(c, p)?;
        }
        m.push(dense);
    }
    let mut rank = 0;
    for c in 0..ncols {
        let Some(piv) = (rank..m.len()).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(rank, piv);
        let inv = pow_mod(m[rank][c], p - 2, p);
        let pivot_row: Vec<u64> = m[rank].iter().map(|&x| mul_mod(x, inv, p)).collect();
        for row in m.iter_mut().skip(rank + 1) {
            let f = row[c];
            if f == 0 {
                continue;
            }
            for j in c..ncols {
                row[j] = (row[j] + p - mul_mod(f, pivot_row[j], p)) % p;
            }
        }
        m[rank] = pivot_row;
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    Some(rank)
}
