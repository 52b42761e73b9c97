use std::collections::HashMap;
use std::ops::{Add, Mul, Neg};

use num_traits::{One, Zero};

/// Pfaffian of the `n x n` skew matrix whose strict upper triangle is given by
/// `entry(i, j)` for `i < j`, over any commutative ring.
///
/// Expands along the first remaining row, memoised on the set of remaining
/// indices. The state space is at most `2^n`; intended for `n <= 12`.
pub fn pfaffian_with<T, F>(n: usize, entry: F) -> T
where
    T: Clone + Zero + One + Neg<Output = T>,
    for<'a> &'a T: Add<&'a T, Output = T> + Mul<&'a T, Output = T>,
    F: Fn(usize, usize) -> T,
{
    assert!(n <= 64, "pfaffian expansion limited to n <= 64");
    if n % 2 == 1 {
        return T::zero();
    }
    let mut upper = vec![vec![T::zero(); n]; n];
    for (i, row) in upper.iter_mut().enumerate() {
        for (j, slot) in row.iter_mut().enumerate().skip(i + 1) {
            *slot = entry(i, j);
        }
    }
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut memo = HashMap::new();
    expand(&upper, full, &mut memo)
}

fn expand<T>(upper: &[Vec<T>], set: u64, memo: &mut HashMap<u64, T>) -> T
where
    T: Clone + Zero + One + Neg<Output = T>,
    for<'a> &'a T: Add<&'a T, Output = T> + Mul<&'a T, Output = T>,
{
    if set == 0 {
        return T::one();
    }
    if let Some(v) = memo.get(&set) {
        return v.clone();
    }
    let first = set.trailing_zeros() as usize;
    let rest = set & !(1u64 << first);
    let mut acc = T::zero();
    let mut position = 0usize;
    let mut bits = rest;
    while bits != 0 {
        let j = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        let a = &upper[first][j];
        if !a.is_zero() {
            let minor = expand(upper, rest & !(1u64 << j), memo);
            if !minor.is_zero() {
                let term = a * &minor;
                acc = if position % 2 == 0 {
                    &acc + &term
                } else {
                    &acc + &(-term)
                };
            }
        }
        position += 1;
    }
    memo.insert(set, acc.clone());
    acc
}
