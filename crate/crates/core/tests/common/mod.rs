#![allow(dead_code)]

use std::collections::{HashMap, VecDeque};

use num_bigint::BigInt;
use num_traits::Zero;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use skewloci::exact::{rat, Rational, RationalMatrix, SkewMatrix};
use skewloci::grass::Subspace;
use skewloci::rng::stream_rng;
use skewloci::weyl::QPolynomial;

pub fn rng(seed: u64, stream: u64) -> ChaCha8Rng {
    stream_rng(seed, stream)
}

pub fn int_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize, bound: i64) -> RationalMatrix {
    let rows: Vec<Vec<i64>> = (0..rows)
        .map(|_| (0..cols).map(|_| rng.gen_range(-bound..=bound)).collect())
        .collect();
    if rows.is_empty() {
        return RationalMatrix::zeros(0, cols);
    }
    RationalMatrix::from_ints(&rows)
}

pub fn invertible(rng: &mut ChaCha8Rng, n: usize, bound: i64) -> RationalMatrix {
    loop {
        let m = int_matrix(rng, n, n, bound);
        if m.rank() == n {
            return m;
        }
    }
}

/// Full-rank `rows x cols` integer matrix, `rows <= cols`.
pub fn surjection(rng: &mut ChaCha8Rng, rows: usize, cols: usize, bound: i64) -> RationalMatrix {
    loop {
        let m = int_matrix(rng, rows, cols, bound);
        if m.rank() == rows {
            return m;
        }
    }
}

pub fn skew(rng: &mut ChaCha8Rng, n: usize, bound: i64) -> SkewMatrix {
    let upper: Vec<i64> = (0..n * n.saturating_sub(1) / 2)
        .map(|_| rng.gen_range(-bound..=bound))
        .collect();
    SkewMatrix::from_upper_ints(n, &upper).unwrap()
}

/// `B^T S B` with `S` a random nondegenerate skew `r x r` matrix and `B` a
/// random surjection `Q^N -> Q^r`: a skew form of rank exactly `r`.
pub fn skew_of_rank(rng: &mut ChaCha8Rng, n: usize, r: usize) -> SkewMatrix {
    let s = loop {
        let s = skew(rng, r, 3);
        if s.rank() == r {
            break s;
        }
    };
    let b = surjection(rng, r, n, 2);
    s.congruent(&b).unwrap()
}

pub fn random_subspace(rng: &mut ChaCha8Rng, ambient: usize, dim: usize) -> Subspace {
    loop {
        let m = int_matrix(rng, dim, ambient, 3);
        let s = Subspace::from_rows(ambient, &m).unwrap();
        if s.dim() == dim {
            return s;
        }
    }
}

/// Pfaffian as a signed sum over perfect matchings.
pub fn pfaffian_by_matchings(a: &SkewMatrix) -> Rational {
    fn go(a: &SkewMatrix, free: &mut Vec<usize>) -> Rational {
        if free.is_empty() {
            return rat(1);
        }
        let i = free.remove(0);
        let mut acc = Rational::zero();
        for pos in 0..free.len() {
            let j = free.remove(pos);
            let sign = if pos % 2 == 0 { rat(1) } else { rat(-1) };
            acc += sign * a.get(i, j) * go(a, free);
            free.insert(pos, j);
        }
        free.insert(0, i);
        acc
    }
    if a.n() % 2 == 1 {
        return Rational::zero();
    }
    go(a, &mut (0..a.n()).collect())
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

fn leibniz_det(m: &RationalMatrix) -> Rational {
    let n = m.rows();
    if n == 0 {
        return rat(1);
    }
    (0..n)
        .map(|j| {
            let rest: Vec<usize> = (0..n).filter(|&c| c != j).collect();
            let rows: Vec<usize> = (1..n).collect();
            let sign = if j % 2 == 0 { rat(1) } else { rat(-1) };
            sign * m.get(0, j) * leibniz_det(&m.select(&rows, &rest))
        })
        .fold(Rational::zero(), |a, b| a + b)
}

/// Largest `k` with a nonzero `k x k` minor (cofactor expansion; small sizes only).
pub fn rank_by_minors(m: &RationalMatrix) -> usize {
    for k in (1..=m.rows().min(m.cols())).rev() {
        for rows in subsets(m.rows(), k) {
            for cols in subsets(m.cols(), k) {
                if !leibniz_det(&m.select(&rows, &cols)).is_zero() {
                    return k;
                }
            }
        }
    }
    0
}

/// Weyl groups as groups of signed permutations in one-line notation, with
/// named simple reflections acting on positions.
#[derive(Clone, Copy, Debug)]
pub enum Reflection {
    Swap(usize),
    NegateLast,
}

fn apply(w: &[i8], s: Reflection) -> Vec<i8> {
    let mut v = w.to_vec();
    match s {
        Reflection::Swap(i) => v.swap(i, i + 1),
        Reflection::NegateLast => {
            let last = v.len() - 1;
            v[last] = -v[last];
        }
    }
    v
}

/// Lengths of all group elements by breadth-first search on the Cayley graph.
pub fn coxeter_lengths(n: usize, gens: &[Reflection]) -> HashMap<Vec<i8>, usize> {
    let id: Vec<i8> = (1..=n as i8).collect();
    let mut len = HashMap::from([(id.clone(), 0usize)]);
    let mut queue = VecDeque::from([id]);
    while let Some(w) = queue.pop_front() {
        let l = len[&w];
        for &s in gens {
            let v = apply(&w, s);
            if !len.contains_key(&v) {
                len.insert(v.clone(), l + 1);
                queue.push_back(v);
            }
        }
    }
    len
}

fn length_polynomial<'a>(lengths: impl Iterator<Item = &'a usize>) -> QPolynomial {
    let mut coeffs: Vec<BigInt> = Vec::new();
    for &l in lengths {
        if coeffs.len() <= l {
            coeffs.resize(l + 1, BigInt::zero());
        }
        coeffs[l] += 1;
    }
    QPolynomial::new(coeffs)
}

pub fn type_a(n: usize) -> Vec<Reflection> {
    (0..n.saturating_sub(1)).map(Reflection::Swap).collect()
}

pub fn type_c(n: usize) -> Vec<Reflection> {
    let mut g = type_a(n);
    g.push(Reflection::NegateLast);
    g
}

/// `sum q^{l(w)}` over the whole group.
pub fn full_flag_oracle(n: usize, gens: &[Reflection]) -> QPolynomial {
    length_polynomial(coxeter_lengths(n, gens).values())
}

/// `sum q^{l(w)}` over minimal length representatives of `W / W_P`.
pub fn coset_oracle(n: usize, gens: &[Reflection], parabolic: &[Reflection]) -> QPolynomial {
    let lengths = coxeter_lengths(n, gens);
    let minimal: Vec<usize> = lengths
        .iter()
        .filter(|(w, &l)| parabolic.iter().all(|&s| lengths[&apply(w, s)] > l))
        .map(|(_, l)| *l)
        .collect();
    length_polynomial(minimal.iter())
}

/// Grassmannian of 2-planes in `C^r` from `S_r / (S_2 x S_{r-2})`.
pub fn grass2_oracle(r: usize) -> QPolynomial {
    let parabolic: Vec<Reflection> = type_a(r)
        .into_iter()
        .filter(|s| !matches!(s, Reflection::Swap(1)))
        .collect();
    coset_oracle(r, &type_a(r), &parabolic)
}

/// Isotropic 2-planes in `C^r` from `W(C_n) / (S_2 x W(C_{n-2}))`, `n = r/2`.
pub fn isotropic_oracle(r: usize) -> QPolynomial {
    let n = r / 2;
    let gens = type_c(n);
    // for n = 2 the sign change acts inside the GL_2 block
    let parabolic: Vec<Reflection> = gens
        .iter()
        .copied()
        .filter(|s| match s {
            Reflection::Swap(i) => *i != 1,
            Reflection::NegateLast => n > 2,
        })
        .collect();
    coset_oracle(n, &gens, &parabolic)
}

/// Coefficients of a polynomial product computed term by term.
pub fn convolve(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}
