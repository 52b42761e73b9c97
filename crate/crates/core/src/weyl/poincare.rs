use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::QPolynomial;
use crate::error::{Error, Result};

/// Classical types needed here: `A` for `sl_r`, `C` for `sp_r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GroupType {
    A,
    C,
}

impl FromStr for GroupType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(GroupType::A),
            "C" | "c" => Ok(GroupType::C),
            other => Err(Error::Unsupported(format!("group type {other:?}"))),
        }
    }
}

/// Degrees `d_i` of the Weyl group of `sl_r` (type A) or `sp_r` (type C),
/// i.e. the integers with `P(G/B) = prod (q^{d_i} - 1) / (q - 1)^l`.
///
/// These are classically called the degrees of the fundamental invariants;
/// some authors call the same numbers exponents. The numerical values are
/// what matter here.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ExponentList {
    pub group: GroupType,
    /// Matrix size: `sl_r` or `sp_r`.
    pub r: usize,
    pub degrees: Vec<usize>,
}

impl ExponentList {
    pub fn new(group: GroupType, r: usize) -> Result<Self> {
        Ok(Self {
            group,
            r,
            degrees: degrees(group, r)?,
        })
    }

    pub fn sl(r: usize) -> Self {
        Self::new(GroupType::A, r).expect("sl_r is defined for every r")
    }

    pub fn sp(r: usize) -> Result<Self> {
        Self::new(GroupType::C, r)
    }

    /// Semisimple rank `l`.
    pub fn rank(&self) -> usize {
        self.degrees.len()
    }
}

impl fmt::Display for ExponentList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.group {
            GroupType::A => write!(f, "sl{}", self.r),
            GroupType::C => write!(f, "sp{}", self.r),
        }
    }
}

impl FromStr for ExponentList {
    type Err = Error;

    /// `sl4`, `sp6`, or `A3`/`C2` in Cartan notation.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let parse = |digits: &str| {
            digits
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("invalid group {s:?}")))
        };
        if let Some(rest) = s.strip_prefix("sl") {
            Ok(Self::sl(parse(rest)?))
        } else if let Some(rest) = s.strip_prefix("sp") {
            Self::sp(parse(rest)?)
        } else if let Some(rest) = s.strip_prefix('A') {
            Ok(Self::sl(parse(rest)? + 1))
        } else if let Some(rest) = s.strip_prefix('C') {
            Self::sp(2 * parse(rest)?)
        } else {
            Err(Error::Unsupported(format!("group {s:?}")))
        }
    }
}

/// `sl_r`: `2, 3, ..., r`. `sp_r` (`r` even): `2, 4, ..., r`. Trivial groups
/// (`sl_0`, `sl_1`, `sp_0`) give the empty list.
pub fn degrees(group: GroupType, r: usize) -> Result<Vec<usize>> {
    match group {
        GroupType::A => Ok((2..=r).collect()),
        GroupType::C if r % 2 == 0 => Ok((1..=r / 2).map(|k| 2 * k).collect()),
        GroupType::C => Err(Error::InvalidParameter(format!("sp_{r} needs even r"))),
    }
}

/// `prod (q^d - 1) / (q - 1)^l` over the multiset union of the factors'
/// degree lists.
pub fn poincare_full_flag(factors: &[ExponentList]) -> QPolynomial {
    let mut numerator = QPolynomial::one();
    let mut l = 0;
    for d in factors.iter().flat_map(|f| f.degrees.iter()) {
        numerator = &numerator * &QPolynomial::q_power_minus_one(*d);
        l += 1;
    }
    numerator
        .exact_div(&QPolynomial::q_power_minus_one(1).pow(l))
        .expect("q - 1 divides q^d - 1")
}

/// `P(G/P) = P(G/B) / P(L/B_L)` for a group and a Levi factor given as
/// products of simple factors.
pub fn poincare_parabolic_quotient(group: &[ExponentList], levi: &[ExponentList]) -> Result<QPolynomial> {
    poincare_full_flag(group).exact_div(&poincare_full_flag(levi))
}

fn check_even(r: usize, min: usize) -> Result<usize> {
    if r % 2 == 1 || r < min {
        return Err(Error::InvalidParameter(format!("r must be even and >= {min}, got {r}")));
    }
    Ok(r / 2)
}

/// Closed form for the Grassmannian of 2-planes in a symplectic space of
/// dimension `r = 2n`:
/// `1 + q + 2q^2 + 2q^3 + ... + (n-1)q^{r-3} + n q^{r-2} + (n-1) q^{r-1} + ... + q^{2r-4}`.
pub fn poincare_grass2(r: usize) -> Result<QPolynomial> {
    check_even(r, 2)?;
    Ok(paired_staircase(2 * r - 4))
}

/// Closed form for the isotropic 2-planes `Z`:
/// `1 + q + 2q^2 + 2q^3 + ... + (n-1)q^{r-3} + (n-1)q^{r-2} + ... + q^{2r-5}`.
pub fn poincare_isotropic_grass2(r: usize) -> Result<QPolynomial> {
    check_even(r, 4)?;
    Ok(paired_staircase(2 * r - 5))
}

/// Coefficients `1, 1, 2, 2, 3, 3, ...` rising from both ends to the middle of
/// a palindrome of the given degree.
fn paired_staircase(degree: usize) -> QPolynomial {
    QPolynomial::new((0..=degree).map(|k| BigInt::from(k.min(degree - k) / 2 + 1)).collect())
}

/// Künneth: the Poincaré polynomial of a bundle with the given base and fiber.
pub fn poincare_bundle(base: &QPolynomial, fiber: &QPolynomial) -> QPolynomial {
    base * fiber
}

/// Betti numbers of a base of complex dimension `d`; `b[i] = dim H_i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiVector {
    pub d: usize,
    pub b: Vec<u64>,
}

impl BettiVector {
    pub fn new(d: usize, b: Vec<u64>) -> Result<Self> {
        if b.is_empty() {
            return Err(Error::InvalidParameter("Betti vector must be nonempty".into()));
        }
        Ok(Self { d, b })
    }

    /// A point.
    pub fn point() -> Self {
        Self { d: 0, b: vec![1] }
    }

    /// Complex projective space of dimension `d`.
    pub fn projective(d: usize) -> Self {
        let mut b = vec![0; 2 * d + 1];
        for k in 0..=d {
            b[2 * k] = 1;
        }
        Self { d, b }
    }

    /// `b_i`, zero outside the stored range (including negative `i`).
    pub fn get(&self, i: i64) -> u64 {
        usize::try_from(i)
            .ok()
            .and_then(|i| self.b.get(i).copied())
            .unwrap_or(0)
    }

    /// `sum b_i t^i`, a polynomial in `t`.
    pub fn t_polynomial(&self) -> QPolynomial {
        QPolynomial::new(self.b.iter().map(|&x| BigInt::from(x)).collect())
    }

    /// `sum b_{2k} q^k`; odd Betti numbers are dropped.
    pub fn q_polynomial(&self) -> QPolynomial {
        QPolynomial::new(self.b.iter().step_by(2).map(|&x| BigInt::from(x)).collect())
    }
}

/// `dim H_{2d+2r-4}` of the Grassmann bundle of 2-planes in a rank `r`
/// symplectic bundle over the base: `sum_j c_{r-2+j} b_{2d-2j}` where `c_k`
/// are the coefficients of the fiber polynomial, read from the fiber
/// polynomial itself.
pub fn top_betti_grass2_bundle(base: &BettiVector, r: usize) -> Result<BigInt> {
    let fiber = poincare_grass2(r)?;
    Ok(middle_pairing(base, &fiber, r - 2))
}

/// `dim H_{2d+2r-6}` of the isotropic bundle, equal to the Grassmann-bundle
/// value minus `b_{2d}`.
pub fn top_betti_isotropic_bundle(base: &BettiVector, r: usize) -> Result<BigInt> {
    check_even(r, 4)?;
    let grass = top_betti_grass2_bundle(base, r)?;
    Ok(grass - BigInt::from(base.get(2 * base.d as i64)))
}

fn middle_pairing(base: &BettiVector, fiber: &QPolynomial, start: usize) -> BigInt {
    let top = fiber.degree().unwrap_or(0);
    let d = base.d as i64;
    (start..=top).fold(BigInt::zero(), |acc, k| {
        let j = (k - start) as i64;
        acc + fiber.coeff(k) * BigInt::from(base.get(2 * d - 2 * j))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> QPolynomial {
        QPolynomial::from_ints(c)
    }

    #[test]
    fn degree_lists() {
        assert_eq!(degrees(GroupType::A, 2).unwrap(), vec![2]);
        assert_eq!(degrees(GroupType::C, 4).unwrap(), vec![2, 4]);
        assert_eq!(degrees(GroupType::C, 0).unwrap(), Vec::<usize>::new());
        assert_eq!(degrees(GroupType::A, 1).unwrap(), Vec::<usize>::new());
        assert_eq!(degrees(GroupType::C, 2).unwrap(), vec![2]);
        assert!(degrees(GroupType::C, 3).is_err());
        assert!("B".parse::<GroupType>().is_err());
        assert_eq!("A3".parse::<ExponentList>().unwrap(), ExponentList::sl(4));
        assert_eq!("C2".parse::<ExponentList>().unwrap(), ExponentList::sp(4).unwrap());
        assert!("G2".parse::<ExponentList>().is_err());
    }

    #[test]
    fn full_flags() {
        assert_eq!(poincare_full_flag(&[]), QPolynomial::one());
        assert_eq!(poincare_full_flag(&[ExponentList::sl(2)]), p(&[1, 1]));
        assert_eq!(poincare_full_flag(&[ExponentList::sl(3)]), p(&[1, 2, 2, 1]));
    }

    #[test]
    fn parabolic_quotients() {
        assert_eq!(
            poincare_parabolic_quotient(&[ExponentList::sl(2)], &[]).unwrap(),
            p(&[1, 1])
        );
        assert_eq!(
            poincare_parabolic_quotient(&[ExponentList::sl(4)], &[ExponentList::sl(2), ExponentList::sl(2)]).unwrap(),
            p(&[1, 1, 2, 1, 1])
        );
        assert_eq!(
            poincare_parabolic_quotient(
                &[ExponentList::sp(4).unwrap()],
                &[ExponentList::sl(2), ExponentList::sp(0).unwrap()]
            )
            .unwrap(),
            p(&[1, 1, 1, 1])
        );
        // sl3 flag polynomial is not divisible by the one of sp4
        assert_eq!(
            poincare_parabolic_quotient(&[ExponentList::sl(3)], &[ExponentList::sp(4).unwrap()]),
            Err(Error::NotDivisible)
        );
    }

    #[test]
    fn closed_forms() {
        assert_eq!(poincare_grass2(4).unwrap(), p(&[1, 1, 2, 1, 1]));
        assert_eq!(poincare_grass2(2).unwrap(), QPolynomial::one());
        assert_eq!(poincare_isotropic_grass2(4).unwrap(), p(&[1, 1, 1, 1]));
        assert_eq!(poincare_isotropic_grass2(6).unwrap(), p(&[1, 1, 2, 2, 2, 2, 1, 1]));
        assert!(poincare_grass2(3).is_err());
        assert!(poincare_grass2(0).is_err());
        assert!(poincare_isotropic_grass2(2).is_err());
        let z8 = poincare_isotropic_grass2(8).unwrap();
        let reversed = QPolynomial::new(z8.coeffs().iter().rev().cloned().collect());
        assert_eq!(reversed, z8);
    }

    #[test]
    fn bundles_and_top_betti() {
        let p1 = BettiVector::projective(1);
        let g4 = poincare_grass2(4).unwrap();
        let bundle = poincare_bundle(&p1.q_polynomial(), &g4);
        assert_eq!(bundle, p(&[1, 2, 3, 3, 2, 1]));
        assert_eq!(poincare_bundle(&QPolynomial::one(), &g4), g4);

        let point = BettiVector::point();
        assert_eq!(top_betti_grass2_bundle(&point, 4).unwrap(), BigInt::from(2));
        assert_eq!(top_betti_isotropic_bundle(&point, 4).unwrap(), BigInt::from(1));
        assert_eq!(top_betti_grass2_bundle(&p1, 4).unwrap(), BigInt::from(3));
        assert_eq!(top_betti_isotropic_bundle(&p1, 4).unwrap(), BigInt::from(2));
        // coefficient of q^{d + r - 2} in the bundle polynomial
        assert_eq!(bundle.coeff(1 + 4 - 2), BigInt::from(3));

        let empty = BettiVector::new(2, vec![0; 5]).unwrap();
        assert_eq!(top_betti_grass2_bundle(&empty, 6).unwrap(), BigInt::zero());
        assert!(BettiVector::new(0, vec![]).is_err());
        assert!(top_betti_isotropic_bundle(&point, 2).is_err());
    }

    #[test]
    fn point_base_reproduces_middle_coefficient() {
        for r in (2..=20).step_by(2) {
            let n = BigInt::from(r / 2);
            assert_eq!(top_betti_grass2_bundle(&BettiVector::point(), r).unwrap(), n);
        }
    }
}
