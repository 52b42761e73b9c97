use num_traits::{One, Zero};

use super::{pfaffian_with, Rational, RationalMatrix};
use crate::error::{Error, Result};

/// Square rational matrix with `S[i][j] = -S[j][i]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SkewMatrix {
    inner: RationalMatrix,
}

impl SkewMatrix {
    pub fn new(m: RationalMatrix) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::Shape(format!("{}x{} matrix is not square", m.rows(), m.cols())));
        }
        let n = m.rows();
        for i in 0..n {
            for j in i..n {
                if *m.get(i, j) != -m.get(j, i).clone() {
                    return Err(Error::NotSkew);
                }
            }
        }
        Ok(Self { inner: m })
    }

    pub fn zeros(n: usize) -> Self {
        Self {
            inner: RationalMatrix::zeros(n, n),
        }
    }

    /// From the strict upper triangle listed row by row.
    pub fn from_upper(n: usize, upper: &[Rational]) -> Result<Self> {
        let expected = n * n.saturating_sub(1) / 2;
        if upper.len() != expected {
            return Err(Error::Shape(format!(
                "{} upper-triangle entries for n = {n}, expected {expected}",
                upper.len()
            )));
        }
        let mut m = RationalMatrix::zeros(n, n);
        let mut it = upper.iter();
        for i in 0..n {
            for j in i + 1..n {
                let v = it.next().expect("length checked").clone();
                m.set(j, i, -v.clone());
                m.set(i, j, v);
            }
        }
        Ok(Self { inner: m })
    }

    pub fn from_upper_ints(n: usize, upper: &[i64]) -> Result<Self> {
        let upper: Vec<Rational> = upper.iter().map(|&x| Rational::from_integer(x.into())).collect();
        Self::from_upper(n, &upper)
    }

    /// `E_ab - E_ba`.
    pub fn elementary(n: usize, a: usize, b: usize) -> Self {
        assert!(a < n && b < n && a != b);
        let mut m = RationalMatrix::zeros(n, n);
        m.set(a, b, Rational::one());
        m.set(b, a, -Rational::one());
        Self { inner: m }
    }

    /// Block-diagonal form with blocks `[[0, 1], [-1, 0]]` on `Q^r`, `r` even.
    pub fn standard_symplectic(r: usize) -> Result<Self> {
        if r % 2 == 1 {
            return Err(Error::OddDimension(r));
        }
        let mut m = RationalMatrix::zeros(r, r);
        for k in 0..r / 2 {
            m.set(2 * k, 2 * k + 1, Rational::one());
            m.set(2 * k + 1, 2 * k, -Rational::one());
        }
        Ok(Self { inner: m })
    }

    pub fn n(&self) -> usize {
        self.inner.rows()
    }

    pub fn matrix(&self) -> &RationalMatrix {
        &self.inner
    }

    pub fn into_matrix(self) -> RationalMatrix {
        self.inner
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        self.inner.get(i, j)
    }

    pub fn upper(&self) -> Vec<Rational> {
        let n = self.n();
        let mut out = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        for i in 0..n {
            for j in i + 1..n {
                out.push(self.get(i, j).clone());
            }
        }
        out
    }

    pub fn rank(&self) -> usize {
        self.inner.rank()
    }

    pub fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    /// `x^T S y`.
    pub fn pair(&self, x: &[Rational], y: &[Rational]) -> Rational {
        let sy = self.inner.mul_vec(y);
        x.iter().zip(&sy).fold(Rational::zero(), |acc, (a, b)| acc + a * b)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self {
            inner: self.inner.scale(c),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        Ok(Self {
            inner: self.inner.checked_add(&other.inner)?,
        })
    }

    /// Principal submatrix on `indices`.
    pub fn principal(&self, indices: &[usize]) -> Self {
        Self {
            inner: self.inner.select(indices, indices),
        }
    }

    /// Congruence `g^T S g`.
    pub fn congruent(&self, g: &RationalMatrix) -> Result<Self> {
        let t = g.transpose().checked_mul(&self.inner)?.checked_mul(g)?;
        Ok(Self { inner: t })
    }

    pub fn pfaffian(&self) -> Result<Rational> {
        let n = self.n();
        if n % 2 == 1 {
            return Err(Error::OddDimension(n));
        }
        if n > 64 {
            return Err(Error::InvalidParameter(format!("pfaffian expansion for n = {n} > 64")));
        }
        Ok(pfaffian_with(n, |i, j| self.get(i, j).clone()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn rank4_example() -> SkewMatrix {
        let mut m = SkewMatrix::elementary(5, 0, 1).into_matrix();
        m.set(2, 3, rat(1));
        m.set(3, 2, rat(-1));
        SkewMatrix::new(m).unwrap()
    }

    #[test]
    fn rejects_non_skew() {
        assert_eq!(SkewMatrix::new(RationalMatrix::identity(2)), Err(Error::NotSkew));
        assert!(matches!(
            SkewMatrix::new(RationalMatrix::zeros(2, 3)),
            Err(Error::Shape(_))
        ));
        assert!(SkewMatrix::from_upper_ints(3, &[1, 2]).is_err());
    }

    #[test]
    fn rank_examples() {
        assert_eq!(SkewMatrix::zeros(4).rank(), 0);
        assert_eq!(SkewMatrix::standard_symplectic(4).unwrap().rank(), 4);
        assert_eq!(rank4_example().rank(), 4);
    }

    #[test]
    fn kernel_of_rank4_example_is_e5() {
        let k = rank4_example().matrix().kernel();
        assert_eq!(k.basis(), &RationalMatrix::from_ints(&[[0, 0, 0, 0, 1]]));
    }

    #[test]
    fn pfaffian_examples() {
        let a = rat(7);
        let s = SkewMatrix::from_upper(2, std::slice::from_ref(&a)).unwrap();
        assert_eq!(s.pfaffian().unwrap(), a);
        assert_eq!(SkewMatrix::standard_symplectic(4).unwrap().pfaffian().unwrap(), rat(1));
        assert_eq!(SkewMatrix::zeros(3).pfaffian(), Err(Error::OddDimension(3)));
        assert_eq!(SkewMatrix::zeros(0).pfaffian().unwrap(), rat(1));
        // a12 a34 - a13 a24 + a14 a23
        let s = SkewMatrix::from_upper_ints(4, &[1, 2, 3, 4, 5, 6]).unwrap();
        assert_eq!(s.pfaffian().unwrap(), rat(6 - 2 * 5 + 3 * 4));
    }

    #[test]
    fn upper_round_trip() {
        let s = SkewMatrix::from_upper_ints(4, &[1, -2, 3, 0, 5, -6]).unwrap();
        let back = SkewMatrix::from_upper(4, &s.upper()).unwrap();
        assert_eq!(s, back);
    }
}
