use num_traits::Zero;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exact::{format_rational, parse_rational, Rational, RationalMatrix, SkewMatrix};

/// The span `U` of linearly independent `N x N` skew matrices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewLinearSpace {
    n: usize,
    basis: Vec<SkewMatrix>,
}

impl SkewLinearSpace {
    pub fn new(n: usize, basis: Vec<SkewMatrix>) -> Result<Self> {
        if let Some(bad) = basis.iter().find(|s| s.n() != n) {
            return Err(Error::Shape(format!(
                "basis matrix of size {} in a space of size {n}",
                bad.n()
            )));
        }
        let width = n * n.saturating_sub(1) / 2;
        let rows = basis.iter().map(SkewMatrix::upper).collect();
        let stacked = RationalMatrix::from_rows(width, rows)?;
        if stacked.rank() != basis.len() {
            return Err(Error::DependentBasis);
        }
        Ok(Self { n, basis })
    }

    /// `N`.
    pub fn n(&self) -> usize {
        self.n
    }

    /// `m = dim U`.
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[SkewMatrix] {
        &self.basis
    }

    /// `sum_i coeffs[i] * basis[i]`.
    pub fn element_at(&self, coeffs: &[Rational]) -> Result<SkewMatrix> {
        if coeffs.len() != self.dim() {
            return Err(Error::Shape(format!(
                "{} coefficients for a space of dimension {}",
                coeffs.len(),
                self.dim()
            )));
        }
        let mut acc = SkewMatrix::zeros(self.n);
        for (c, b) in coeffs.iter().zip(&self.basis) {
            if !c.is_zero() {
                acc = acc.add(&b.scale(c))?;
            }
        }
        Ok(acc)
    }

    pub fn element_at_ints(&self, coeffs: &[i64]) -> Result<SkewMatrix> {
        let coeffs: Vec<Rational> = coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect();
        self.element_at(&coeffs)
    }
}

#[derive(Serialize, Deserialize)]
struct SpaceJson {
    #[serde(rename = "N")]
    n: usize,
    basis: Vec<Vec<String>>,
}

impl Serialize for SkewLinearSpace {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SpaceJson {
            n: self.n,
            basis: self
                .basis
                .iter()
                .map(|b| b.upper().iter().map(format_rational).collect())
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SkewLinearSpace {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = SpaceJson::deserialize(d)?;
        let basis = raw
            .basis
            .iter()
            .map(|upper| {
                let upper = upper.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>>>()?;
                SkewMatrix::from_upper(raw.n, &upper)
            })
            .collect::<Result<Vec<_>>>()
            .map_err(D::Error::custom)?;
        SkewLinearSpace::new(raw.n, basis).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn j(n: usize, a: usize, b: usize) -> SkewMatrix {
        SkewMatrix::elementary(n, a, b)
    }

    #[test]
    fn element_examples() {
        let u = SkewLinearSpace::new(4, vec![j(4, 0, 1), j(4, 2, 3)]).unwrap();
        assert!(u.element_at_ints(&[0, 0]).unwrap().is_zero());
        assert_eq!(u.element_at_ints(&[1, 0]).unwrap(), j(4, 0, 1));
        let sum = u.element_at_ints(&[1, 1]).unwrap();
        assert_eq!(sum, j(4, 0, 1).add(&j(4, 2, 3)).unwrap());
        assert_eq!(sum.rank(), 4);
        assert!(u.element_at_ints(&[1]).is_err());
    }

    #[test]
    fn rejects_dependent_or_mismatched() {
        assert_eq!(
            SkewLinearSpace::new(3, vec![j(3, 0, 1), j(3, 0, 1).scale(&Rational::from_integer(2.into()))]),
            Err(Error::DependentBasis)
        );
        assert!(SkewLinearSpace::new(3, vec![j(4, 0, 1)]).is_err());
        assert_eq!(SkewLinearSpace::new(3, vec![]).unwrap().dim(), 0);
    }

    #[test]
    fn json_format() {
        let u = SkewLinearSpace::new(3, vec![j(3, 0, 2)]).unwrap();
        let s = serde_json::to_string(&u).unwrap();
        assert_eq!(s, r#"{"N":3,"basis":[["0","1","0"]]}"#);
        assert_eq!(serde_json::from_str::<SkewLinearSpace>(&s).unwrap(), u);
        assert!(serde_json::from_str::<SkewLinearSpace>(r#"{"N":3,"basis":[["1","2"]]}"#).is_err());
    }
}
