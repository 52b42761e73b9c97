use num_traits::Zero;
use serde::{Deserialize, Deserializer, Serialize};

use crate::error::{Error, Result};
use crate::exact::{Rational, RationalMatrix};

/// Linear subspace of `Q^n`, stored as the nonzero rows of its reduced row
/// echelon form, so equal subspaces have equal representations.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Subspace {
    ambient: usize,
    basis: RationalMatrix,
}

impl Subspace {
    /// Row span of `rows`; dependent rows are dropped.
    pub fn from_rows(ambient: usize, rows: &RationalMatrix) -> Result<Self> {
        if rows.cols() != ambient {
            return Err(Error::Shape(format!(
                "rows have {} columns, ambient dimension is {ambient}",
                rows.cols()
            )));
        }
        let (r, pivots) = rows.rref();
        let keep: Vec<usize> = (0..pivots.len()).collect();
        let all: Vec<usize> = (0..ambient).collect();
        Ok(Self {
            ambient,
            basis: r.select(&keep, &all),
        })
    }

    pub fn from_vectors(ambient: usize, vectors: Vec<Vec<Rational>>) -> Result<Self> {
        Self::from_rows(ambient, &RationalMatrix::from_rows(ambient, vectors)?)
    }

    pub fn zero(ambient: usize) -> Self {
        Self {
            ambient,
            basis: RationalMatrix::zeros(0, ambient),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Self {
            ambient,
            basis: RationalMatrix::identity(ambient),
        }
    }

    /// Span of the given coordinate vectors.
    pub fn coordinate(ambient: usize, axes: &[usize]) -> Self {
        let mut m = RationalMatrix::zeros(axes.len(), ambient);
        for (row, &a) in axes.iter().enumerate() {
            m.set(row, a, Rational::from_integer(1.into()));
        }
        Self::from_rows(ambient, &m).expect("coordinate rows have ambient width")
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &RationalMatrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Rational>> {
        self.basis.row_vecs()
    }

    /// Columns holding the leading 1 of each basis row.
    pub fn pivots(&self) -> Vec<usize> {
        (0..self.dim())
            .map(|i| {
                self.basis
                    .row(i)
                    .iter()
                    .position(|x| !x.is_zero())
                    .expect("basis rows are nonzero")
            })
            .collect()
    }

    fn check_same_ambient(&self, other: &Self) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::Shape(format!(
                "ambient dimensions {} and {} differ",
                self.ambient, other.ambient
            )));
        }
        Ok(())
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check_same_ambient(other)?;
        Self::from_rows(self.ambient, &self.basis.vstack(&other.basis)?)
    }

    /// `p ∩ K = 0`, decided by `rank [p; K] = dim p + dim K`.
    pub fn meets_trivially(&self, other: &Self) -> Result<bool> {
        self.check_same_ambient(other)?;
        let stacked = self.basis.vstack(&other.basis)?;
        Ok(stacked.rank() == self.dim() + other.dim())
    }

    pub fn contains_vector(&self, v: &[Rational]) -> bool {
        assert_eq!(v.len(), self.ambient);
        self.coordinates_of(v).is_some()
    }

    pub fn contains(&self, other: &Self) -> bool {
        self.ambient == other.ambient && other.basis_vectors().iter().all(|v| self.contains_vector(v))
    }

    /// Coefficients of `v` in the canonical basis, if `v` lies in the span.
    /// With an RREF basis these are the entries of `v` at the pivot columns.
    pub fn coordinates_of(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        let coords: Vec<Rational> = self.pivots().iter().map(|&p| v[p].clone()).collect();
        let mut rebuilt = vec![Rational::zero(); self.ambient];
        for (c, row) in coords.iter().zip(self.basis_vectors()) {
            for (slot, x) in rebuilt.iter_mut().zip(row) {
                *slot += c * x;
            }
        }
        (rebuilt == v).then_some(coords)
    }

    /// Image under the linear map `f` (applied to column vectors).
    pub fn image(&self, f: &RationalMatrix) -> Result<Self> {
        if f.cols() != self.ambient {
            return Err(Error::Shape(format!(
                "map with {} columns applied to subspace of Q^{}",
                f.cols(),
                self.ambient
            )));
        }
        let rows = self.basis.checked_mul(&f.transpose())?;
        Self::from_rows(f.rows(), &rows)
    }
}

#[derive(Deserialize)]
struct SubspaceJson {
    ambient: usize,
    basis: RationalMatrix,
}

impl<'de> Deserialize<'de> for Subspace {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = SubspaceJson::deserialize(d)?;
        Subspace::from_rows(raw.ambient, &raw.basis).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn canonical_representatives() {
        let plane = Subspace::from_rows(2, &RationalMatrix::from_ints(&[[1, 0], [0, 1]])).unwrap();
        assert_eq!(plane, Subspace::full(2));
        let line = Subspace::from_rows(2, &RationalMatrix::from_ints(&[[1, 1], [2, 2]])).unwrap();
        assert_eq!(line.dim(), 1);
        assert_eq!(line.basis(), &RationalMatrix::from_ints(&[[1, 1]]));
        let empty = Subspace::from_rows(3, &RationalMatrix::zeros(0, 3)).unwrap();
        assert_eq!(empty, Subspace::zero(3));
        let a = Subspace::from_rows(3, &RationalMatrix::from_ints(&[[1, 2, 0], [0, 1, 1]])).unwrap();
        let b = Subspace::from_rows(3, &RationalMatrix::from_ints(&[[1, 3, 1], [2, 5, 1]])).unwrap();
        assert_eq!(a, b);
        assert!(Subspace::from_rows(3, &RationalMatrix::zeros(1, 2)).is_err());
    }

    #[test]
    fn trivial_intersection() {
        let e1 = Subspace::coordinate(2, &[0]);
        let e2 = Subspace::coordinate(2, &[1]);
        assert!(e1.meets_trivially(&e2).unwrap());
        assert!(!e1.meets_trivially(&e1).unwrap());
        let p = Subspace::from_rows(3, &RationalMatrix::from_ints(&[[1, 0, 1]])).unwrap();
        assert!(p.meets_trivially(&Subspace::coordinate(3, &[2])).unwrap());
        assert!(e1.meets_trivially(&Subspace::zero(3)).is_err());
    }

    #[test]
    fn coordinates_and_containment() {
        let p = Subspace::from_rows(3, &RationalMatrix::from_ints(&[[1, 0, 2], [0, 1, -1]])).unwrap();
        assert_eq!(p.coordinates_of(&[rat(2), rat(3), rat(1)]), Some(vec![rat(2), rat(3)]));
        assert_eq!(p.coordinates_of(&[rat(0), rat(0), rat(1)]), None);
        assert!(Subspace::full(3).contains(&p));
        assert!(!p.contains(&Subspace::full(3)));
    }

    #[test]
    fn json_round_trip() {
        let p = Subspace::from_rows(3, &RationalMatrix::from_ints(&[[2, 0, 2]])).unwrap();
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(
            s,
            r#"{"ambient":3,"basis":{"rows":1,"cols":3,"entries":[["1","0","1"]]}}"#
        );
        assert_eq!(serde_json::from_str::<Subspace>(&s).unwrap(), p);
    }
}
