use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exact::{format_rational, parse_rational, Rational};

/// A Lie algebra over the rationals given by structure constants
/// `[x_i, x_j] = sum_k c[i][j][k] x_k`. Antisymmetry is built in: only
/// `i < j` is ever supplied.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    name: String,
    basis: Vec<String>,
    c: Vec<Vec<Vec<Rational>>>,
}

/// First violated Jacobi instance: component `l` of
/// `[[x_i, x_j], x_k] + [[x_j, x_k], x_i] + [[x_k, x_i], x_j]` is `residual`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct JacobiFailure {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub l: usize,
    #[serde(serialize_with = "rational_string")]
    pub residual: Rational,
}

fn rational_string<S: Serializer>(x: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format_rational(x))
}

impl fmt::Display for JacobiFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Jacobi identity fails for basis triple ({}, {}, {}): component {} is {}",
            self.i,
            self.j,
            self.k,
            self.l,
            format_rational(&self.residual)
        )
    }
}

/// A single structure-constant entry `[x_i, x_j]` for `i < j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bracket {
    pub i: usize,
    pub j: usize,
    pub out: Vec<(usize, Rational)>,
}

impl LieAlgebra {
    /// Builds the algebra from brackets with `i < j`. Omitted pairs commute.
    /// The Jacobi identity is not checked here; see [`LieAlgebra::validate`].
    pub fn from_brackets(name: impl Into<String>, basis: Vec<String>, brackets: &[Bracket]) -> Result<Self> {
        let n = basis.len();
        let mut c = vec![vec![vec![Rational::zero(); n]; n]; n];
        let mut seen = vec![vec![false; n]; n];
        for b in brackets {
            if b.i >= b.j {
                return Err(Error::Parse(format!(
                    "bracket keys must satisfy i < j, got ({}, {})",
                    b.i, b.j
                )));
            }
            if b.j >= n {
                return Err(Error::Parse(format!(
                    "bracket index {} out of range for dimension {n}",
                    b.j
                )));
            }
            if seen[b.i][b.j] {
                return Err(Error::Parse(format!("bracket ({}, {}) given twice", b.i, b.j)));
            }
            seen[b.i][b.j] = true;
            for (k, v) in &b.out {
                if *k >= n {
                    return Err(Error::Parse(format!("output index {k} out of range for dimension {n}")));
                }
                c[b.i][b.j][*k] = v.clone();
                c[b.j][b.i][*k] = -v.clone();
            }
        }
        Ok(Self {
            name: name.into(),
            basis,
            c,
        })
    }

    /// Structure constants from a full table `c[i][j][k]`, which must be
    /// antisymmetric in `i, j`.
    pub fn from_table(name: impl Into<String>, basis: Vec<String>, c: Vec<Vec<Vec<Rational>>>) -> Result<Self> {
        let n = basis.len();
        if c.len() != n || c.iter().any(|row| row.len() != n || row.iter().any(|v| v.len() != n)) {
            return Err(Error::Shape(format!("structure constant table is not {n} x {n} x {n}")));
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if c[i][j][k] != -c[j][i][k].clone() {
                        return Err(Error::InvalidParameter(format!(
                            "structure constants not antisymmetric at ({i}, {j}, {k})"
                        )));
                    }
                }
            }
        }
        Ok(Self {
            name: name.into(),
            basis,
            c,
        })
    }

    pub fn abelian(n: usize) -> Self {
        let basis = (0..n).map(|i| format!("x{i}")).collect();
        Self::from_brackets(format!("abelian{n}"), basis, &[]).expect("no brackets")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// `N = dim g`.
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis
    }

    /// `c_ij^k`.
    pub fn constant(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.c[i][j][k]
    }

    /// Brackets `(i < j)` with nonzero output, in index order.
    pub fn brackets(&self) -> Vec<Bracket> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let terms: Vec<(usize, Rational)> = (0..n)
                    .filter(|&k| !self.c[i][j][k].is_zero())
                    .map(|k| (k, self.c[i][j][k].clone()))
                    .collect();
                if !terms.is_empty() {
                    out.push(Bracket { i, j, out: terms });
                }
            }
        }
        out
    }

    /// Copy with `c_ij^k` (and `c_ji^k`) replaced; `i < j`.
    pub fn with_constant(&self, i: usize, j: usize, k: usize, value: Rational) -> Self {
        assert!(i < j && j < self.dim() && k < self.dim());
        let mut out = self.clone();
        out.c[j][i][k] = -value.clone();
        out.c[i][j][k] = value;
        out
    }

    /// Bracket of two vectors given in basis coordinates.
    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let n = self.dim();
        let mut out = vec![Rational::zero(); n];
        for i in 0..n {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if y[j].is_zero() || i == j {
                    continue;
                }
                let xy = &x[i] * &y[j];
                for (k, slot) in out.iter_mut().enumerate() {
                    if !self.c[i][j][k].is_zero() {
                        *slot += &xy * &self.c[i][j][k];
                    }
                }
            }
        }
        out
    }

    /// Checks every Jacobi instance `i < j < k`, component by component.
    pub fn validate(&self) -> std::result::Result<(), JacobiFailure> {
        let n = self.dim();
        let c = &self.c;
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    for l in 0..n {
                        let mut residual = Rational::zero();
                        for m in 0..n {
                            residual += &c[i][j][m] * &c[m][k][l];
                            residual += &c[j][k][m] * &c[m][i][l];
                            residual += &c[k][i][m] * &c[m][j][l];
                        }
                        if !residual.is_zero() {
                            return Err(JacobiFailure { i, j, k, l, residual });
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Parses the JSON presentation without checking the Jacobi identity.
    pub fn from_json_unchecked(text: &str) -> Result<Self> {
        let raw: AlgebraJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        raw.into_algebra()
    }

    /// Parses the JSON presentation and rejects it unless the Jacobi identity
    /// holds.
    pub fn from_json(text: &str) -> Result<Self> {
        let alg = Self::from_json_unchecked(text)?;
        alg.validate().map_err(Error::Jacobi)?;
        Ok(alg)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&AlgebraJson::from(self)).expect("serialisable")
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BracketJson {
    i: usize,
    j: usize,
    out: BTreeMap<String, String>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct AlgebraJson {
    name: String,
    dim: usize,
    basis: Vec<String>,
    brackets: Vec<BracketJson>,
}

impl AlgebraJson {
    fn into_algebra(self) -> Result<LieAlgebra> {
        if self.basis.len() != self.dim {
            return Err(Error::Parse(format!(
                "dim is {} but {} basis names were given",
                self.dim,
                self.basis.len()
            )));
        }
        let brackets = self
            .brackets
            .into_iter()
            .map(|b| {
                let out = b
                    .out
                    .iter()
                    .map(|(k, v)| {
                        let k: usize = k
                            .parse()
                            .map_err(|_| Error::Parse(format!("output key {k:?} is not an index")))?;
                        Ok((k, parse_rational(v)?))
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(Bracket { i: b.i, j: b.j, out })
            })
            .collect::<Result<Vec<_>>>()?;
        LieAlgebra::from_brackets(self.name, self.basis, &brackets)
    }
}

impl From<&LieAlgebra> for AlgebraJson {
    fn from(alg: &LieAlgebra) -> Self {
        AlgebraJson {
            name: alg.name.clone(),
            dim: alg.dim(),
            basis: alg.basis.clone(),
            brackets: alg
                .brackets()
                .into_iter()
                .map(|b| BracketJson {
                    i: b.i,
                    j: b.j,
                    out: b.out.iter().map(|(k, v)| (k.to_string(), format_rational(v))).collect(),
                })
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn heisenberg() -> LieAlgebra {
        LieAlgebra::from_brackets(
            "heisenberg3",
            vec!["x".into(), "y".into(), "z".into()],
            &[Bracket {
                i: 0,
                j: 1,
                out: vec![(2, rat(1))],
            }],
        )
        .unwrap()
    }

    #[test]
    fn bracket_and_antisymmetry() {
        let h = heisenberg();
        assert_eq!(h.constant(1, 0, 2), &rat(-1));
        let x = vec![rat(1), rat(0), rat(0)];
        let y = vec![rat(0), rat(1), rat(0)];
        assert_eq!(h.bracket(&x, &y), vec![rat(0), rat(0), rat(1)]);
        assert_eq!(h.bracket(&y, &x), vec![rat(0), rat(0), rat(-1)]);
        assert!(h.validate().is_ok());
        assert!(LieAlgebra::abelian(4).validate().is_ok());
    }

    #[test]
    fn rejects_malformed_brackets() {
        let names = || vec!["a".to_string(), "b".to_string()];
        let swapped = Bracket {
            i: 1,
            j: 0,
            out: vec![(0, rat(1))],
        };
        assert!(LieAlgebra::from_brackets("x", names(), &[swapped]).is_err());
        let ok = Bracket {
            i: 0,
            j: 1,
            out: vec![(0, rat(1))],
        };
        assert!(LieAlgebra::from_brackets("x", names(), &[ok.clone(), ok]).is_err());
        let out_of_range = Bracket {
            i: 0,
            j: 1,
            out: vec![(5, rat(1))],
        };
        assert!(LieAlgebra::from_brackets("x", names(), &[out_of_range]).is_err());
    }

    #[test]
    fn json_round_trip_and_jacobi_rejection() {
        let h = heisenberg();
        let text = h.to_json();
        assert_eq!(LieAlgebra::from_json(&text).unwrap(), h);

        // adding [y,z] = y gives J(x,y,z) = [y,x] = -z
        let bad = h.with_constant(1, 2, 1, rat(1));
        assert_eq!(
            bad.validate().unwrap_err(),
            JacobiFailure {
                i: 0,
                j: 1,
                k: 2,
                l: 2,
                residual: rat(-1)
            }
        );
        let err = LieAlgebra::from_json(&bad.to_json()).unwrap_err();
        assert!(matches!(err, Error::Jacobi(_)));
        assert!(LieAlgebra::from_json_unchecked(&bad.to_json()).is_ok());

        let dup = r#"{"name":"t","dim":2,"basis":["a","b"],"brackets":[{"i":1,"j":0,"out":{"0":"1"}}]}"#;
        assert!(matches!(LieAlgebra::from_json(dup), Err(Error::Parse(_))));
        let wrong_dim = r#"{"name":"t","dim":3,"basis":["a","b"],"brackets":[]}"#;
        assert!(LieAlgebra::from_json(wrong_dim).is_err());
    }
}
