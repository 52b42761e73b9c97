//! Built-in algebras with their expected coadjoint data.

use serde::Serialize;

use super::{Bracket, LieAlgebra};
use crate::exact::{rat, Rational, RationalMatrix};

/// A catalog algebra and the values the sampling routines must reproduce.
#[derive(Debug, Clone, Serialize)]
pub struct CatalogEntry {
    #[serde(skip)]
    pub algebra: LieAlgebra,
    pub name: &'static str,
    /// Minimal orbit dimension over nonzero covectors.
    pub min_orbit: usize,
    /// Orbit dimensions that occur in `g*`.
    pub orbit_dims: Vec<usize>,
    /// `min_orbit` equals `2 floor((2N + 1) / 6)`.
    pub tight: bool,
    /// Dimension of `{lambda : dim G.lambda <= min_orbit}` when `min_orbit > 0`,
    /// from the classification of coadjoint orbits.
    pub stratum_dimension: Option<usize>,
}

fn names(list: &[&str]) -> Vec<String> {
    list.iter().map(|s| s.to_string()).collect()
}

fn br(i: usize, j: usize, out: &[(usize, i64)]) -> Bracket {
    Bracket {
        i,
        j,
        out: out.iter().map(|&(k, v)| (k, rat(v))).collect(),
    }
}

pub fn abelian3() -> LieAlgebra {
    LieAlgebra::abelian(3)
}

/// `[x, y] = z`.
pub fn heisenberg3() -> LieAlgebra {
    LieAlgebra::from_brackets("heisenberg3", names(&["x", "y", "z"]), &[br(0, 1, &[(2, 1)])]).expect("valid")
}

/// `[e1, e2] = e1`.
pub fn affine_line() -> LieAlgebra {
    LieAlgebra::from_brackets("affine-line", names(&["e1", "e2"]), &[br(0, 1, &[(0, 1)])]).expect("valid")
}

/// Basis `e, h, f` with `[h, e] = 2e`, `[h, f] = -2f`, `[e, f] = h`.
pub fn sl2() -> LieAlgebra {
    LieAlgebra::from_brackets(
        "sl2",
        names(&["e", "h", "f"]),
        &[br(0, 1, &[(0, -2)]), br(0, 2, &[(1, 1)]), br(1, 2, &[(2, -2)])],
    )
    .expect("valid")
}

/// `[x, y] = z`, `[y, z] = x`, `[z, x] = y`.
pub fn so3() -> LieAlgebra {
    LieAlgebra::from_brackets(
        "so3",
        names(&["x", "y", "z"]),
        &[br(0, 1, &[(2, 1)]), br(0, 2, &[(1, -1)]), br(1, 2, &[(0, 1)])],
    )
    .expect("valid")
}

/// Two commuting copies of `sl2`, basis `e1, h1, f1, e2, h2, f2`.
pub fn sl2_x_sl2() -> LieAlgebra {
    let one = sl2().brackets();
    let mut all = one.clone();
    all.extend(one.into_iter().map(|b| Bracket {
        i: b.i + 3,
        j: b.j + 3,
        out: b.out.into_iter().map(|(k, v)| (k + 3, v)).collect(),
    }));
    LieAlgebra::from_brackets("sl2xsl2", names(&["e1", "h1", "f1", "e2", "h2", "f2"]), &all).expect("valid")
}

/// Structure constants of the span of `mats` under the commutator, which
/// must be closed.
pub fn from_matrix_basis(name: &str, basis: Vec<String>, mats: &[RationalMatrix]) -> LieAlgebra {
    let n = mats.len();
    let size = mats[0].rows();
    // column t of `flat` is mats[t] read row by row
    let mut flat = RationalMatrix::zeros(size * size, n);
    for (t, m) in mats.iter().enumerate() {
        for (idx, v) in m.entries().iter().enumerate() {
            flat.set(idx, t, v.clone());
        }
    }
    let mut c = vec![vec![vec![Rational::from_integer(0.into()); n]; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let comm = &(&mats[i] * &mats[j]) - &(&mats[j] * &mats[i]);
            let coords = flat.solve(comm.entries()).expect("basis closed under the commutator");
            for (k, v) in coords.into_iter().enumerate() {
                c[j][i][k] = -v.clone();
                c[i][j][k] = v;
            }
        }
    }
    LieAlgebra::from_table(name, basis, c).expect("commutator is antisymmetric")
}

fn unit(size: usize, a: usize, b: usize) -> RationalMatrix {
    let mut m = RationalMatrix::zeros(size, size);
    m.set(a, b, rat(1));
    m
}

/// Basis `E12, E13, E21, E23, E31, E32, H1 = E11 - E22, H2 = E22 - E33`.
pub fn sl3() -> LieAlgebra {
    let mut mats = Vec::new();
    let mut labels = Vec::new();
    for a in 0..3 {
        for b in 0..3 {
            if a != b {
                mats.push(unit(3, a, b));
                labels.push(format!("E{}{}", a + 1, b + 1));
            }
        }
    }
    mats.push(&unit(3, 0, 0) - &unit(3, 1, 1));
    mats.push(&unit(3, 1, 1) - &unit(3, 2, 2));
    labels.push("H1".into());
    labels.push("H2".into());
    from_matrix_basis("sl3", labels, &mats)
}

/// Matrices `[[A, B], [C, -A^T]]` with `B, C` symmetric 2x2, i.e. the Lie
/// algebra of the form `[[0, I], [-I, 0]]`. Basis: the four `A = E_ab`, then
/// `B = E_11, E_22, E_12 + E_21`, then the same for `C`.
pub fn sp4() -> LieAlgebra {
    let mut mats = Vec::new();
    let mut labels = Vec::new();
    for a in 0..2 {
        for b in 0..2 {
            mats.push(&unit(4, a, b) - &unit(4, b + 2, a + 2));
            labels.push(format!("A{}{}", a + 1, b + 1));
        }
    }
    for (block, off_r, off_c) in [("B", 0, 2), ("C", 2, 0)] {
        mats.push(unit(4, off_r, off_c));
        mats.push(unit(4, off_r + 1, off_c + 1));
        mats.push(&unit(4, off_r, off_c + 1) + &unit(4, off_r + 1, off_c));
        labels.extend([format!("{block}11"), format!("{block}22"), format!("{block}12")]);
    }
    from_matrix_basis("sp4", labels, &mats)
}

pub fn catalog() -> Vec<CatalogEntry> {
    let entry = |algebra: LieAlgebra,
                 name: &'static str,
                 min_orbit: usize,
                 orbit_dims: &[usize],
                 tight: bool,
                 stratum_dimension: Option<usize>| CatalogEntry {
        algebra,
        name,
        min_orbit,
        orbit_dims: orbit_dims.to_vec(),
        tight,
        stratum_dimension,
    };
    vec![
        entry(abelian3(), "abelian3", 0, &[0], false, None),
        entry(heisenberg3(), "heisenberg3", 0, &[0, 2], false, None),
        entry(affine_line(), "affine-line", 0, &[0, 2], true, None),
        // every nonzero covector of a 3-dimensional simple algebra has a 2-dimensional orbit
        entry(sl2(), "sl2", 2, &[0, 2], true, Some(3)),
        entry(so3(), "so3", 2, &[0, 2], true, Some(3)),
        // covectors vanishing on one factor
        entry(sl2_x_sl2(), "sl2xsl2", 2, &[0, 2, 4], false, Some(3)),
        // closure of the 4-dimensional orbits: a one-parameter family of
        // semisimple orbits diag(a, a, -2a) together with the minimal nilpotent orbit
        entry(sl3(), "sl3", 4, &[0, 4, 6], true, Some(5)),
        // closure of the minimal nilpotent orbit
        entry(sp4(), "sp4", 4, &[0, 4, 6, 8], false, Some(4)),
    ]
}

/// Catalog algebra by name; `abelianN` gives the abelian algebra of any
/// dimension.
pub fn lookup(name: &str) -> Option<LieAlgebra> {
    if let Some(e) = catalog().into_iter().find(|e| e.name == name) {
        return Some(e.algebra);
    }
    let n: usize = name.strip_prefix("abelian")?.parse().ok()?;
    Some(LieAlgebra::abelian(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_algebras_are_lie_algebras() {
        for e in catalog() {
            assert!(e.algebra.validate().is_ok(), "{}", e.name);
            assert_eq!(e.algebra.name(), e.name);
        }
    }

    #[test]
    fn dimensions() {
        let dims: Vec<(&str, usize)> = catalog().iter().map(|e| (e.name, e.algebra.dim())).collect();
        assert_eq!(
            dims,
            vec![
                ("abelian3", 3),
                ("heisenberg3", 3),
                ("affine-line", 2),
                ("sl2", 3),
                ("so3", 3),
                ("sl2xsl2", 6),
                ("sl3", 8),
                ("sp4", 10)
            ]
        );
    }

    #[test]
    fn matrix_sl2_matches_hand_written() {
        let mats = [unit(2, 0, 1), &unit(2, 0, 0) - &unit(2, 1, 1), unit(2, 1, 0)];
        let from_mats = from_matrix_basis("sl2", names(&["e", "h", "f"]), &mats);
        assert_eq!(from_mats, sl2());
    }

    #[test]
    fn lookup_by_name() {
        assert_eq!(lookup("sl3").unwrap().dim(), 8);
        assert_eq!(lookup("abelian5").unwrap().dim(), 5);
        assert!(lookup("e8").is_none());
    }
}
