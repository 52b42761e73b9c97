//! Conformal symplectic group `GSp_r`: matrices `g` with `g^T J g = tau(g) J`.

use num_traits::Zero;
use rand::Rng;

use super::{Rational, RationalMatrix, SkewMatrix};
use crate::error::{Error, Result};
use crate::rng::{nonzero_int_vector, nonzero_small_int, nonzero_small_rational, stream_rng};

/// The factor `tau` with `g^T J g = tau J`, or `None` when `g` does not
/// preserve `J` up to scale.
pub fn conformal_factor(g: &RationalMatrix, j: &SkewMatrix) -> Result<Option<Rational>> {
    let n = j.n();
    if !g.is_square() || g.rows() != n {
        return Err(Error::Shape(format!(
            "g is {}x{}, form has size {n}",
            g.rows(),
            g.cols()
        )));
    }
    if n % 2 == 1 {
        return Err(Error::OddDimension(n));
    }
    if j.rank() != n {
        return Err(Error::InvalidParameter("form must be nondegenerate".into()));
    }
    let pulled = j.congruent(g)?;
    // any nonzero entry of J fixes the candidate factor
    let (a, b) = (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .find(|&(a, b)| !j.get(a, b).is_zero())
        .expect("nondegenerate form of positive size has a nonzero entry");
    let tau = pulled.get(a, b) / j.get(a, b);
    if pulled == j.scale(&tau) {
        Ok(Some(tau))
    } else {
        Ok(None)
    }
}

/// Symplectic transvection `v -> v + c * J(v, u) * u`, i.e. `I + c u (J u)^T`.
pub fn transvection(j: &SkewMatrix, u: &[Rational], c: &Rational) -> RationalMatrix {
    let n = j.n();
    assert_eq!(u.len(), n);
    let ju = j.matrix().mul_vec(u);
    let mut t = RationalMatrix::identity(n);
    for a in 0..n {
        if u[a].is_zero() {
            continue;
        }
        for b in 0..n {
            if !ju[b].is_zero() {
                let v = t.get(a, b) + c * &u[a] * &ju[b];
                t.set(a, b, v);
            }
        }
    }
    t
}

/// `scalar * T_k * ... * T_1` for the given transvections `(u, c)` with
/// respect to the standard form on `Q^r`.
pub fn conformal_symplectic_product(
    r: usize,
    transvections: &[(Vec<Rational>, Rational)],
    scalar: &Rational,
) -> Result<RationalMatrix> {
    let j = SkewMatrix::standard_symplectic(r)?;
    let mut g = RationalMatrix::identity(r);
    for (u, c) in transvections {
        if u.len() != r {
            return Err(Error::Shape(format!("transvection vector of length {}", u.len())));
        }
        g = &transvection(&j, u, c) * &g;
    }
    Ok(g.scale(scalar))
}

/// A random element of `GSp_r` together with the factors it was built from.
#[derive(Debug, Clone)]
pub struct ConformalSample {
    pub g: RationalMatrix,
    /// Overall scalar multiple `c` (contributes `c^2` to `tau`).
    pub scalar: Rational,
    /// Similitude `diag(1, s, 1, s, ...)` inserted among the transvections
    /// (contributes `s` to `tau`).
    pub similitude: Rational,
}

impl ConformalSample {
    pub fn expected_factor(&self) -> Rational {
        &self.scalar * &self.scalar * &self.similitude
    }
}

/// Deterministic product of `steps` random transvections (integer parameters
/// in `[-3, 3]`), one similitude `diag(1, s, 1, s, ...)` at a random position,
/// and a random nonzero scalar. `s` and the scalar are nonzero rationals with
/// numerator and denominator bounded by 3.
pub fn random_conformal_symplectic(r: usize, seed: u64, steps: usize) -> Result<ConformalSample> {
    if r < 2 || r % 2 == 1 {
        return Err(Error::InvalidParameter(format!("r must be even and >= 2, got {r}")));
    }
    let j = SkewMatrix::standard_symplectic(r)?;
    let mut rng = stream_rng(seed, 0);
    let scalar = nonzero_small_rational(&mut rng, 3);
    let similitude = nonzero_small_rational(&mut rng, 3);
    let insert_at = rng.gen_range(0..=steps);
    let mut g = RationalMatrix::identity(r);
    for step in 0..=steps {
        if step == insert_at {
            let mut d = RationalMatrix::identity(r);
            for k in 0..r / 2 {
                d.set(2 * k + 1, 2 * k + 1, similitude.clone());
            }
            g = &d * &g;
        }
        if step < steps {
            let u: Vec<Rational> = nonzero_int_vector(&mut rng, r, 3)
                .into_iter()
                .map(|x| Rational::from_integer(x.into()))
                .collect();
            let c = Rational::from_integer(nonzero_small_int(&mut rng, 3).into());
            g = &transvection(&j, &u, &c) * &g;
        }
    }
    Ok(ConformalSample {
        g: g.scale(&scalar),
        scalar,
        similitude,
    })
}
