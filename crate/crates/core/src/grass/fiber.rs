use num_traits::One;

use super::Subspace;
use crate::error::{Error, Result};
use crate::exact::{Rational, RationalMatrix, SkewMatrix};

fn check_surjective(rho: &RationalMatrix) -> Result<()> {
    if rho.rank() != rho.rows() {
        return Err(Error::InvalidParameter(format!(
            "map Q^{} -> Q^{} is not surjective",
            rho.cols(),
            rho.rows()
        )));
    }
    Ok(())
}

/// `rho(p)`, required to have the same dimension as `p`.
pub fn project_from(p: &Subspace, rho: &RationalMatrix) -> Result<Subspace> {
    check_surjective(rho)?;
    let image = p.image(rho)?;
    if image.dim() != p.dim() {
        return Err(Error::DegenerateProjection {
            expected: p.dim(),
            got: image.dim(),
        });
    }
    Ok(image)
}

/// `p + K` for `p` meeting `K` trivially.
pub fn lift_plus_k(p: &Subspace, k: &Subspace) -> Result<Subspace> {
    if !p.meets_trivially(k)? {
        return Err(Error::Overlap);
    }
    p.sum(k)
}

/// `b1^T J b2` on the canonical ordered basis of a 2-plane. Only whether it
/// vanishes is independent of the basis.
pub fn restrict_skew_form(j: &SkewMatrix, p: &Subspace) -> Result<Rational> {
    if p.dim() != 2 {
        return Err(Error::WrongDimension {
            expected: 2,
            got: p.dim(),
        });
    }
    if p.ambient() != j.n() {
        return Err(Error::Shape(format!(
            "plane in Q^{} but form on Q^{}",
            p.ambient(),
            j.n()
        )));
    }
    let b = p.basis_vectors();
    Ok(j.pair(&b[0], &b[1]))
}

/// Quotient map `Q^N -> Q^N / K`, identifying the quotient with the span of
/// the coordinates that are not pivots of `K`'s canonical basis.
pub fn quotient_map(k: &Subspace) -> RationalMatrix {
    let n = k.ambient();
    let pivots = k.pivots();
    let complement: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let mut rho = RationalMatrix::zeros(complement.len(), n);
    for (row, &c) in complement.iter().enumerate() {
        rho.set(row, c, Rational::one());
    }
    // v - sum_i v[pivot_i] k_i vanishes at the pivots
    for (i, &p) in pivots.iter().enumerate() {
        for (row, &c) in complement.iter().enumerate() {
            rho.set(row, p, -k.basis().get(i, c).clone());
        }
    }
    rho
}

/// A degenerate skew form pushed down to `V / K`, `K` its radical.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientForm {
    pub radical: Subspace,
    /// Coordinates spanning the complement identified with `V / K`.
    pub complement: Vec<usize>,
    pub rho: RationalMatrix,
    pub form: SkewMatrix,
}

/// Radical `K`, quotient map `rho` and the nondegenerate form induced on
/// `W = V / K`.
pub fn induced_form_on_quotient(j: &SkewMatrix) -> QuotientForm {
    let radical = j.matrix().kernel();
    let pivots = radical.pivots();
    let complement: Vec<usize> = (0..j.n()).filter(|c| !pivots.contains(c)).collect();
    let rho = quotient_map(&radical);
    let form = j.principal(&complement);
    QuotientForm {
        radical,
        complement,
        rho,
        form,
    }
}

/// Rank `s (N - r)` of the affine bundle `G_s(V)_K -> G_s(W)`.
pub fn fiber_dimension_of_projection(n: usize, r: usize, s: usize) -> Result<usize> {
    if s > r || r > n {
        return Err(Error::InvalidParameter(format!(
            "need s <= r <= N, got s = {s}, r = {r}, N = {n}"
        )));
    }
    Ok(s * (n - r))
}

/// A right inverse `sigma` (N x r) of a surjection `rho`, supported on the
/// pivot columns of `rho`.
pub fn canonical_section(rho: &RationalMatrix) -> Result<RationalMatrix> {
    check_surjective(rho)?;
    let (_, pivots) = rho.rref();
    let rows: Vec<usize> = (0..rho.rows()).collect();
    let square = rho.select(&rows, &pivots);
    let inv = square.inverse()?;
    let mut sigma = RationalMatrix::zeros(rho.cols(), rho.rows());
    for (i, &p) in pivots.iter().enumerate() {
        for c in 0..rho.rows() {
            sigma.set(p, c, inv.get(i, c).clone());
        }
    }
    Ok(sigma)
}

fn check_fiber_data(q: &Subspace, rho: &RationalMatrix, k: &Subspace) -> Result<()> {
    check_surjective(rho)?;
    if q.ambient() != rho.rows() || k.ambient() != rho.cols() {
        return Err(Error::Shape("fiber data dimensions are inconsistent".into()));
    }
    if rho.kernel() != *k {
        return Err(Error::InvalidParameter("K must be the kernel of rho".into()));
    }
    Ok(())
}

/// Coordinates `h` (dim q x dim K) of a point `p` of the fiber over `q`:
/// the rows of `p`'s basis are `sigma(b_i) + sum_j h_ij k_j` where `b_i` is the
/// canonical basis of `q`, `sigma` the canonical section and `k_j` the
/// canonical basis of `K`.
pub fn fiber_membership_witness(
    q: &Subspace,
    p: &Subspace,
    rho: &RationalMatrix,
    k: &Subspace,
) -> Result<RationalMatrix> {
    check_fiber_data(q, rho, k)?;
    if p.ambient() != rho.cols() || p.dim() != q.dim() {
        return Err(Error::NotInFiber);
    }
    match project_from(p, rho) {
        Ok(image) if image == *q => {}
        Ok(_) | Err(Error::DegenerateProjection { .. }) => return Err(Error::NotInFiber),
        Err(e) => return Err(e),
    }
    let sigma = canonical_section(rho)?;
    let s = q.dim();
    // rows of P rho^T are D B for an invertible D; D^{-1} P lies over B
    let projected = p.basis().checked_mul(&rho.transpose())?;
    let coords = (0..s)
        .map(|i| q.coordinates_of(projected.row(i)).expect("image of p is q"))
        .collect();
    let d = RationalMatrix::from_rows(s, coords)?;
    let over = d.inverse()?.checked_mul(p.basis())?;
    let lifts = q.basis().checked_mul(&sigma.transpose())?;
    let diff = over.checked_sub(&lifts)?;
    let mut h = RationalMatrix::zeros(s, k.dim());
    for i in 0..s {
        let coords = k
            .coordinates_of(diff.row(i))
            .expect("difference of two lifts lies in the kernel");
        for (j, x) in coords.into_iter().enumerate() {
            h.set(i, j, x);
        }
    }
    Ok(h)
}

/// The point of the fiber over `q` with coordinates `h`; inverse of
/// [`fiber_membership_witness`].
pub fn graph_of(q: &Subspace, h: &RationalMatrix, rho: &RationalMatrix, k: &Subspace) -> Result<Subspace> {
    check_fiber_data(q, rho, k)?;
    if h.rows() != q.dim() || h.cols() != k.dim() {
        return Err(Error::Shape(format!(
            "parameter is {}x{}, expected {}x{}",
            h.rows(),
            h.cols(),
            q.dim(),
            k.dim()
        )));
    }
    let sigma = canonical_section(rho)?;
    let lifts = q.basis().checked_mul(&sigma.transpose())?;
    let rows = lifts.checked_add(&h.checked_mul(k.basis())?)?;
    Subspace::from_rows(rho.cols(), &rows)
}
