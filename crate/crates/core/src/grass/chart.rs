//! Transition data of compatible trivialisations of `0 -> K -> V -> W -> 0`
//! and their action on sections of `V -> W`.

use crate::error::{Error, Result};
use crate::exact::RationalMatrix;

/// Block transition `beta = [[alpha, M], [0, gamma]]` with `alpha` acting on
/// `K` (size `N - r`) and `gamma` on `W` (size `r`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChartBlock {
    pub alpha: RationalMatrix,
    pub gamma: RationalMatrix,
    pub m: RationalMatrix,
}

impl ChartBlock {
    pub fn new(alpha: RationalMatrix, gamma: RationalMatrix, m: RationalMatrix) -> Result<Self> {
        if !alpha.is_square() || !gamma.is_square() {
            return Err(Error::Shape("alpha and gamma must be square".into()));
        }
        if m.rows() != alpha.rows() || m.cols() != gamma.rows() {
            return Err(Error::Shape(format!(
                "M is {}x{}, expected {}x{}",
                m.rows(),
                m.cols(),
                alpha.rows(),
                gamma.rows()
            )));
        }
        if alpha.rank() != alpha.rows() || gamma.rank() != gamma.rows() {
            return Err(Error::Singular);
        }
        Ok(Self { alpha, gamma, m })
    }

    /// `(dim K, dim W)`.
    pub fn sizes(&self) -> (usize, usize) {
        (self.alpha.rows(), self.gamma.rows())
    }

    /// The assembled `N x N` matrix `beta`.
    pub fn beta(&self) -> RationalMatrix {
        let (k, r) = self.sizes();
        let n = k + r;
        let mut b = RationalMatrix::zeros(n, n);
        for i in 0..k {
            for j in 0..k {
                b.set(i, j, self.alpha.get(i, j).clone());
            }
            for j in 0..r {
                b.set(i, k + j, self.m.get(i, j).clone());
            }
        }
        for i in 0..r {
            for j in 0..r {
                b.set(k + i, k + j, self.gamma.get(i, j).clone());
            }
        }
        b
    }

    /// `self after first`: the block whose `beta` is `self.beta * first.beta`.
    pub fn compose(&self, first: &ChartBlock) -> Result<ChartBlock> {
        if self.sizes() != first.sizes() {
            return Err(Error::Shape("chart blocks of different sizes".into()));
        }
        let alpha = &self.alpha * &first.alpha;
        let gamma = &self.gamma * &first.gamma;
        let m = &(&self.alpha * &first.m) + &(&self.m * &first.gamma);
        ChartBlock::new(alpha, gamma, m)
    }
}

fn check_section(c: &ChartBlock, f: &RationalMatrix) -> Result<()> {
    let (k, r) = c.sizes();
    if f.rows() != k || f.cols() != r {
        return Err(Error::Shape(format!(
            "section coordinate is {}x{}, expected {k}x{r}",
            f.rows(),
            f.cols()
        )));
    }
    Ok(())
}

/// `alpha f gamma^{-1}`, the action on `Hom(W, K)`.
pub fn linear_action(c: &ChartBlock, f: &RationalMatrix) -> Result<RationalMatrix> {
    check_section(c, f)?;
    let gamma_inv = c.gamma.inverse()?;
    Ok(&(&c.alpha * f) * &gamma_inv)
}

/// `alpha f gamma^{-1} + M gamma^{-1}`, the transition of the affine chart on
/// sections `f` of `V -> W` written as `[f; I]`.
///
/// The result is cross-checked against the top block of `beta [f; I] gamma^{-1}`.
pub fn chart_transition_action(c: &ChartBlock, f: &RationalMatrix) -> Result<RationalMatrix> {
    check_section(c, f)?;
    let (k, r) = c.sizes();
    let gamma_inv = c.gamma.inverse()?;
    let formula = &(&(&c.alpha * f) * &gamma_inv) + &(&c.m * &gamma_inv);

    let graph = f.vstack(&RationalMatrix::identity(r))?;
    let moved = &(&c.beta() * &graph) * &gamma_inv;
    let top: Vec<usize> = (0..k).collect();
    let bottom: Vec<usize> = (k..k + r).collect();
    let cols: Vec<usize> = (0..r).collect();
    assert_eq!(moved.select(&top, &cols), formula, "block and formula actions disagree");
    assert_eq!(moved.select(&bottom, &cols), RationalMatrix::identity(r));
    Ok(formula)
}
