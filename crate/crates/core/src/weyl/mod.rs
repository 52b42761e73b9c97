//! Poincaré polynomials of flag varieties, Grassmannians of 2-planes and
//! isotropic 2-planes, and their bundles. Everything is a polynomial in
//! `q = t^2`.

mod poincare;
mod poly;

pub use poincare::{
    degrees, poincare_bundle, poincare_full_flag, poincare_grass2, poincare_isotropic_grass2,
    poincare_parabolic_quotient, top_betti_grass2_bundle, top_betti_isotropic_bundle, BettiVector, ExponentList,
    GroupType,
};
pub use poly::QPolynomial;
