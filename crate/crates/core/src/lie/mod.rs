//! Lie algebras from structure constants and the coadjoint form
//! `omega_lambda(x, y) = lambda([x, y])`.

mod algebra;
pub mod catalog;
mod coadjoint;

pub use algebra::{Bracket, JacobiFailure, LieAlgebra};
pub use catalog::{catalog, lookup, CatalogEntry};
pub use coadjoint::{
    check_min_orbit_bound, min_nonzero_orbit_dim, min_orbit_bound, omega_matrix, orbit_dimension,
    rank_stratification_histogram, MinOrbit, OrbitBucket, OrbitHistogram,
};
