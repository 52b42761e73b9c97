//! Exact computations around skew-symmetric forms and their degeneracy loci.
//!
//! The crate is organised by subsystem:
//!
//! * [`exact`]: rational matrices, ranks, kernels, determinants, Pfaffians and
//!   the conformal symplectic group.
//! * [`weyl`]: polynomials in `q`, Weyl-group degree lists and Poincaré
//!   polynomials of Grassmannians of 2-planes and their bundles.
//! * [`grass`]: subspace calculus on a single fiber (isotropy, projection from a
//!   radical, graph parametrisation of fibers, chart transitions).
//! * [`strata`]: linear spaces of skew matrices, constant-rank verification and
//!   search, and the dimension-bound calculators.
//! * [`lie`]: Lie algebras from structure constants and coadjoint orbit
//!   dimensions.
//!
//! Everything is exact over the rationals. Randomised procedures take an
//! explicit seed and are reproducible independently of thread count.

pub mod error;
pub mod exact;
pub mod exec;
pub mod grass;
pub mod lie;
pub mod rng;
pub mod strata;
pub mod weyl;

pub use error::{Error, Result};
pub use exact::{parse_rational, Rational, RationalMatrix, SkewMatrix};
pub use exec::Execution;
pub use grass::Subspace;
pub use weyl::QPolynomial;

/// Crate version, echoed into machine-readable reports.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
