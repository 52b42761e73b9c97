//! Linear spaces of skew-symmetric matrices and their rank stratification.

mod bounds;
mod certify;
mod macaulay;
pub mod mpoly;
mod search;
mod space;

pub use bounds::{
    degeneracy_bound, projectivized_family_check, ss_locus_dimension, verify_constant_rank_bound, BoundKind,
    BoundQuery, BoundReport,
};
pub use certify::{
    is_constant_rank, rank_profile, CertifyMode, LowerBound, RankBucket, RankProfile, UpperBound, Verdict,
    EXACT_MAX_DIM, EXACT_MAX_N,
};
pub use macaulay::{projective_zero_set_is_empty, MacaulayCertificate};
pub use search::{search_constant_rank, SearchOutcome};
pub use space::SkewLinearSpace;
