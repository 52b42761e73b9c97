//! Subspace calculus on a single fiber: isotropy of 2-planes, projection from
//! a radical, the graph parametrisation of projection fibers, and the affine
//! action of chart transitions on sections.

mod chart;
mod fiber;
mod subspace;

pub use chart::{chart_transition_action, linear_action, ChartBlock};
pub use fiber::{
    canonical_section, fiber_dimension_of_projection, fiber_membership_witness, graph_of, induced_form_on_quotient,
    lift_plus_k, project_from, quotient_map, restrict_skew_form, QuotientForm,
};
pub use subspace::Subspace;
