//! Exact arithmetic in `Q(sqrt 2)`, truncated trivariate power series and the
//! generating-function identities for the lower and upper triangles.

mod closed_forms;
mod gf;
mod reindex;
mod scalar;
mod tri;

pub use closed_forms::{
    edge_generating_functions, lambda1_closed_forms, required_n as closed_forms_required_n, root_two_tangent,
    series_equal, MAX_P,
};
pub use gf::{lambda_lhs, lambda_rhs, omega_lhs, omega_rhs, required_n as gf_required_n};
pub use reindex::{boundary_relations_check, reindex_lambda, reindex_omega, required_n as reindex_required_n};
pub use scalar::RootTwoScalar;
pub use tri::{monomials, LinearForm, TriSeries, TrigKind, Var};
