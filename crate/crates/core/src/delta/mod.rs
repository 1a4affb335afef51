//! Delta-sequence matrices `M_n = (f_n(m, k))`, built from `M_{n-1}` by
//! propagating partial difference equations from boundary data.

mod matrix;
mod properties;
mod relations;
mod sequence;
mod solver;
mod strategy;

pub use matrix::DeltaMatrix;
pub use properties::{
    boundary_agreement, counter_diagonal_symmetry, crossing_equalities, eoc_pom_polynomial,
    factor_two_initial_condition, factor_two_record, marginal_difference_equations, marginal_triangle_alignment,
    matrix_properties_check, paired_marginals, recurrence_identity, second_row_forms, sub_super_diagonals,
    zero_diagonal,
};
pub use relations::{Boundary, Instance, Recurrence, Region};
pub use sequence::{build_matrix, build_sequence, DeltaSequence};
pub use solver::{solve_constraints, Assignment};
pub use strategy::{BuildStrategy, CatalogStrategy, StrategyRegistry};
