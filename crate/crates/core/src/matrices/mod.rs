//! Dense matrices over the exact or numeric scalar, indexed by vertices or
//! by symmetric arcs, and the walk matrices H_η, D, H̃_η, K, C, S_θ, U_θ.

mod dense;
mod power;
mod walk;

pub use dense::{ExactMatrix, FieldMatrix, IndexSpace, NumericMatrix};
pub use power::{exact_power_is_identity, numeric_power_deviation};
pub use walk::{
    boundary_matrix, coin_from_boundary, coin_matrix, degree_matrix,
    hermitian_adjacency, normalized_hermitian, random_walk_hermitian, shift_matrix,
    time_evolution, verify_entry_formula, Exact, Numeric, PhaseMode, Walk,
};
