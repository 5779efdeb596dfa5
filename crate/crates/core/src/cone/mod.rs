//! The cone of CSP matrices.

mod halfspace;
mod matrix;
mod prime;
mod swap;
mod universal;

pub use halfspace::{
    active_rank, cone_dimension, halfspace_system, is_extreme, membership_by_halfspaces,
    ray_family, HalfSpaceSystem,
};
pub use matrix::CspMatrix;
pub use prime::{
    bounded_compositions, brute_force_lattice_points, count_lattice_points,
    parameter_lattice_count, prime_polytope_vertices,
};
pub use swap::{apply_swap, prefix_sums, swap_decompose, swap_preserves, Swap};
pub use universal::{project_universal, UniversalVector};
