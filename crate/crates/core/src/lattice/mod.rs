//! Exact rational polyhedral geometry over integer lattices: cones and their
//! duals, polyhedra of the form `conv(points) + cone`, strict interiors over
//! the lattice, and bounded lattice-point enumeration.
//!
//! No floating point is used anywhere in this module.

mod cone;
pub(crate) mod dd;
mod enumerate;
mod polyhedron;
mod system;
mod vector;

pub use cone::{dual_cone, Cone, MAX_DUAL_RANK};
pub use enumerate::{
    compare_in_box, count_points, lattice_points, max_points, BoxComparison, LatticeBox,
    DEFAULT_MAX_POINTS, MAX_POINTS_ENV,
};
pub use polyhedron::{newton_from_points, Polyhedron};
pub use system::{format_inequality, Constraint, ThresholdSystem};
pub use vector::{primitive, ExponentVector, HalfSpace, RationalVector};
