//! Multiplier modules of monomial ideals and toric models of their Rees and
//! extended Rees algebras, computed exactly.
//!
//! The crate is organized bottom-up:
//!
//! - [`lattice`]: exact polyhedral kernel (cones, dual cones, Newton
//!   polyhedra, strict interiors, lattice-point enumeration);
//! - [`ideals`]: monomial ideals, integral closure, normality, multiplier
//!   ideals and modules, log canonical thresholds and jumping numbers;
//! - [`rees`]: cone models of `R[at]` and `R[at, 1/t]`, canonical and
//!   multiplier modules on them, graded pieces, and verifiers for the graded
//!   decompositions and the pair-rationality biconditional;
//! - [`hypersurface`]: the local toric model `xy = s^a` with its divisor data,
//!   section conditions and regrading map;
//! - [`cli`]: the `reesmult` command-line front end.

pub mod cli;
pub mod error;
pub mod hypersurface;
pub mod ideals;
pub mod lattice;
pub mod num;
pub mod rees;
pub mod report;

pub use error::{Error, Result};
pub use num::{parse_rational, Integer, Rational};
