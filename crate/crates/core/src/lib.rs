//! Point-vortex dynamics on the sphere and in the plane.
//!
//! The crate evaluates the N-vortex Hamiltonian, vector field and momentum
//! map, catalogs the finite subgroups of O(3) (and O(2)) that act on vortex
//! configurations together with permutations, builds the two-dimensional
//! reduced charts on which the dynamics becomes a level-set problem, computes
//! phase portraits (contours, critical points, separatrices), and verifies
//! conservation laws and relative periodicity by direct integration of the
//! full equations of motion.

pub mod charts;
pub mod dynamics;
pub mod error;
pub mod geom;
pub mod portrait;
pub mod symmetry;
pub mod system;
pub mod trajectory;

pub use error::{Error, Result};
pub use system::{Configuration, MomentumValue, PlanePoint, Surface, VortexSystem};
