//! Exact computations around q,t-Catalan numbers, lattice path statistics,
//! symmetric functions, HOMFLY polynomials of torus knots and a tri-graded
//! superalgebra model of torus knot homology.

pub mod algebra;
pub mod paths;
pub mod qt;
pub mod superalg;
pub mod verify;
pub mod symfun;
pub mod error;
pub mod homfly;

pub use error::{Error, Result};
