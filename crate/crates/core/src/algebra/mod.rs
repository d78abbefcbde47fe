pub mod counting;
pub mod eval;
pub mod linalg;
pub mod poly;
pub mod qcalc;

pub use eval::RationalPoint;
pub use linalg::{Echelon, SparseVec};
pub use poly::{MultiPoly, Vars, HALF_Q};
pub use qcalc::{q_binomial, q_factorial, q_integer, q_multinomial, QBase};
