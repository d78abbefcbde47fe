//! The free tri-graded supercommutative algebra on `e_1..e_{n-1}` and
//! `xi_1..xi_{n-1}`, its odd derivations, homology and finite models.

pub mod complex;
pub mod derivation;
pub mod element;
pub mod models;

pub use complex::{
    euler_characteristic_of, homology, khovanov_regrade, poincare_of, stable_homology, stable_poincare,
    stable_poincare_formula, stable_window, GradedSpace,
};
pub use derivation::{differentials_for, Operator, OperatorWord};
pub use element::{Degree, Mono, SuperElement};
pub use models::{
    build_model, conjecture_checks, four_five_model, level_zero_matches_l_space, three_strand_formula,
    three_strand_model, two_strand_formula, two_strand_model, ModelRow, TriGradedModel, FOUR_FIVE_TABLE,
};
