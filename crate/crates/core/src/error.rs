use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division is not exact: {0}")]
    NotDivisible(String),

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("evaluation pole: {0}")]
    EvaluationPole(String),

    #[error("variable lists differ: {left:?} vs {right:?}")]
    VariableMismatch { left: Vec<String>, right: Vec<String> },

    #[error("polynomial is not homogeneous in the S-grading")]
    NotHomogeneous,

    #[error("generator xi_{0} is not defined for this derivation or algebra")]
    UndefinedGenerator(usize),

    #[error("image of the differential leaves the model: {0}")]
    NotInvariant(String),

    #[error("model construction failed at row {row}: {reason}")]
    Construction { row: usize, reason: String },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("parse error: {0}")]
    Parse(String),
}
