use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("invalid scalar {text:?}: {reason}")]
    InvalidScalar { text: String, reason: String },

    #[error("identity is not homogeneous of degree {degree} in variable {var}")]
    NotHomogeneous { var: usize, degree: u32 },

    #[error("identity is not linear in slot {slot}")]
    NotMultilinear { slot: usize },

    #[error("identity variables must be numbered contiguously from 0 (missing {missing})")]
    NonContiguousVariables { missing: usize },

    #[error("hom-power exponent must be at least 1")]
    InvalidPower,

    #[error("maximum power must be at least 2, got {0}")]
    InvalidMaxPower(usize),

    #[error("structure is not skewsymmetric/symmetric as required: {0}")]
    Symmetry(String),

    #[error("map is not a {required}: {detail}")]
    NotMorphism { required: &'static str, detail: String },

    #[error("twist must be invertible")]
    SingularTwist,

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("{field}: {message}")]
    Format { field: String, message: String },

    #[error("unknown example {0:?}")]
    UnknownExample(String),
}

impl Error {
    pub fn format(field: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Format {
            field: field.into(),
            message: message.into(),
        }
    }
}
