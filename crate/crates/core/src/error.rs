use thiserror::Error;

/// Errors raised by the workbench.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("malformed table: {0}")]
    MalformedTable(String),

    #[error("table is not associative at ({a}, {b}, {c})")]
    NotAssociative { a: usize, b: usize, c: usize },

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("size {size} exceeds the enumeration bound {bound}")]
    SizeBound { size: usize, bound: usize },

    #[error("congruence kind error: {0}")]
    Kind(String),

    #[error("congruences live on different semigroups")]
    BaseMismatch,

    #[error("window mismatch: {left} vs {right}")]
    WindowMismatch { left: usize, right: usize },

    #[error("window {window} is not closed: point {point} maps to {image}")]
    WindowEscape { window: usize, point: u64, image: u64 },

    #[error("evaluation error: {0}")]
    Evaluation(String),

    #[error("invalid topology: {0}")]
    Topology(String),

    #[error("neighborhood is not in the admissible family of point {0}")]
    NotAdmissible(usize),

    #[error("verification failed: {0}")]
    Verification(String),

    /// Raised when a construction that must succeed does not; indicates a bug.
    #[error("theorem violation: {0}")]
    TheoremViolation(String),

    #[error("unknown instance: {0}")]
    UnknownInstance(String),

    #[error("json: {0}")]
    Json(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
