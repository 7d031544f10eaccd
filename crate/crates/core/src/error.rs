use thiserror::Error;

/// Errors raised by the library.
///
/// Structural problems (malformed tables, bad diagrams, I/O) are kept apart from
/// validation failures so that callers can map them to different exit codes.
#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed table: {0}")]
    MalformedTable(String),

    #[error("not a group: {0}")]
    NotAGroup(String),

    #[error("quandle axiom violated: {0}")]
    AxiomViolation(String),

    #[error("size mismatch: {0}")]
    SizeMismatch(String),

    #[error("unsupported carrier: {0}")]
    UnsupportedCarrier(String),

    #[error("not a unit: {0}")]
    NotAUnit(String),

    #[error("coefficient mismatch: {0}")]
    CoefficientMismatch(String),

    #[error("invalid degree: {0}")]
    InvalidDegree(String),

    #[error("cocycle condition fails: {0}")]
    NotACocycle(String),

    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),

    #[error("inconsistent propagation: {0}")]
    Inconsistent(String),

    #[error("invalid move: {0}")]
    InvalidMove(String),

    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// True for errors that signal a failed mathematical check rather than bad input.
    pub fn is_validation(&self) -> bool {
        matches!(
            self,
            Error::AxiomViolation(_) | Error::NotACocycle(_) | Error::Inconsistent(_)
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
