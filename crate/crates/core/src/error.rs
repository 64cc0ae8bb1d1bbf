use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("empty input")]
    EmptyInput,

    #[error("invalid number `{0}`")]
    InvalidNumber(String),

    #[error("unknown node `{0}`")]
    UnknownNode(String),

    #[error("dangling edge reference: edge {0} does not exist")]
    DanglingEdge(usize),

    #[error("negative weight unsupported")]
    NegativeWeight,

    #[error("negative capacity unsupported")]
    NegativeCapacity,

    #[error("duplicate waypoint node `{0}`")]
    DuplicateWaypoint(String),

    #[error(
        "waypoint `{0}` coincides with the source or target; degenerate segments are not enabled"
    )]
    DegenerateWaypoint(String),

    #[error("{field}: expected {expected} values, found {found}")]
    LengthMismatch {
        field: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("{field}: {message}")]
    InvalidField {
        field: &'static str,
        message: String,
    },

    #[error("unsupported by this solver: {0}")]
    Unsupported(String),

    #[error("state space too large: {0}")]
    StateSpaceTooLarge(String),

    #[error("invalid tree decomposition: {0}")]
    InvalidDecomposition(String),

    #[error("invalid flow: {0}")]
    InvalidFlow(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("graphml: {0}")]
    GraphMl(String),

    #[error("malformed result: {0}")]
    MalformedResult(String),
}

pub type Result<T> = std::result::Result<T, Error>;
