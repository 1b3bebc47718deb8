use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HalgError {
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("arity mismatch: expected {expected}, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("space mismatch: {0}")]
    SpaceMismatch(String),
    #[error("inhomogeneous data: {0}")]
    Inhomogeneous(String),
    #[error("degree {degree} outside the window {min}..{max}")]
    DegreeWindow { degree: i32, min: i32, max: i32 },
    #[error("word length {len} exceeds the cap {cap}")]
    WordCap { len: usize, cap: usize },
    #[error("polynomial degree {degree} exceeds the cap {cap}")]
    PolyCap { degree: u32, cap: u32 },
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("invalid basis element: {0}")]
    InvalidBasis(String),
    #[error("flavor mismatch: {0}")]
    FlavorMismatch(String),
    #[error("identity failure: {0}")]
    IdentityFailure(String),
    #[error("endpoint mismatch: {0}")]
    EndpointMismatch(String),
    #[error("iteration did not stabilise within {0} steps")]
    NoStabilisation(usize),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, HalgError>;
