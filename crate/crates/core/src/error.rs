use thiserror::Error;

/// Errors produced by construction and verification routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unsupported field order {0} (supported: 2, 3, 4, 5, 7, 8, 9)")]
    UnsupportedFieldOrder(u32),
    #[error("enumeration of {count} objects exceeds the cap of {cap}")]
    EnumerationTooLarge { count: u128, cap: usize },
    #[error("ambient mismatch: {0}")]
    AmbientMismatch(String),
    #[error("graph is disconnected: vertex {0} is unreachable")]
    Disconnected(usize),
    #[error("intersection matrix has only {found} integer eigenvalues, expected {expected}")]
    NonIntegerSpectrum { found: usize, expected: usize },
    #[error("{0} is not an eigenvalue (closure residual {1})")]
    NotAnEigenvalue(String, String),
    #[error("vertex set is not completely regular: {0}")]
    NotCompletelyRegular(String),
    #[error("function is identically zero")]
    ZeroFunction,
    #[error("maximum clique search exceeded its budget of {0} nodes")]
    CliqueSearchTooLarge(u64),
    #[error("cliques are not Delsarte: {0}")]
    CliquesNotDelsarte(String),
    #[error("graph is not distance-regular: {0}")]
    NotDistanceRegular(String),
    #[error("the two designs coincide; their difference is empty")]
    DegenerateEmpty,
    #[error("not a clique design: {0}")]
    NotADesign(String),
    #[error("unknown vertex label {0:?}")]
    UnknownLabel(String),
    #[error("invalid bitrade: {0}")]
    InvalidBitrade(String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("theorem violation: {0}")]
    TheoremViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
