use thiserror::Error;

/// Errors produced by constructors and certification routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix is not Hermitian: max entrywise deviation {deviation:.3e} exceeds {tol:.1e}")]
    NotHermitian { deviation: f64, tol: f64 },

    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("invalid bipartite dimensions: n = {n}, m = {m}")]
    InvalidDims { n: usize, m: usize },

    #[error("invalid spectrum: {0}")]
    InvalidSpectrum(String),

    #[error("invalid Schmidt vector: {0}")]
    InvalidSchmidtVector(String),

    #[error("not a density matrix: {0}")]
    InvalidDensityMatrix(String),

    #[error("parameter out of range: {0}")]
    OutOfRange(String),

    #[error("gamma = {gamma} is outside the certifiable range [0, {gamma_max})")]
    GammaOutOfRange { gamma: f64, gamma_max: f64 },

    #[error("alpha = 0 defines a singular map with no inverse")]
    SingularMap,

    #[error("degenerate criterion parameters: {0}")]
    DegenerateCriterion(String),

    #[error("secular root bracketing failed: {0}")]
    BracketFailure(String),

    #[error("io error: {0}")]
    Io(String),

    #[error("malformed input file: {0}")]
    Parse(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
