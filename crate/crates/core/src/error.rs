use thiserror::Error;

/// Errors raised by the library. Variants are grouped by whether the input
/// was malformed (`Invalid*`, shape/index errors) or the request is
/// mathematically refused (`NotSemisimple`, `ZeroEigenvalue`, ...).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("length condition violated: {0}")]
    LengthBound(String),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("B_{{{m},{n}}}({delta}) is not semisimple")]
    NotSemisimple { m: usize, n: usize, delta: String },
    #[error("eigenvalue {value} vanishes at delta = {delta}")]
    ZeroEigenvalue { value: String, delta: String },
    #[error("division by zero: eigenvalue 0 is not excluded from the factor list")]
    ZeroFactor,
    #[error("symmetry precondition violated: {0}")]
    Symmetry(String),
    #[error("singular matrix")]
    Singular,
    #[error("dimension {dim} exceeds the oracle cap {cap}")]
    CapExceeded { dim: usize, cap: usize },
}

impl Error {
    /// True for refusals that are mathematical rather than input errors.
    pub fn is_refusal(&self) -> bool {
        matches!(
            self,
            Error::NotSemisimple { .. }
                | Error::ZeroEigenvalue { .. }
                | Error::ZeroFactor
                | Error::Singular
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
