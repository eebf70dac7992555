use thiserror::Error;

/// Errors raised by the graded-algebra core.
#[derive(Error, Debug)]
pub enum CoreError {
    #[error("symmetric grading requires n = 2k (got n = {0})")]
    SymmetricGradingOddN(usize),
    #[error("grading mismatch between operands")]
    GradingMismatch,
    #[error("operand space count mismatch: {0} vs {1}")]
    SpaceMismatch(usize, usize),
    #[error("operation requires at least two tensor spaces")]
    SingleSpace,
    #[error("super-commutator requires homogeneous operands")]
    MixedParity,
    #[error("matrix is numerically singular")]
    Singular,
    #[error("invalid boundary parameter: {0}")]
    InvalidBoundary(String),
    #[error("series truncation order {0} too small for requested charge")]
    OrderTooSmall(usize),
    #[error("sampler could not find an admissible point after {0} attempts")]
    SamplerExhausted(usize),
}

pub type Result<T> = std::result::Result<T, CoreError>;
