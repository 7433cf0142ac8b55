use thiserror::Error;

/// Failures raised by the engines. Most variants signal a violated internal
/// invariant rather than bad input; those are reported with exit code 4 by
/// the command-line frontend.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole at p = 1 in {0}")]
    PoleAtPOne(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("sequences of different degree cannot be compared")]
    UnequalDegree,
    #[error("(z_i - z_j) does not divide the numerator exactly")]
    InternalNonDivisibility,
    #[error("monomial closure exceeded {0} monomials")]
    ClosureDivergence(usize),
    #[error("joint eigenvector solve failed: {0}")]
    EigenSolve(String),
    #[error("straightening rule derivation failed: {0}")]
    RuleInconsistency(String),
    #[error("straightening did not terminate within {0} steps")]
    NonTermination(usize),
    #[error("term differs from the vacuum inside the tail region")]
    TailMismatch,
    #[error("Heisenberg action did not stabilize up to N = {0}")]
    NoStabilization(usize),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("vector is not a K-eigenvector")]
    NonEigenvector,
    #[error("singular spectral point x = 1")]
    SingularSpectralPoint,
    #[error("sequence {0:?} is not in the admissible class")]
    InvalidLambdaClass(Vec<i64>),
    #[error("strip {0:?} has a column taller than 2")]
    NotSl2Strip(Vec<usize>),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
