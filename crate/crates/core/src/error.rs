use thiserror::Error;

/// Errors raised when an operation's preconditions are not met.
///
/// Failed axioms are *not* errors: checkers report them as a
/// [`Violation`](crate::Violation) inside a [`Verdict`](crate::Verdict).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("linear system has no solution")]
    NoSolution,
    #[error("linear system has no unique solution")]
    NonUnique,
    #[error("bilinear form is degenerate")]
    DegenerateForm,
    #[error("bilinear form is not symmetric")]
    NotSymmetric,
    #[error("bilinear form is not antisymmetric")]
    NotAntisymmetric,
    #[error("bracket is not antisymmetric")]
    NotAntisymmetricBracket,
    #[error("twist map is not invertible")]
    SingularTwist,
    #[error("twist map is not involutive")]
    NonInvolutiveTwist,
    #[error("almost complex structures need even dimension, got {0}")]
    OddDimension(usize),
    #[error("candidate is not an almost complex structure: {0}")]
    NotAlmostComplex(String),
    #[error("not a Hermitian pair: {0}")]
    NotHermitian(String),
    #[error("no almost complex structure exists for this twist")]
    NoComplexStructure,
    #[error("product is not hom-left-symmetric")]
    NotLeftSymmetric,
    #[error("representation is not admissible")]
    NotAdmissible,
    #[error("basis vectors are linearly dependent")]
    DependentBasis,
    #[error("invalid rational literal {0:?}")]
    InvalidRational(String),
    #[error("division by zero")]
    DivisionByZero,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
