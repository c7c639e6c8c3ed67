use thiserror::Error;

/// Errors raised by the exact arithmetic layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("mixed or incompatible scalar kinds in one matrix")]
    InvalidScalar,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("division by zero")]
    DivisionByZero,
    #[error("polynomial {0} has a rational root; quotient ring is not a field")]
    NotAField(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("vector is not in the span")]
    NotInSpan,
}

/// Errors raised while constructing or analysing representations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RepError {
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error("gram matrix is not symmetric")]
    GramNotSymmetric,
    #[error("gram matrix is degenerate")]
    GramDegenerate,
    #[error("generator {0} is not skew with respect to the gram matrix")]
    NotSkew(usize),
    #[error("generator {0} has the wrong shape")]
    BadShape(usize),
    #[error("generators are linearly dependent")]
    DependentGenerators,
    #[error("bracket of generators {0} and {1} leaves the span")]
    NotClosed(usize, usize),
    #[error("orthogonal structure requires a real form J")]
    StructureMissing,
    #[error("structure map is inconsistent: {0}")]
    BadStructure(String),
    #[error("killing form is singular (algebra is not semisimple)")]
    SingularKilling,
    #[error("algebra is not simple")]
    NotSimple,
    #[error("centralizer is zero")]
    NoCentralizer,
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("subspace is not invariant under the generators")]
    NotInvariant,
    #[error("unknown representation: {0}")]
    UnknownRep(String),
    #[error("decomposition into ideals is undecided")]
    Undecided,
}

/// Errors raised by the Lorentzian constructions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LorentzError {
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error("center of h is trivial")]
    TrivialCenter,
    #[error("phi is zero")]
    PhiZero,
    #[error("psi is not surjective onto E0")]
    NotSurjective,
    #[error("h does not act trivially on the declared E0 block")]
    E0NotTrivial,
    #[error("a generator does not preserve the line Rp")]
    NotParabolic,
    #[error("canonical kind {kind} is not available for a type-{ty} algebra")]
    KindTypeMismatch { kind: String, ty: String },
    #[error("curvature element is not in the computed space")]
    NotInSpace,
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
}

impl From<ExactError> for LorentzError {
    fn from(e: ExactError) -> Self {
        LorentzError::Rep(RepError::Exact(e))
    }
}
