use crate::fields::FieldError;

/// Errors from the algebra and solver layers.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("expected dimension {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("dimension {dim} exceeds the configured maximum {max}")]
    DimensionTooLarge { dim: usize, max: usize },
    #[error("an algebra needs dimension at least 1")]
    EmptyDimension,
    #[error("symmetrization divides by 2, impossible in characteristic 2")]
    CharTwo,
    #[error("the zero vector has no eigenvalue")]
    ZeroVector,
    #[error("element is not an eigenvector for the given eigenvalue")]
    NotAnEigenvector,
    #[error("modulus degree {0} must be odd and greater than 1")]
    EvenOrTrivialDegree(usize),
    #[error("modulus is reducible over the base field")]
    ReducibleModulus,
    #[error("the algebra is not defined over an extension field")]
    NotAnExtensionField,
    #[error("element is not nilpotent of order exactly {0}")]
    NotNilpotentAtGivenOrder(usize),
    #[error("powers of the element do not associate: x^s * x^s is not zero")]
    NotPowerAssociative,
    #[error("power exponent must be at least 1")]
    InvalidExponent,
    #[error("operation is not supported over {0}")]
    UnsupportedField(String),
    #[error("enumeration needs {needed} evaluations, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },
    #[error("no eigenvector found after {0} restarts")]
    SearchExhausted(usize),
    #[error("perturbation coefficient violates the valuation condition: {0}")]
    ValuationViolation(String),
    #[error("perturbation needs one epsilon and one linear form per equation")]
    PerturbationShape,
    #[error("invalid file: {0}")]
    Format(String),
}

impl Error {
    pub(crate) fn unsupported(what: impl ToString) -> Self {
        Error::UnsupportedField(what.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
