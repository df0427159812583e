use thiserror::Error;

use crate::parse::ParseError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("input polynomial is zero")]
    ZeroInput,
    #[error("radicand {index} is zero")]
    ZeroRadicand { index: usize },
    #[error("family of radicands is empty")]
    EmptyFamily,
    #[error("substitution image must be nonconstant")]
    ConstantSubstitution,
    #[error("denominator is identically zero")]
    DivisionByZero,
    #[error("root order must be at least 2, got {0}")]
    InvalidRootOrder(u32),
    #[error("radicand is a {power}-th power, so z^{order} = f is reducible")]
    ReduciblePower { order: u32, power: u32 },
    #[error("exponent vector is not in normal form: {0}")]
    NormalFormViolation(String),
    #[error("family of {size} radicands exceeds the subset enumeration limit of {max}")]
    FamilyTooLarge { size: usize, max: usize },
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("expected a radicand of square-class degree {expected}, found degree {found}")]
    WrongDegree { expected: usize, found: usize },
    #[error("no rational point found on the conic")]
    NoRationalPointFound,
    #[error(
        "generators are dependent modulo squares: product of radicands {relation:?} is a square"
    )]
    DependentGenerators { relation: Vec<usize> },
    #[error("distinct sign choices give the same sum; the resultant is not squarefree")]
    DegenerateSum,
    #[error("integer overflow in genus computation")]
    Overflow,
    #[error(transparent)]
    Parse(#[from] ParseError),
}

pub type Result<T> = std::result::Result<T, Error>;
