use thiserror::Error;

use crate::field::Field;
use crate::report::ValidationReport;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("denominator vanishes in {0}")]
    ZeroDenominator(Field),
    #[error("field mismatch: expected {expected}, found {found}")]
    FieldMismatch { expected: Field, found: Field },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("duplicate basis label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),
    #[error("algebra is not associative")]
    NotAssociative,
    #[error("algebra is not a Lie algebra")]
    NotLie,
    #[error("wrong flavor: {0}")]
    WrongFlavor(String),
    #[error("invalid action")]
    InvalidAction(Box<ValidationReport>),
    #[error("invalid crossed module")]
    InvalidXMod(Box<ValidationReport>),
    #[error("invalid categorical algebra")]
    InvalidCatAlgebra(Box<ValidationReport>),
    #[error("invalid input")]
    InvalidInput(Box<ValidationReport>),
    #[error("morphisms are not composable: t(x) != s(y)")]
    NotComposable,
    #[error("internal invariant violated: {0}")]
    InternalInvariantViolation(String),
    #[error("CharTwo: operation requires characteristic different from 2")]
    CharTwo,
    #[error("induced bracket does not respect the relation subspace")]
    BracketNotWellDefined,
    #[error("{0} is not well defined on the quotient")]
    IllDefinedOnQuotient(&'static str),
    #[error("invalid group table: {0}")]
    InvalidGroup(String),
}

impl Error {
    /// The failing report carried by validation-driven errors.
    pub fn report(&self) -> Option<&ValidationReport> {
        match self {
            Error::InvalidAction(r) | Error::InvalidXMod(r) | Error::InvalidCatAlgebra(r) | Error::InvalidInput(r) => {
                Some(r)
            }
            _ => None,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
