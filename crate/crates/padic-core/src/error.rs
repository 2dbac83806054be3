use thiserror::Error;

/// Errors shared by every crate of the workspace.
///
/// The variant name doubles as the machine-readable error kind reported by
/// the command-line front end (see [`Error::kind`]).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operands belong to different p-adic contexts")]
    ContextMismatch,
    #[error("invalid context: {0}")]
    InvalidContext(String),
    #[error("element is not a unit (positive valuation)")]
    NotAUnit,
    #[error("insufficient precision: need {needed} digits, have {available}")]
    InsufficientPrecision { needed: u32, available: u32 },
    #[error("value is not divisible by p^{k}")]
    NotDivisible { k: u32 },
    #[error("value is not congruent to 1 mod p")]
    NotOneUnit,
    #[error("matrix is not congruent to the identity mod p")]
    NotOneUnitMatrix,
    #[error("root index {nu} is divisible by p")]
    NuDivisibleByP { nu: i64 },
    #[error("matrix is not invertible")]
    NotInvertible,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is not regular (discriminant is not a unit)")]
    NotRegular,
    #[error("characteristic polynomial does not split over the residue field; try a larger residue degree f")]
    CharPolyDoesNotSplit,
    #[error("order mismatch: {left} vs {right}")]
    OrderMismatch { left: u32, right: u32 },
    #[error("quadratic form is not split")]
    NotSplit,
    #[error("p divides n = {n}")]
    PDividesN { n: usize },
    #[error("q does not have the declared symmetry")]
    SymmetryMismatch,
    #[error("-1 has no square root in this context")]
    NoSqrtMinusOne,
    #[error("matrix does not commute with q0")]
    NotInCentralizer,
    #[error("point outside the domain: {0}")]
    DomainError(String),
    #[error("D** is not a unit at this point")]
    DStarStarNotUnit,
    #[error("seed is not invertible over the residue field")]
    SeedNotInvertible,
    #[error("lifting defect at digit {digit}")]
    LiftDefect { digit: u32 },
    #[error("instance too large: {0}")]
    TooLarge(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Stable machine-readable name of the error kind.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::ContextMismatch => "ContextMismatch",
            Error::InvalidContext(_) => "InvalidContext",
            Error::NotAUnit => "NotAUnit",
            Error::InsufficientPrecision { .. } => "InsufficientPrecision",
            Error::NotDivisible { .. } => "NotDivisible",
            Error::NotOneUnit => "NotOneUnit",
            Error::NotOneUnitMatrix => "NotOneUnitMatrix",
            Error::NuDivisibleByP { .. } => "NuDivisibleByP",
            Error::NotInvertible => "NotInvertible",
            Error::DimensionMismatch(_) => "DimensionMismatch",
            Error::NotRegular => "NotRegular",
            Error::CharPolyDoesNotSplit => "CharPolyDoesNotSplit",
            Error::OrderMismatch { .. } => "OrderMismatch",
            Error::NotSplit => "NotSplit",
            Error::PDividesN { .. } => "PDividesN",
            Error::SymmetryMismatch => "SymmetryMismatch",
            Error::NoSqrtMinusOne => "NoSqrtMinusOne",
            Error::NotInCentralizer => "NotInCentralizer",
            Error::DomainError(_) => "DomainError",
            Error::DStarStarNotUnit => "DStarStarNotUnit",
            Error::SeedNotInvertible => "SeedNotInvertible",
            Error::LiftDefect { .. } => "LiftDefect",
            Error::TooLarge(_) => "TooLarge",
            Error::Parse(_) => "Parse",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
