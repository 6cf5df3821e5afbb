//! Crate-wide error type.

use thiserror::Error;

/// Errors raised by exact-algebra operations.
///
/// Mathematical *failures* (an axiom that does not hold, a cocycle that is
/// not a coboundary, an obstruction that does not vanish) are not errors;
/// they are reported as values. Errors signal inputs that are outside an
/// operation's domain.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("field spec mismatch: {0} vs {1}")]
    FieldMismatch(String, String),
    #[error("modulus of degree {degree} is not irreducible over GF(2): divisible by {divisor:#b}")]
    NotIrreducible { degree: u32, divisor: u64 },
    #[error("invalid field spec: {0}")]
    InvalidField(String),
    #[error("division by zero in GF(2^k)")]
    DivisionByZero,
    #[error("scalar encoding {bits:#b} has degree >= {k}")]
    ScalarOutOfRange { bits: u64, k: u32 },
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("parity error: {0}")]
    Parity(String),
    #[error("not a subspace: {0}")]
    NotASubspace(String),
    #[error("matrix is not invertible")]
    NotInvertible,
    #[error("map is not a morphism: {0}")]
    NotAMorphism(String),
    #[error("not an ideal: {0}")]
    NotAnIdeal(String),
    #[error("not a representation: {0}")]
    InvalidRepresentation(String),
    #[error("twist/representation incompatibility at basis vector {witness}")]
    Incompatible { witness: String },
    #[error("fixed-point violation: alpha(x) != x")]
    NotAlphaFixed,
    #[error("invalid 2-structure: {0}")]
    Invalid2Structure(String),
    #[error("not a cochain (equivariance fails): {0}")]
    NotACochain(String),
    #[error("broken complex: {0}")]
    BrokenComplex(String),
    #[error("not a cocycle: {0}")]
    NotClosed(String),
    #[error("invalid deformation: {0}")]
    InvalidDeformation(String),
    #[error("catalog constraint violated for family {family}: {condition}")]
    ConstraintViolation { family: String, condition: String },
    #[error("unknown catalog family: {0}")]
    UnknownFamily(String),
    #[error("missing parameter {0}")]
    MissingParameter(String),
    #[error("enumeration limits exceeded: {0}")]
    TooLarge(String),
    #[error("unsupported input: {0}")]
    Unsupported(String),
    #[error("format error: {0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;
