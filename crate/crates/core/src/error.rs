use num_bigint::BigInt;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero is not allowed here")]
    ZeroInput,
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} is not a rational prime congruent to 1 mod 4")]
    NotSplitPrime(BigInt),
    #[error("{0} is not a primitive coincidence numerator (z and its conjugate share a factor)")]
    NotPrimitive(String),
    #[error("expected a {expected}, got a {found}")]
    WrongIsometryKind { expected: &'static str, found: &'static str },
    #[error("{isometry} is not a coincidence isometry of {shift} + Z[i]")]
    NotMember { shift: String, isometry: String },
    #[error("malformed irrational shift descriptor: {0}")]
    MalformedDescriptor(String),
    #[error("no closed-form generating function is known for shift {0}")]
    NoClosedForm(String),
    #[error("window of radius {radius} is too small to resolve the coset structure")]
    WindowTooSmall { radius: u32 },
    #[error("window radius {0} is out of range (1..=10000)")]
    BadRadius(u32),
    #[error("invalid local factor: {0}")]
    InvalidLocalFactor(String),
}
