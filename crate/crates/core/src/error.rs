use alloc::string::String;
use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The modulus is not a prime in `2..=65536`.
    NotPrime(u32),
    /// Two operands live over different prime fields.
    ModulusMismatch {
        left: u32,
        right: u32,
    },
    ZeroInverse,
    DimensionMismatch {
        expected: usize,
        found: usize,
    },
    /// Two operands belong to different group algebras.
    AlgebraMismatch,
    IndexOutOfRange {
        index: usize,
        bound: usize,
    },
    OrderTooLarge {
        order: usize,
        max: usize,
    },
    InvalidTable(String),
    InvalidArgument(String),
    NotAnIdeal,
    ZeroCode,
    /// Exhaustive enumeration would visit more than `guard` message vectors.
    GuardExceeded {
        size: u128,
        guard: u64,
    },
    NotSchurFixed,
    /// No computable projective cover for this group and characteristic.
    Unsupported(String),
    /// A proven statement failed on a concrete instance; always a bug.
    Violation(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotPrime(p) => write!(f, "{p} is not a prime in 2..=65536"),
            Error::ModulusMismatch { left, right } => {
                write!(f, "modulus mismatch: {left} vs {right}")
            }
            Error::ZeroInverse => write!(f, "zero has no multiplicative inverse"),
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::AlgebraMismatch => write!(f, "operands belong to different group algebras"),
            Error::IndexOutOfRange { index, bound } => {
                write!(f, "index {index} out of range (bound {bound})")
            }
            Error::OrderTooLarge { order, max } => {
                write!(f, "group order {order} exceeds the limit {max}")
            }
            Error::InvalidTable(why) => write!(f, "invalid group table: {why}"),
            Error::InvalidArgument(why) => write!(f, "invalid argument: {why}"),
            Error::NotAnIdeal => write!(f, "subspace is not a right ideal"),
            Error::ZeroCode => write!(f, "the zero code has no minimum distance"),
            Error::GuardExceeded { size, guard } => write!(
                f,
                "enumeration of {size} message vectors exceeds the guard {guard}"
            ),
            Error::NotSchurFixed => write!(f, "code is not equal to its Schur square"),
            Error::Unsupported(why) => write!(f, "unsupported: {why}"),
            Error::Violation(what) => write!(f, "theorem violation: {what}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}
