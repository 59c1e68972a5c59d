use core::fmt;

use alloc::string::String;

/// Errors shared by all modules of the crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Denominator of a rational polynomial was zero.
    ZeroDenominator,
    /// Division was attempted by a polynomial whose leading coefficient is not 1.
    NonMonicDivisor,
    /// A residue modulus smaller than 2 was supplied.
    BadModulus,
    /// Chinese remaindering requires pairwise coprime moduli.
    NonCoprimeModuli,
    /// Companion matrix construction requires a monic polynomial.
    NonMonic,
    /// Companion matrix of a degree-zero polynomial does not exist.
    DegreeZero,
    /// The residue enumeration d^n exceeds the configured budget.
    BudgetExceeded { cases: u128, max_cases: u64 },
    /// A modulus that must be prime is composite.
    CompositeModulus,
    /// Reduction mod p dropped the degree of a polynomial that must stay monic.
    DegreeDrop,
    /// The remainder of g by a characteristic polynomial is not divisible by d;
    /// certifies that f is not integer-valued on this matrix algebra.
    NotIntegerValuedAtMatrix,
    /// p-adic input precision is below the cancellation modulus m + v_p(d).
    InsufficientPrecision { required: u32, available: u32 },
    /// An internal self-check failed; indicates an arithmetic bug, not bad input.
    InternalAssertionFailure(String),
    /// Matrix dimensions of two operands disagree.
    DimensionMismatch,
    /// An entry index was outside 1..=n.
    IndexOutOfRange,
    /// An ideal generator failed the membership check.
    NonMemberGenerator,
    /// An ideal element failed the membership check.
    NonMemberElement,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ZeroDenominator => write!(f, "denominator must be nonzero"),
            Error::NonMonicDivisor => write!(f, "division requires a monic divisor"),
            Error::BadModulus => write!(f, "modulus must be at least 2"),
            Error::NonCoprimeModuli => write!(f, "moduli must be pairwise coprime"),
            Error::NonMonic => write!(f, "polynomial must be monic"),
            Error::DegreeZero => write!(f, "degree must be at least 1"),
            Error::BudgetExceeded { cases, max_cases } => write!(
                f,
                "enumeration of {} cases exceeds budget of {}",
                cases, max_cases
            ),
            Error::CompositeModulus => write!(f, "modulus must be prime"),
            Error::DegreeDrop => write!(f, "leading coefficient vanishes mod p"),
            Error::NotIntegerValuedAtMatrix => {
                write!(f, "polynomial is not integer-valued at this matrix")
            }
            Error::InsufficientPrecision {
                required,
                available,
            } => write!(
                f,
                "p-adic precision {} is below the required cancellation modulus {}",
                available, required
            ),
            Error::InternalAssertionFailure(msg) => {
                write!(f, "internal assertion failure: {}", msg)
            }
            Error::DimensionMismatch => write!(f, "matrix dimensions do not match"),
            Error::IndexOutOfRange => write!(f, "entry index out of range"),
            Error::NonMemberGenerator => write!(f, "ideal generator is not a member"),
            Error::NonMemberElement => write!(f, "ideal element is not a member"),
        }
    }
}

pub type Result<T> = core::result::Result<T, Error>;
