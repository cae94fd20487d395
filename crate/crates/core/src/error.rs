use alloc::string::String;
use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// Every failure the library can report.
///
/// Each variant has a stable machine-readable [`code`](Error::code) that front
/// ends can surface verbatim.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed textual input.
    Parse(String),
    /// A zero rational was requested; measures are defined for nonzero values only.
    Zero,
    /// The integer is beyond the bound of the factorization engine.
    FactorizationOverflow,
    /// A value that must be prime is not.
    NotPrime,
    /// `m` does not divide the product it is being split against.
    DivisibilityViolation(&'static str),
    /// The base is not a squarefree integer `>= 2`.
    NotSquarefree,
    /// `t < 1` or not a number.
    InvalidT,
    /// `t` is valid but outside the range an operation covers.
    TOutOfRange,
    /// Input exceeds an enumeration cap.
    TooLarge(&'static str),
    /// The operation only applies for `D >= p_1^2`.
    WrongRegime,
    /// The factors of a decomposition do not multiply to the target.
    ProductMismatch,
    /// Coefficients do not describe an irreducible quadratic.
    InvalidQuadratic(&'static str),
    /// Any other precondition failure.
    Domain(&'static str),
}

impl Error {
    pub fn code(&self) -> &'static str {
        match self {
            Error::Parse(_) => "PARSE_ERROR",
            Error::Zero => "ZERO_VALUE",
            Error::FactorizationOverflow => "FACTORIZATION_OVERFLOW",
            Error::NotPrime => "NOT_PRIME",
            Error::DivisibilityViolation(_) => "DIVISIBILITY_VIOLATION",
            Error::NotSquarefree => "NOT_SQUAREFREE",
            Error::InvalidT => "INVALID_T",
            Error::TOutOfRange => "T_OUT_OF_RANGE",
            Error::TooLarge(_) => "TOO_LARGE",
            Error::WrongRegime => "WRONG_REGIME",
            Error::ProductMismatch => "PRODUCT_MISMATCH",
            Error::InvalidQuadratic(_) => "INVALID_QUADRATIC",
            Error::Domain(_) => "DOMAIN_ERROR",
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Parse(s) => write!(f, "cannot parse {s:?}"),
            Error::Zero => f.write_str("zero is not a valid input"),
            Error::FactorizationOverflow => f.write_str("integer exceeds the factorization bound 2^96"),
            Error::NotPrime => f.write_str("value is not prime"),
            Error::DivisibilityViolation(what) => write!(f, "divisibility precondition fails: {what}"),
            Error::NotSquarefree => f.write_str("base must be a squarefree integer >= 2"),
            Error::InvalidT => f.write_str("t must be a real number >= 1 or inf"),
            Error::TOutOfRange => f.write_str("t must satisfy t > 1 for this operation"),
            Error::TooLarge(what) => write!(f, "input too large: {what}"),
            Error::WrongRegime => f.write_str("operation requires D >= p1^2"),
            Error::ProductMismatch => f.write_str("factors do not multiply to the target"),
            Error::InvalidQuadratic(why) => write!(f, "not an irreducible quadratic: {why}"),
            Error::Domain(why) => f.write_str(why),
        }
    }
}

impl core::error::Error for Error {}
