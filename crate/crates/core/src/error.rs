use alloc::string::String;
use core::fmt;

/// Every failure the library reports. Variant names follow the error tags surfaced by the CLI.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraError {
    /// Operands live in different rings or polynomial ambients.
    Ambient(&'static str),
    /// The defining ideal of a quotient contains 1.
    ImproperIdeal,
    BadModulus(u64),
    /// `I` must be nonzero and proper.
    BadIdeal(String),
    /// A root identity failed; the payload names the identity.
    FactorizationMismatch(String),
    MissingRoots,
    BadPrime(String),
    /// The residual quadratic could not be decided and no roots were supplied.
    NeedRoots,
    TooLarge { size: u128, cap: usize },
    NotMember(String),
    OracleMismatch(String),
    Unsupported(String),
}

impl AlgebraError {
    /// Short machine tag, e.g. `"AmbientError"`.
    pub fn tag(&self) -> &'static str {
        match self {
            AlgebraError::Ambient(_) => "AmbientError",
            AlgebraError::ImproperIdeal => "ImproperIdeal",
            AlgebraError::BadModulus(_) => "BadModulus",
            AlgebraError::BadIdeal(_) => "BadIdeal",
            AlgebraError::FactorizationMismatch(_) => "FactorizationMismatch",
            AlgebraError::MissingRoots => "MissingRoots",
            AlgebraError::BadPrime(_) => "BadPrime",
            AlgebraError::NeedRoots => "NeedRoots",
            AlgebraError::TooLarge { .. } => "TooLarge",
            AlgebraError::NotMember(_) => "NotMember",
            AlgebraError::OracleMismatch(_) => "OracleMismatch",
            AlgebraError::Unsupported(_) => "Unsupported",
        }
    }
}

impl fmt::Display for AlgebraError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraError::Ambient(msg) => write!(f, "ambient mismatch: {msg}"),
            AlgebraError::ImproperIdeal => f.write_str("defining ideal contains 1"),
            AlgebraError::BadModulus(n) => write!(f, "bad modulus {n}"),
            AlgebraError::BadIdeal(msg) => write!(f, "bad ideal: {msg}"),
            AlgebraError::FactorizationMismatch(msg) => write!(f, "factorization mismatch: {msg}"),
            AlgebraError::MissingRoots => f.write_str("no roots in R[t] attached"),
            AlgebraError::BadPrime(msg) => write!(f, "bad prime: {msg}"),
            AlgebraError::NeedRoots => {
                f.write_str("residual quadratic undecided; supply roots explicitly")
            }
            AlgebraError::TooLarge { size, cap } => write!(f, "model of size {size} exceeds cap {cap}"),
            AlgebraError::NotMember(msg) => write!(f, "not a member: {msg}"),
            AlgebraError::OracleMismatch(msg) => write!(f, "oracle mismatch: {msg}"),
            AlgebraError::Unsupported(msg) => write!(f, "unsupported: {msg}"),
        }
    }
}

impl core::error::Error for AlgebraError {}
