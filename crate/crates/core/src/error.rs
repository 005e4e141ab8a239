//! Error type shared across the crate.

use alloc::string::String;
use core::fmt;

/// Errors reported by series construction, enumeration, and verification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// The series has no invertible leading term (lowest tracked coefficient
    /// is zero or not a single x-monomial).
    NotInvertible,
    /// An infinite product or bilateral sum was requested with a step that
    /// does not bound the exponents below (step <= 0).
    DivergentProduct,
    /// Arguments outside the documented parameter range.
    BadParameters(&'static str),
    /// An enumeration was requested beyond the configured ceiling.
    BudgetExceeded { requested: i64, ceiling: i64 },
    /// A partition argument was required to have distinct parts.
    NotStrict,
    /// No identity with the given id is registered.
    UnknownIdentity(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotInvertible => write!(f, "series is not invertible"),
            Error::DivergentProduct => write!(f, "product does not converge as a formal series"),
            Error::BadParameters(msg) => write!(f, "bad parameters: {msg}"),
            Error::BudgetExceeded { requested, ceiling } => write!(
                f,
                "enumeration budget exceeded: requested n = {requested}, ceiling {ceiling}"
            ),
            Error::NotStrict => write!(f, "partition must have distinct parts"),
            Error::UnknownIdentity(id) => write!(f, "unknown identity: {id}"),
        }
    }
}

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;
