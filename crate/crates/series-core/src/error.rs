//! Error type for series arithmetic.

use std::error::Error;
use std::fmt;

/// Errors raised by series operations that can fail.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SeriesError {
    /// `invert_unit` was asked for the inverse of a series whose degree-0
    /// part is not a single invertible coefficient monomial.
    NotAUnit(String),
    /// `exact_divide` hit a minimal term not divisible by the divisor's
    /// minimal term; the dividend is not a multiple of the divisor.
    DivisibilityViolation(String),
    /// A substitution sent a geometric variable of a truncated series to a
    /// series with a nonzero constant term, so every output degree would
    /// depend on the unknown tail.
    DivergentSubstitution(String),
    /// A substitution target appears with a negative exponent.
    NegativeExponentSubstitution(String),
    /// `coefficient_of` was given a basis that is not unitriangular in the
    /// distinguished variable.
    NonTriangularBasis(String),
    /// An operation needed more precision than its inputs carry.
    InsufficientPrecision(String),
}

impl fmt::Display for SeriesError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeriesError::NotAUnit(s) => write!(f, "not a unit: {s}"),
            SeriesError::DivisibilityViolation(s) => {
                write!(f, "exact division failed: {s}")
            }
            SeriesError::DivergentSubstitution(s) => {
                write!(f, "divergent substitution: {s}")
            }
            SeriesError::NegativeExponentSubstitution(s) => {
                write!(f, "substitution into negative exponent: {s}")
            }
            SeriesError::NonTriangularBasis(s) => {
                write!(f, "basis is not unitriangular: {s}")
            }
            SeriesError::InsufficientPrecision(s) => {
                write!(f, "insufficient precision: {s}")
            }
        }
    }
}

impl Error for SeriesError {}

/// Convenience alias for series results.
pub type SeriesResult<T> = Result<T, SeriesError>;
