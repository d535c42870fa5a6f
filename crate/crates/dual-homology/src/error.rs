//! Error type for kernel construction and dual extraction.

use std::error::Error;
use std::fmt;

use schur_cohomology::ExpandError;
use series_core::SeriesError;

/// Failure modes of the dual-basis operations.
#[derive(Clone, Debug)]
pub enum DualError {
    /// A precondition on alphabet sizes or shapes was violated.
    InvalidRequest(String),
    /// A kernel or product escaped the span of the target basis.
    NotInSpan(String),
    Series(SeriesError),
}

impl fmt::Display for DualError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DualError::InvalidRequest(s) => write!(f, "invalid request: {s}"),
            DualError::NotInSpan(s) => write!(f, "not in the basis span: {s}"),
            DualError::Series(e) => write!(f, "{e}"),
        }
    }
}

impl Error for DualError {}

impl From<SeriesError> for DualError {
    fn from(e: SeriesError) -> Self {
        DualError::Series(e)
    }
}

impl From<ExpandError> for DualError {
    fn from(e: ExpandError) -> Self {
        match e {
            ExpandError::NotInSpan(s) => DualError::NotInSpan(s),
            ExpandError::Series(e) => DualError::Series(e),
        }
    }
}
