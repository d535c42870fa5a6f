//! Exact sparse multivariate series arithmetic with degree truncation.
//!
//! This crate provides the arithmetic substrate for the whole workspace:
//!
//! - [`Variable`]: variables in four families (X, Y, B, Coeff) under a
//!   total order; X/Y/B carry geometric degree 1, Coeff degree 0.
//! - [`Monomial`]: sparse exponent vectors under a graded-lexicographic
//!   multiplicative order, with negative exponents admitted on Coeff only.
//! - [`TruncatedSeries`]: `BTreeMap`-backed series over `BigRational` with
//!   an optional cutoff (`None` = exact polynomial) that every operation
//!   propagates honestly.
//!
//! Division facilities (`invert_unit`, `exact_divide`, `coefficient_of`)
//! are exact: a failed exact division is an error carrying the offending
//! monomial, never a silent approximation.

mod divide;
mod error;
mod json;
mod monomial;
mod series;
mod subst;
mod variable;

pub use error::{SeriesError, SeriesResult};
pub use monomial::Monomial;
pub use series::{meet, q_int, q_ratio, Q, TruncatedSeries};
pub use variable::{Family, Variable};
