//! Variable families and the total variable order.
//!
//! Geometric variables (X, Y, B) carry degree 1 for truncation purposes;
//! COEFF variables (provider parameters such as beta or the log coefficients
//! m_k) carry degree 0. B admits indices <= 0 for the doubly infinite
//! sequence b_± used by the type-A functions.

use std::fmt;

/// Variable family, ordered X < Y < B < Coeff.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    X,
    Y,
    B,
    Coeff,
}

/// A formal variable: a family plus an integer index.
///
/// Indices are >= 1 for X and Y, arbitrary for B. For Coeff, index 0 is the
/// multiplicative parameter `beta` and index k >= 1 is the log coefficient
/// `m_k` of the universal rational provider.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Variable {
    pub family: Family,
    pub index: i64,
}

impl Variable {
    pub fn x(i: i64) -> Self {
        assert!(i >= 1, "x-indices start at 1");
        Variable { family: Family::X, index: i }
    }

    pub fn y(i: i64) -> Self {
        assert!(i >= 1, "y-indices start at 1");
        Variable { family: Family::Y, index: i }
    }

    pub fn b(i: i64) -> Self {
        Variable { family: Family::B, index: i }
    }

    pub fn beta() -> Self {
        Variable { family: Family::Coeff, index: 0 }
    }

    pub fn m(k: i64) -> Self {
        assert!(k >= 1, "m-indices start at 1");
        Variable { family: Family::Coeff, index: k }
    }

    /// True for X/Y/B, which carry degree 1; false for Coeff (degree 0).
    pub fn is_geometric(&self) -> bool {
        self.family != Family::Coeff
    }
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::X => write!(f, "x{}", self.index),
            Family::Y => write!(f, "y{}", self.index),
            Family::B => write!(f, "b{}", self.index),
            Family::Coeff if self.index == 0 => write!(f, "beta"),
            Family::Coeff => write!(f, "m{}", self.index),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn variable_order_is_family_then_index() {
        assert!(Variable::x(2) < Variable::y(1));
        assert!(Variable::y(9) < Variable::b(-3));
        assert!(Variable::b(-1) < Variable::b(0));
        assert!(Variable::b(7) < Variable::beta());
        assert!(Variable::beta() < Variable::m(1));
    }

    #[test]
    fn display_names() {
        assert_eq!(Variable::x(1).to_string(), "x1");
        assert_eq!(Variable::b(-2).to_string(), "b-2");
        assert_eq!(Variable::beta().to_string(), "beta");
        assert_eq!(Variable::m(3).to_string(), "m3");
    }
}
