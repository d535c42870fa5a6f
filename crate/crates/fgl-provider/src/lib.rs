//! Pluggable one-dimensional commutative formal group laws.
//!
//! Three laws are provided:
//!
//! - [`FormalGroupLaw::Additive`]: F(u,v) = u + v.
//! - [`FormalGroupLaw::Multiplicative`]: F(u,v) = u + v + beta*u*v, with
//!   beta either the symbolic Coeff variable or a fixed rational.
//! - [`FormalGroupLaw::UniversalRational`]: the universal law over the
//!   rationals, presented through its logarithm
//!   log(t) = t + m_1 t^2 + m_2 t^3 + ... with independent coefficients
//!   m_k; F(u,v) = exp(log u + log v). Every law coefficient a_ij is
//!   derived from this model, never supplied by hand.
//!
//! On top of the law the crate builds the formal factorial powers
//! `[t|b]^k = prod_{i<=k} (t +_F b_i)` and their doubled variants
//! `[[t|b]]^{k+1} = (t +_F t) [t|b]^k`.

mod law;

pub use law::{BetaParameter, FormalGroupLaw};
