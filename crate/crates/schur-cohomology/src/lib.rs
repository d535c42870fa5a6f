//! Factorial Schur P-, Q- and s-functions over a formal group law.
//!
//! The defining symmetrizations, the supersymmetry membership tests, the
//! triangular basis-expansion solver, and the evaluations behind the
//! vanishing theorems all live here, on top of `series-core` arithmetic
//! and an `fgl-provider` law.

mod expand;
mod partition;
mod schur;
mod symmetrize;
mod vanishing;

pub use expand::{
    coeff_of_profile, expand_in_basis, expand_in_partition_basis, expand_in_strict_basis,
    expand_in_strict_pair_basis, ExpandError,
};
pub use partition::{Partition, StrictPartition};
pub use schur::{is_supersymmetric, schur_p, schur_q, schur_s_double, schur_s_factorial, Supersymmetry};
pub use symmetrize::{cross_product, Engine};
pub use vanishing::{
    diagonal_value_p, diagonal_value_q, diagonal_value_s, evaluate_vanishing, evaluate_vanishing_s,
    PqKind, VanishingReport,
};
