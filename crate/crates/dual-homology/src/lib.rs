//! Dual (homological) families extracted from Cauchy-style kernels.
//!
//! The kernels pair the P/Q and s families with their duals; this crate
//! builds those kernels, extracts dual families by triangular expansion,
//! runs the one-row Newton ladders, computes structure constants and
//! dual coproducts, and verifies the reconstruction and duality
//! identities end to end.

mod coproduct;
mod error;
mod extract;
mod kernel;
mod onerow;
mod shat;
mod structure;
mod verify;

pub use coproduct::{coproduct_dual, expand_in_dual_span, shift_y};
pub use error::DualError;
pub use extract::{extract_duals, extract_duals_with, BasisExpansion, Pairing};
pub use kernel::{kernel_delta, kernel_shat, KernelSeries};
pub use onerow::{onerow_dual, onerow_duals, DualKind};
pub use shat::shat_duals;
pub use structure::{structure_constants, structure_constants_with};
pub use verify::{verify_cauchy, verify_duality, verify_shat, CheckReport};
