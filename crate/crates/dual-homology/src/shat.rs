//! The type-A dual family from its kernel.

use fgl_provider::FormalGroupLaw;
use schur_cohomology::{expand_in_partition_basis, Engine, Partition};

use crate::error::DualError;
use crate::extract::BasisExpansion;
use crate::kernel::kernel_shat;

/// Expands the type-A kernel in the two-sided s-basis; entries are the
/// dual functions shat_lambda(y). Requires n_x >= d. The empty-shape
/// entry is exactly 1: at the grid point x_i = bbar_i every non-trivial
/// s-element vanishes and the kernel collapses to 1.
pub fn shat_duals(
    law: &FormalGroupLaw,
    n_x: usize,
    n_y: usize,
    d: u32,
    factorial: bool,
) -> Result<BasisExpansion<Partition>, DualError> {
    if n_x < d as usize {
        return Err(DualError::InvalidRequest(format!(
            "n_x = {n_x} cannot carry every shape of weight <= {d}; need n_x >= cutoff"
        )));
    }
    let kernel = kernel_shat(law, n_x, n_y, d, factorial)?;
    let mut engine = Engine::new(law, n_x, d, factorial)?;
    let entries = expand_in_partition_basis(&kernel.value, n_x, |p| engine.s(p, true))?;
    Ok(BasisExpansion { entries })
}

#[cfg(test)]
mod tests {
    use super::*;
    use series_core::TruncatedSeries;

    #[test]
    fn shat_empty_is_one() {
        let law = FormalGroupLaw::Additive;
        let duals = shat_duals(&law, 2, 2, 2, true).unwrap();
        let empty = duals.entry(&Partition::empty());
        assert!(empty.agrees_with(&TruncatedSeries::one(Some(2))), "{empty}");
        assert_eq!(empty.num_terms(), 1);
    }

    #[test]
    fn classical_shat_one_row_is_complete_homogeneous() {
        // At b = 0 the kernel is the plain Cauchy product, whose dual
        // family is the Schur family itself: shat_(1)(y) = s_(1)(y).
        let law = FormalGroupLaw::Additive;
        let duals = shat_duals(&law, 3, 2, 3, false).unwrap();
        let one_row = Partition::new(vec![1]).unwrap();
        let got = duals.entry(&one_row);
        let expected = TruncatedSeries::variable(series_core::Variable::y(1), Some(2))
            .add(&TruncatedSeries::variable(series_core::Variable::y(2), Some(2)));
        assert!(got.agrees_with(&expected), "{got}");
    }
}
