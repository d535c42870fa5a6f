//! Dual bases extracted from the multi-variable kernel.

use std::collections::BTreeMap;

use fgl_provider::FormalGroupLaw;
use schur_cohomology::{expand_in_strict_basis, Engine, StrictPartition};
use series_core::TruncatedSeries;

use crate::error::DualError;
use crate::kernel::{kernel_delta, KernelSeries};

/// Which x-side basis the kernel is expanded in; the entries are then
/// the duals of that family's partner.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pairing {
    /// Expand in Q_lambda(x|b); entries are phat_lambda(y).
    QWithPhat,
    /// Expand in P_lambda(x|b); entries are qhat_lambda(y).
    PWithQhat,
}

impl Pairing {
    /// True when the x-side basis is the doubled (Q) family.
    pub fn doubled(self) -> bool {
        self == Pairing::QWithPhat
    }
}

/// A basis expansion: coefficient series keyed by shape. Each entry is
/// honest to the working cutoff minus the shape's weight; absent keys
/// are zero to that same precision.
#[derive(Clone, Debug)]
pub struct BasisExpansion<K: Ord> {
    pub entries: BTreeMap<K, TruncatedSeries>,
}

impl<K: Ord> BasisExpansion<K> {
    /// The entry at `key`, or an exact empty series when absent.
    pub fn entry(&self, key: &K) -> TruncatedSeries {
        self.entries
            .get(key)
            .cloned()
            .unwrap_or_else(|| TruncatedSeries::zero(Some(0)))
    }
}

/// Expands the P/Q Cauchy kernel on (n_x, n_y) in the x-side basis,
/// yielding the dual family on the y alphabet. Requires n_x >= d so that
/// every shape of weight <= d fits, and an even n_x on the P side (the
/// P-family is only stable under removing pairs of variables).
pub fn extract_duals(
    law: &FormalGroupLaw,
    n_x: usize,
    n_y: usize,
    d: u32,
    pairing: Pairing,
    factorial: bool,
) -> Result<BasisExpansion<StrictPartition>, DualError> {
    if n_x < d as usize {
        return Err(DualError::InvalidRequest(format!(
            "n_x = {n_x} cannot carry every shape of weight <= {d}; need n_x >= cutoff"
        )));
    }
    if pairing == Pairing::PWithQhat && n_x % 2 != 0 {
        return Err(DualError::InvalidRequest(
            "the P-side expansion needs an even number of x-variables".to_string(),
        ));
    }
    let kernel = kernel_delta(law, n_x, n_y, d)?;
    let mut engine = Engine::new(law, n_x, d, factorial)?;
    extract_duals_with(&mut engine, &kernel, pairing)
}

/// As `extract_duals`, reusing a prepared engine and kernel; the engine
/// memoizes its basis elements across calls.
pub fn extract_duals_with(
    engine: &mut Engine,
    kernel: &KernelSeries,
    pairing: Pairing,
) -> Result<BasisExpansion<StrictPartition>, DualError> {
    let doubled = pairing.doubled();
    let entries = expand_in_strict_basis(&kernel.value, kernel.n_x, doubled, |sp| {
        engine.pq(sp, doubled)
    })?;
    Ok(BasisExpansion { entries })
}

#[cfg(test)]
mod tests {
    use super::*;
    use series_core::{Monomial, Variable};

    #[test]
    fn empty_shape_entry_is_exactly_one() {
        let law = FormalGroupLaw::Additive;
        let duals = extract_duals(&law, 3, 2, 3, Pairing::QWithPhat, true).unwrap();
        let empty = duals.entry(&StrictPartition::empty());
        assert!(empty.agrees_with(&TruncatedSeries::one(Some(3))), "{empty}");
        assert_eq!(empty.num_terms(), 1);
    }

    #[test]
    fn preconditions_are_enforced() {
        let law = FormalGroupLaw::Additive;
        let small = extract_duals(&law, 2, 2, 3, Pairing::QWithPhat, true);
        assert!(matches!(small, Err(DualError::InvalidRequest(_))));
        let odd = extract_duals(&law, 3, 2, 3, Pairing::PWithQhat, true);
        assert!(matches!(odd, Err(DualError::InvalidRequest(_))));
    }

    #[test]
    fn classical_phat_one_row_is_the_p_polynomial() {
        // At b = 0 over the additive law the duals are the classical
        // mirror family: phat_(1) = P_(1)(y) = y1 + y2.
        let law = FormalGroupLaw::Additive;
        let duals = extract_duals(&law, 3, 2, 3, Pairing::QWithPhat, false).unwrap();
        let one_row = StrictPartition::new(vec![1]).unwrap();
        let got = duals.entry(&one_row);
        let expected = TruncatedSeries::variable(Variable::y(1), Some(2))
            .add(&TruncatedSeries::variable(Variable::y(2), Some(2)));
        assert!(got.agrees_with(&expected), "{got}");
        let m = Monomial::var(Variable::y(1));
        assert_eq!(got.coefficient(&m), series_core::q_int(1));
    }
}
