//! One-row dual functions read off the single-variable kernel.

use std::collections::BTreeMap;

use fgl_provider::FormalGroupLaw;
use series_core::{TruncatedSeries, Variable};

use crate::error::DualError;
use crate::kernel::kernel_delta;

/// Which one-row dual family to produce.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DualKind {
    /// Duals of the Q-family (paired against the doubled ladder).
    PHat,
    /// Duals of the P-family (paired against the plain ladder).
    QHat,
}

/// The one-row duals of index 0..=k_max by Newton interpolation on the
/// one-variable kernel Delta(t; y): evaluating at the first vanishing
/// node of the factorial-power ladder isolates the lowest coefficient,
/// and exact division by the matching linear factor shifts the ladder
/// down. Each division is a divisibility theorem for the kernel, so a
/// failure surfaces as an arithmetic error rather than being masked.
///
/// The qhat ladder pairs with [t|b]^k = prod_{i<=k} (t +_F b_i) and
/// evaluates at t = bbar_{k+1}; the phat ladder pairs with the doubled
/// [[t|b]]^k = (t +_F t) prod_{i<k} (t +_F b_i) and evaluates at t = 0,
/// then t = bbar_k. With `factorial` off every node is 0 and every
/// divisor is t +_F t or t. Internally the kernel is built k_max degrees
/// deeper, as each division costs one degree of precision.
pub fn onerow_duals(
    law: &FormalGroupLaw,
    kind: DualKind,
    k_max: u32,
    n_y: usize,
    d: u32,
    factorial: bool,
) -> Result<Vec<TruncatedSeries>, DualError> {
    let c = d + k_max;
    let t = Variable::x(1);
    let tser = TruncatedSeries::variable(t, Some(c));
    let shift = |j: u32| -> TruncatedSeries {
        if factorial {
            TruncatedSeries::variable(Variable::b(j as i64), Some(c))
        } else {
            TruncatedSeries::zero(Some(c))
        }
    };
    let eval = |f: &TruncatedSeries, j: u32| -> Result<TruncatedSeries, DualError> {
        if factorial {
            let node = law.formal_inverse(&shift(j))?;
            let mut bind = BTreeMap::new();
            bind.insert(t, node);
            Ok(f.substitute(&bind)?)
        } else {
            Ok(f.set_var_zero(t))
        }
    };
    let mut cur = kernel_delta(law, 1, n_y, c)?.value;
    let mut out: Vec<TruncatedSeries> = Vec::new();
    match kind {
        DualKind::QHat => {
            for k in 0..=k_max {
                out.push(eval(&cur, k + 1)?);
                if k < k_max {
                    let divisor = law.formal_sum(&tser, &shift(k + 1))?;
                    cur = cur.sub(&out[k as usize]).exact_divide(&divisor)?;
                }
            }
        }
        DualKind::PHat => {
            // Delta(0; y) = 1: every factor collapses.
            out.push(cur.set_var_zero(t));
            if k_max > 0 {
                let doubled = law.formal_sum(&tser, &tser)?;
                cur = cur.sub(&out[0]).exact_divide(&doubled)?;
                for k in 1..=k_max {
                    out.push(eval(&cur, k)?);
                    if k < k_max {
                        let divisor = law.formal_sum(&tser, &shift(k))?;
                        cur = cur.sub(&out[k as usize]).exact_divide(&divisor)?;
                    }
                }
            }
        }
    }
    Ok(out.into_iter().map(|s| s.truncated(d)).collect())
}

/// A single one-row dual.
pub fn onerow_dual(
    law: &FormalGroupLaw,
    kind: DualKind,
    k: u32,
    n_y: usize,
    d: u32,
    factorial: bool,
) -> Result<TruncatedSeries, DualError> {
    Ok(onerow_duals(law, kind, k, n_y, d, factorial)?
        .pop()
        .expect("the ladder always yields index k"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn phat_zero_is_one() {
        let law = FormalGroupLaw::Additive;
        let p0 = onerow_dual(&law, DualKind::PHat, 0, 2, 4, true).unwrap();
        assert!(p0.agrees_with(&TruncatedSeries::one(Some(4))), "{p0}");
    }

    #[test]
    fn qhat_zero_is_one_only_without_shifts() {
        // With b = 0 the first node is t = 0 and qhat_0 = Delta(0; y) = 1;
        // with shifts on, qhat_0 = Delta(bbar_1; y) keeps genuine b-terms.
        let law = FormalGroupLaw::Additive;
        let plain = onerow_dual(&law, DualKind::QHat, 0, 2, 4, false).unwrap();
        assert!(plain.agrees_with(&TruncatedSeries::one(Some(4))), "{plain}");
        let shifted = onerow_dual(&law, DualKind::QHat, 0, 2, 4, true).unwrap();
        let tail = shifted.sub(&TruncatedSeries::one(Some(4)));
        assert!(!tail.is_zero(), "qhat_0 with shifts = {shifted}");
    }
}
