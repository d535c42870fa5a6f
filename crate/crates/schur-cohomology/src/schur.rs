//! Public constructors for the P/Q/s families and supersymmetry checks.

use std::collections::BTreeMap;

use fgl_provider::FormalGroupLaw;
use series_core::{SeriesResult, TruncatedSeries, Variable};

use crate::partition::{Partition, StrictPartition};
use crate::symmetrize::{symmetrized_pq, symmetrized_s};

/// P_lambda(x_1..x_n | b) to degree d. `factorial = false` sets b = 0.
pub fn schur_p(
    law: &FormalGroupLaw,
    lambda: &StrictPartition,
    n: usize,
    d: u32,
    factorial: bool,
) -> SeriesResult<TruncatedSeries> {
    symmetrized_pq(law, lambda, n, d, false, factorial)
}

/// Q_lambda(x_1..x_n | b) to degree d.
pub fn schur_q(
    law: &FormalGroupLaw,
    lambda: &StrictPartition,
    n: usize,
    d: u32,
    factorial: bool,
) -> SeriesResult<TruncatedSeries> {
    symmetrized_pq(law, lambda, n, d, true, factorial)
}

/// The factorial s-function s_lambda(x_1..x_n | b) to degree d.
pub fn schur_s_factorial(
    law: &FormalGroupLaw,
    lambda: &Partition,
    n: usize,
    d: u32,
    factorial: bool,
) -> SeriesResult<TruncatedSeries> {
    symmetrized_s(law, lambda, n, d, factorial, false)
}

/// The two-sided (double) s-function built on the descending shift
/// sequence b_n, b_{n-1}, ..., which runs into nonpositive indices.
pub fn schur_s_double(
    law: &FormalGroupLaw,
    lambda: &Partition,
    n: usize,
    d: u32,
) -> SeriesResult<TruncatedSeries> {
    symmetrized_s(law, lambda, n, d, true, true)
}

/// Outcome of the supersymmetry test, with witnesses on failure.
#[derive(Clone, Debug)]
pub struct Supersymmetry {
    /// None when symmetric; otherwise the swap index i and a witness.
    pub asymmetry: Option<(usize, String)>,
    /// None when f(t, tbar, x_3, ...) is free of t; otherwise a witness.
    pub dependence: Option<String>,
    /// For the Q-type refinement: None when f(t,...) - f(0,...) is
    /// divisible by t +_F t; otherwise the divisibility error.
    pub q_type_failure: Option<String>,
}

impl Supersymmetry {
    /// Supersymmetric (both defining conditions hold).
    pub fn holds(&self) -> bool {
        self.asymmetry.is_none() && self.dependence.is_none()
    }

    /// Supersymmetric and of Q-type.
    pub fn holds_q_type(&self) -> bool {
        self.holds() && self.q_type_failure.is_none()
    }
}

/// Tests the supersymmetry conditions for a series in x_1..x_n:
/// symmetry under S_n, cancellation f(t, tbar, x_3, ...) free of t, and
/// the Q-type divisibility of f(t, ...) - f(0, ...) by t +_F t.
pub fn is_supersymmetric(
    law: &FormalGroupLaw,
    f: &TruncatedSeries,
    n: usize,
) -> SeriesResult<Supersymmetry> {
    let mut asymmetry = None;
    for i in 1..n as i64 {
        let swapped = f.rename_variables(|v| {
            if v == Variable::x(i) {
                Variable::x(i + 1)
            } else if v == Variable::x(i + 1) {
                Variable::x(i)
            } else {
                v
            }
        });
        if let Some((m, a, b)) = f.difference_witness(&swapped) {
            asymmetry = Some((i as usize, format!("at {m}: {a} vs {b}")));
            break;
        }
    }
    let d = f
        .cutoff()
        .expect("supersymmetry is checked on truncated series");
    let x1 = TruncatedSeries::variable(Variable::x(1), Some(d));
    let mut bind = BTreeMap::new();
    bind.insert(Variable::x(2), law.formal_inverse(&x1)?);
    let cancelled = f.substitute(&bind)?;
    let dependence = if cancelled.is_free_of(Variable::x(1)) {
        None
    } else {
        let witness = cancelled
            .terms()
            .find(|(m, _)| m.exponent_of(Variable::x(1)) != 0)
            .map(|(m, c)| format!("term {c}*{m} survives"))
            .unwrap_or_default();
        Some(witness)
    };
    let at_zero = f.set_var_zero(Variable::x(1));
    let doubled = law.formal_sum(&x1, &x1)?;
    let q_type_failure = match f.sub(&at_zero).exact_divide(&doubled) {
        Ok(_) => None,
        Err(e) => Some(e.to_string()),
    };
    Ok(Supersymmetry {
        asymmetry,
        dependence,
        q_type_failure,
    })
}
