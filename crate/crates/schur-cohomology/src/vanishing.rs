//! Evaluation of P/Q at the shifted inverse coefficient points.

use std::collections::BTreeMap;

use fgl_provider::FormalGroupLaw;
use series_core::{SeriesResult, TruncatedSeries, Variable};

use crate::partition::{Partition, StrictPartition};
use crate::schur::{schur_p, schur_q, schur_s_double};

/// Which family an evaluation targets.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PqKind {
    P,
    Q,
}

/// One evaluation of F_lambda at the point attached to mu.
#[derive(Clone, Debug)]
pub struct VanishingReport {
    pub kind: PqKind,
    pub lambda: StrictPartition,
    pub mu: StrictPartition,
    /// Whether vanishing is required (mu does not contain lambda).
    pub must_vanish: bool,
    /// The evaluated series.
    pub value: TruncatedSeries,
}

/// Evaluates F_lambda(x|b) at the point x = bbar_mu (Q) or
/// x = bbar_{sh(mu)} (P, always an even number of variables), where
/// bbar_k is the formal inverse of b_k and missing coordinates are 0.
pub fn evaluate_vanishing(
    law: &FormalGroupLaw,
    kind: PqKind,
    lambda: &StrictPartition,
    mu: &StrictPartition,
    d: u32,
) -> SeriesResult<VanishingReport> {
    let point = match kind {
        PqKind::P => mu.sh(),
        PqKind::Q => mu.clone(),
    };
    let mut n = point.len().max(lambda.len());
    if kind == PqKind::P && n % 2 == 1 {
        n += 1;
    }
    let f = match kind {
        PqKind::P => schur_p(law, lambda, n, d, true)?,
        PqKind::Q => schur_q(law, lambda, n, d, true)?,
    };
    let mut bind = BTreeMap::new();
    for (i, &p) in point.parts().iter().enumerate() {
        let b = TruncatedSeries::variable(Variable::b(p as i64), Some(d));
        bind.insert(Variable::x(i as i64 + 1), law.formal_inverse(&b)?);
    }
    for i in point.len()..n {
        bind.insert(Variable::x(i as i64 + 1), TruncatedSeries::zero(Some(d)));
    }
    let value = f.substitute(&bind)?;
    Ok(VanishingReport {
        kind,
        lambda: lambda.clone(),
        mu: mu.clone(),
        must_vanish: !lambda.contained_in(mu),
        value,
    })
}

/// The closed diagonal value for P_lambda at bbar_{sh(lambda)}:
/// prod_i ( prod_{j <= lambda_i, j != lambda_p + 1 for i < p}
///            (bbar_{lambda_i+1} +_F b_j)
///          * prod_{j>i} (bbar_{lambda_i+1} +_F bbar_{lambda_j+1}) ).
///
/// The product runs over lambda zero-padded to even length, matching the
/// even-variable evaluation convention behind sh (which appends a 1 to
/// odd-length shapes; the padded zero part contributes lambda+1 = 1).
pub fn diagonal_value_p(
    law: &FormalGroupLaw,
    lambda: &StrictPartition,
    d: u32,
) -> SeriesResult<TruncatedSeries> {
    let mut parts: Vec<u32> = lambda.parts().to_vec();
    if parts.len() % 2 == 1 {
        parts.push(0);
    }
    let r = parts.len();
    let bbar = |k: u32| -> SeriesResult<TruncatedSeries> {
        law.formal_inverse(&TruncatedSeries::variable(Variable::b(k as i64), Some(d)))
    };
    let mut acc = TruncatedSeries::one(Some(d));
    for i in 0..r {
        let left = bbar(parts[i] + 1)?;
        for j in 1..=parts[i] {
            if (i + 1..r).any(|p| j == parts[p] + 1) {
                continue;
            }
            let b = TruncatedSeries::variable(Variable::b(j as i64), Some(d));
            acc = acc.mul(&law.formal_sum(&left, &b)?);
        }
        for j in i + 1..r {
            acc = acc.mul(&law.formal_sum(&left, &bbar(parts[j] + 1)?)?);
        }
    }
    Ok(acc)
}

/// The closed diagonal value for Q_lambda at bbar_lambda:
/// prod_i ( prod_{j <= lambda_i - 1, j != lambda_p for i < p}
///            (bbar_{lambda_i} +_F b_j)
///          * prod_{j>=i} (bbar_{lambda_i} +_F bbar_{lambda_j}) ).
pub fn diagonal_value_q(
    law: &FormalGroupLaw,
    lambda: &StrictPartition,
    d: u32,
) -> SeriesResult<TruncatedSeries> {
    let r = lambda.len();
    let parts = lambda.parts();
    let bbar = |k: u32| -> SeriesResult<TruncatedSeries> {
        law.formal_inverse(&TruncatedSeries::variable(Variable::b(k as i64), Some(d)))
    };
    let mut acc = TruncatedSeries::one(Some(d));
    for i in 0..r {
        let left = bbar(parts[i])?;
        for j in 1..parts[i] {
            if (i + 1..r).any(|p| j == parts[p]) {
                continue;
            }
            let b = TruncatedSeries::variable(Variable::b(j as i64), Some(d));
            acc = acc.mul(&law.formal_sum(&left, &b)?);
        }
        for j in i..r {
            acc = acc.mul(&law.formal_sum(&left, &bbar(parts[j])?)?);
        }
    }
    Ok(acc)
}

/// Evaluates s_lambda(x_1..x_n||b±) at the grid point attached to mu:
/// x_i = bbar_{i - mu_i} with mu zero-padded (shift indices may be <= 0).
pub fn evaluate_vanishing_s(
    law: &FormalGroupLaw,
    lambda: &Partition,
    mu: &Partition,
    n: usize,
    d: u32,
) -> SeriesResult<TruncatedSeries> {
    let f = schur_s_double(law, lambda, n, d)?;
    let mut bind = BTreeMap::new();
    for i in 1..=n {
        let shift = i as i64 - mu.part(i - 1) as i64;
        let b = TruncatedSeries::variable(Variable::b(shift), Some(d));
        bind.insert(Variable::x(i as i64), law.formal_inverse(&b)?);
    }
    f.substitute(&bind)
}

/// The closed diagonal value for s_lambda at its own grid point:
/// prod_{(i,j) in lambda} (bbar_{i - lambda_i} +_F b_{lambda'_j - j + 1}).
pub fn diagonal_value_s(
    law: &FormalGroupLaw,
    lambda: &Partition,
    d: u32,
) -> SeriesResult<TruncatedSeries> {
    let conj = lambda.conjugate();
    let mut acc = TruncatedSeries::one(Some(d));
    for i in 1..=lambda.len() {
        let li = lambda.part(i - 1);
        let row = i as i64 - li as i64;
        let left = law.formal_inverse(&TruncatedSeries::variable(Variable::b(row), Some(d)))?;
        for j in 1..=li as usize {
            let col = conj.part(j - 1) as i64 - j as i64 + 1;
            let right = TruncatedSeries::variable(Variable::b(col), Some(d));
            acc = acc.mul(&law.formal_sum(&left, &right)?);
        }
    }
    Ok(acc)
}
