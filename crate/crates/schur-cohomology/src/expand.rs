//! Expansion of symmetric series in a triangular Schur-type basis.
//!
//! Basis elements B_shape start with the classical leading monomial
//! c * v^shape in their lowest total-degree stratum; factorial and law
//! corrections only add terms of strictly higher total degree. The
//! solver therefore walks total-degree strata from the bottom; within a
//! stratum it walks profile weights from the top and same-weight shapes
//! in descending lexicographic profile order (a linear extension of
//! dominance), extracting each coefficient from the leading profile and
//! subtracting the full basis element. A stratum that fails to empty
//! proves the input is not in the span.

use std::collections::BTreeMap;
use std::error::Error;
use std::fmt;

use series_core::{Family, Monomial, Q, SeriesError, SeriesResult, TruncatedSeries, Variable};

use crate::partition::{Partition, StrictPartition};

/// Expansion failure: either not in the span, or an arithmetic error.
#[derive(Clone, Debug)]
pub enum ExpandError {
    /// The residual stratum did not vanish; carries a witness term.
    NotInSpan(String),
    Series(SeriesError),
}

impl fmt::Display for ExpandError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExpandError::NotInSpan(s) => write!(f, "not in the basis span: {s}"),
            ExpandError::Series(e) => write!(f, "{e}"),
        }
    }
}

impl Error for ExpandError {}

impl From<SeriesError> for ExpandError {
    fn from(e: SeriesError) -> Self {
        ExpandError::Series(e)
    }
}

/// Expands `f` over a basis keyed by `K`. `shapes_of(w)` lists the keys
/// whose leading profile has weight w; `leading` gives that profile (the
/// exact exponents carried by `family` variables, sorted by variable)
/// and its rational leading coefficient; `basis` produces the full
/// element. Coefficients are honest to `cutoff(f) - weight`.
pub fn expand_in_basis<K, S, L, B>(
    f: &TruncatedSeries,
    family: Family,
    shapes_of: S,
    leading: L,
    mut basis: B,
) -> Result<BTreeMap<K, TruncatedSeries>, ExpandError>
where
    K: Ord + Clone,
    S: Fn(u32) -> Vec<K>,
    L: Fn(&K) -> (Vec<(Variable, u32)>, Q),
    B: FnMut(&K) -> SeriesResult<TruncatedSeries>,
{
    let cut = f
        .cutoff()
        .expect("basis expansion operates on truncated series");
    let mut residual = f.clone();
    let mut coeffs: BTreeMap<K, TruncatedSeries> = BTreeMap::new();
    while !residual.is_zero() {
        let d = residual.val_lb();
        if d > cut {
            break;
        }
        for k in (0..=d).rev() {
            // Descending profile order: the leading profile of one element
            // occurs inside a same-weight element only for a larger profile.
            let mut shaped: Vec<(Vec<(Variable, u32)>, Q, K)> = shapes_of(k)
                .into_iter()
                .map(|key| {
                    let (profile, lead) = leading(&key);
                    (profile, lead, key)
                })
                .collect();
            shaped.sort_by(|a, b| b.0.cmp(&a.0));
            for (profile, lead, key) in shaped {
                let stratum = residual.homogeneous_part(d);
                let extracted = coeff_of_profile(&stratum, family, &profile);
                if extracted.is_zero() {
                    continue;
                }
                let delta = extracted.scale(&lead.recip());
                let b = basis(&key)?;
                residual = residual.sub(&delta.mul(&b));
                let entry = coeffs
                    .entry(key)
                    .or_insert_with(|| TruncatedSeries::zero(None));
                *entry = entry.add(&delta);
            }
        }
        if residual.val_lb() <= d {
            let witness = residual
                .terms()
                .next()
                .map(|(m, c)| format!("{c}*{m}"))
                .unwrap_or_default();
            return Err(ExpandError::NotInSpan(witness));
        }
    }
    // A coefficient attached to a weight-w element is only determined up
    // to degree cut - w.
    let coeffs = coeffs
        .into_iter()
        .map(|(k, v)| {
            let (profile, _) = leading(&k);
            let w: u32 = profile.iter().map(|&(_, e)| e).sum();
            (k, v.truncated(cut - w))
        })
        .collect();
    Ok(coeffs)
}

/// Expansion over the strict partitions (P/Q families).
pub fn expand_in_strict_basis<B>(
    f: &TruncatedSeries,
    n: usize,
    doubled: bool,
    basis: B,
) -> Result<BTreeMap<StrictPartition, TruncatedSeries>, ExpandError>
where
    B: FnMut(&StrictPartition) -> SeriesResult<TruncatedSeries>,
{
    expand_in_basis(
        f,
        Family::X,
        |w| {
            StrictPartition::of_weight(w)
                .into_iter()
                .filter(|sp| sp.len() <= n)
                .collect()
        },
        |sp: &StrictPartition| (x_profile(sp.parts(), 0), pq_lead(sp, doubled)),
        basis,
    )
}

/// Expansion over partitions of length <= n (s-family).
pub fn expand_in_partition_basis<B>(
    f: &TruncatedSeries,
    n: usize,
    basis: B,
) -> Result<BTreeMap<Partition, TruncatedSeries>, ExpandError>
where
    B: FnMut(&Partition) -> SeriesResult<TruncatedSeries>,
{
    expand_in_basis(
        f,
        Family::X,
        |w| Partition::of_weight(w, n),
        |p: &Partition| (x_profile(p.parts(), 0), Q::from_integer(1.into())),
        basis,
    )
}

/// Expansion over ordered pairs of strict partitions on the split
/// alphabet x_1..x_m / x_{m+1}..x_{2m} (coproduct comparisons).
pub fn expand_in_strict_pair_basis<B>(
    f: &TruncatedSeries,
    m: usize,
    doubled: bool,
    basis: B,
) -> Result<BTreeMap<(StrictPartition, StrictPartition), TruncatedSeries>, ExpandError>
where
    B: FnMut(&(StrictPartition, StrictPartition)) -> SeriesResult<TruncatedSeries>,
{
    expand_in_basis(
        f,
        Family::X,
        |w| {
            let mut keys = Vec::new();
            for wl in 0..=w {
                for l in StrictPartition::of_weight(wl) {
                    if l.len() > m {
                        continue;
                    }
                    for r in StrictPartition::of_weight(w - wl) {
                        if r.len() <= m {
                            keys.push((l.clone(), r));
                        }
                    }
                }
            }
            keys
        },
        |(l, r): &(StrictPartition, StrictPartition)| {
            let mut profile = x_profile(l.parts(), 0);
            profile.extend(x_profile(r.parts(), m as i64));
            (profile, pq_lead(l, doubled) * pq_lead(r, doubled))
        },
        basis,
    )
}

fn x_profile(parts: &[u32], offset: i64) -> Vec<(Variable, u32)> {
    parts
        .iter()
        .enumerate()
        .map(|(i, &p)| (Variable::x(offset + i as i64 + 1), p))
        .collect()
}

fn pq_lead(sp: &StrictPartition, doubled: bool) -> Q {
    if doubled {
        Q::from_integer((1i64 << sp.len()).into())
    } else {
        Q::from_integer(1.into())
    }
}

/// The coefficient of the exact profile (each listed variable at the
/// listed exponent and no other variable of `family`) as a series in the
/// remaining variables. The profile must be sorted by variable.
pub fn coeff_of_profile(
    f: &TruncatedSeries,
    family: Family,
    profile: &[(Variable, u32)],
) -> TruncatedSeries {
    let terms = f.terms().filter_map(|(m, c)| {
        let mut rest = Vec::new();
        let mut got: Vec<(Variable, i32)> = Vec::new();
        for (v, e) in m.iter() {
            if v.family == family {
                got.push((v, e));
            } else {
                rest.push((v, e));
            }
        }
        if got.len() != profile.len() {
            return None;
        }
        for (&(pv, pe), &(gv, ge)) in profile.iter().zip(&got) {
            if pv != gv || pe as i32 != ge {
                return None;
            }
        }
        Some((Monomial::from_pairs(rest), c.clone()))
    });
    TruncatedSeries::from_terms(terms, f.cutoff())
}
