//! Coproducts on the dual side and expansion over a dual family.

use std::collections::BTreeMap;

use fgl_provider::FormalGroupLaw;
use schur_cohomology::{expand_in_basis, Engine, StrictPartition};
use series_core::{Family, Q, TruncatedSeries, Variable};

use crate::error::DualError;
use crate::extract::{extract_duals, BasisExpansion, Pairing};
use crate::onerow::DualKind;

impl DualKind {
    /// The kernel pairing whose extraction produces this dual family.
    pub fn pairing(self) -> Pairing {
        match self {
            DualKind::PHat => Pairing::QWithPhat,
            DualKind::QHat => Pairing::PWithQhat,
        }
    }

    /// True when the classical bottom of the dual is the doubled (Q)
    /// polynomial; the phat family bottoms out at classical P.
    fn doubled_pilot(self) -> bool {
        self == DualKind::QHat
    }
}

/// Renames y_i to y_{i+m}, moving a series to the second block of a
/// split alphabet.
pub fn shift_y(f: &TruncatedSeries, m: usize) -> TruncatedSeries {
    f.rename_variables(|v| {
        if v.family == Family::Y {
            Variable::y(v.index + m as i64)
        } else {
            v
        }
    })
}

/// Solves g = sum_k c_k * dual_k by repeated classical pilot solves.
/// Duals agree with their pilots in the leading stratum but may carry
/// corrections of lower total degree (coefficient-laden terms), so a
/// single triangular pass misattributes; each round instead expands the
/// residual over the pilots and subtracts the full dual combination,
/// which shrinks the residual in the adic sense. Precision lost to the
/// below-weight corrections surfaces as reduced entry cutoffs through
/// the ordinary cutoff bookkeeping.
fn solve_in_dual_span<K, L>(
    g: &TruncatedSeries,
    by_weight: &BTreeMap<u32, Vec<K>>,
    leading: &L,
    pilots: &BTreeMap<K, TruncatedSeries>,
    duals: &BTreeMap<K, TruncatedSeries>,
) -> Result<BTreeMap<K, TruncatedSeries>, DualError>
where
    K: Ord + Clone,
    L: Fn(&K) -> (Vec<(Variable, u32)>, Q),
{
    let cut = g
        .cutoff()
        .expect("dual-span expansion needs a truncated input");
    let mut residual = g.clone();
    let mut coeffs: BTreeMap<K, TruncatedSeries> = BTreeMap::new();
    let mut pass = 0usize;
    while !residual.is_zero() {
        pass += 1;
        // Sanity cap: the coefficient weight reachable at a fixed cutoff
        // bounds how long corrections can keep feeding back.
        if pass > 4 * cut as usize + 8 {
            return Err(DualError::NotInSpan(format!(
                "dual-span solve failed to converge; residual {residual}"
            )));
        }
        let increments = expand_in_basis(
            &residual,
            Family::Y,
            |w| by_weight.get(&w).cloned().unwrap_or_default(),
            leading,
            |k| Ok(pilots[k].clone()),
        )?;
        let mut progressed = false;
        for (k, delta) in increments {
            if delta.is_zero() {
                continue;
            }
            progressed = true;
            residual = residual.sub(&delta.mul(&duals[&k]));
            let entry = coeffs
                .entry(k)
                .or_insert_with(|| TruncatedSeries::zero(None));
            *entry = entry.add(&delta);
        }
        if !progressed {
            break;
        }
    }
    Ok(coeffs)
}

/// The classical pilot elements: additive-law b = 0 polynomials renamed
/// into the y alphabet, for every shape of weight <= max_weight.
fn classical_pilots(
    kind: DualKind,
    max_weight: u32,
    n_y: usize,
    d: u32,
) -> Result<BTreeMap<StrictPartition, TruncatedSeries>, DualError> {
    let law = FormalGroupLaw::Additive;
    let mut engine = Engine::new(&law, n_y, d, false)?;
    let mut out = BTreeMap::new();
    for sp in StrictPartition::up_to_weight(max_weight) {
        if sp.len() > n_y {
            continue;
        }
        let val = engine.pq(&sp, kind.doubled_pilot())?.rename_variables(|v| {
            if v.family == Family::X {
                Variable::y(v.index)
            } else {
                v
            }
        });
        out.insert(sp, val);
    }
    Ok(out)
}

fn pilot_lead(sp: &StrictPartition, doubled: bool) -> Q {
    if doubled {
        Q::from_integer((1i64 << sp.len()).into())
    } else {
        Q::from_integer(1.into())
    }
}

fn y_profile(parts: &[u32], offset: i64) -> Vec<(Variable, u32)> {
    parts
        .iter()
        .enumerate()
        .map(|(i, &p)| (Variable::y(offset + i as i64 + 1), p))
        .collect()
}

/// Expands a symmetric y-side series over the dual family of `kind` on
/// n_y variables; `duals` must hold the dual elements for every shape up
/// to the cutoff of `g`.
pub fn expand_in_dual_span(
    g: &TruncatedSeries,
    kind: DualKind,
    n_y: usize,
    duals: &BTreeMap<StrictPartition, TruncatedSeries>,
) -> Result<BTreeMap<StrictPartition, TruncatedSeries>, DualError> {
    let cut = g
        .cutoff()
        .expect("dual-span expansion needs a truncated input");
    let pilots = classical_pilots(kind, cut, n_y, cut)?;
    let mut by_weight: BTreeMap<u32, Vec<StrictPartition>> = BTreeMap::new();
    for sp in pilots.keys() {
        if !duals.contains_key(sp) {
            return Err(DualError::InvalidRequest(format!(
                "no dual element supplied for shape {sp}"
            )));
        }
        by_weight.entry(sp.size()).or_default().push(sp.clone());
    }
    let doubled = kind.doubled_pilot();
    let leading =
        |sp: &StrictPartition| (y_profile(sp.parts(), 0), pilot_lead(sp, doubled));
    solve_in_dual_span(g, &by_weight, &leading, &pilots, duals)
}

/// The coproduct of a dual element: dual_nu on the doubled alphabet
/// y_1..y_{2m}, expanded over the pair family dual_lambda(y') *
/// dual_mu(y'') with y' = y_1..y_m and y'' = y_{m+1}..y_{2m}. The block
/// size is m = d (rounded even on the P side) so that every shape of
/// weight <= d embeds on each side.
pub fn coproduct_dual(
    law: &FormalGroupLaw,
    nu: &StrictPartition,
    kind: DualKind,
    d: u32,
    factorial: bool,
) -> Result<BasisExpansion<(StrictPartition, StrictPartition)>, DualError> {
    let pairing = kind.pairing();
    let mut m = d as usize;
    if pairing == Pairing::PWithQhat && m % 2 == 1 {
        m += 1;
    }
    if nu.size() > d {
        return Err(DualError::InvalidRequest(format!(
            "|nu| = {} exceeds the cutoff {d}",
            nu.size()
        )));
    }
    let big = extract_duals(law, m, 2 * m, d, pairing, factorial)?;
    let small = extract_duals(law, m, m, d, pairing, factorial)?;
    let g = big.entry(nu);
    let pilots_one = classical_pilots(kind, d, m, d)?;
    let mut pilots = BTreeMap::new();
    let mut duals = BTreeMap::new();
    let mut by_weight: BTreeMap<u32, Vec<(StrictPartition, StrictPartition)>> = BTreeMap::new();
    for (l, pl) in &pilots_one {
        for (r, pr) in &pilots_one {
            let w = l.size() + r.size();
            if w > d {
                continue;
            }
            let key = (l.clone(), r.clone());
            pilots.insert(key.clone(), pl.mul(&shift_y(pr, m)));
            duals.insert(
                key.clone(),
                small.entry(l).mul(&shift_y(&small.entry(r), m)),
            );
            by_weight.entry(w).or_default().push(key);
        }
    }
    let doubled = kind.doubled_pilot();
    let leading = |key: &(StrictPartition, StrictPartition)| {
        let (l, r) = key;
        let mut profile = y_profile(l.parts(), 0);
        profile.extend(y_profile(r.parts(), m as i64));
        (profile, pilot_lead(l, doubled) * pilot_lead(r, doubled))
    };
    let entries = solve_in_dual_span(&g, &by_weight, &leading, &pilots, &duals)?;
    Ok(BasisExpansion { entries })
}
