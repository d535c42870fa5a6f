//! End-to-end verification drivers shared by the CLI and the test gate.

use std::collections::BTreeMap;

use fgl_provider::FormalGroupLaw;
use schur_cohomology::{
    expand_in_strict_pair_basis, Engine, Partition, PqKind, StrictPartition,
};
use series_core::{Family, TruncatedSeries, Variable};

use crate::coproduct::shift_y;
use crate::error::DualError;
use crate::extract::{extract_duals_with, BasisExpansion, Pairing};
use crate::kernel::{kernel_delta, kernel_shat};
use crate::onerow::DualKind;
use crate::shat::shat_duals;
use crate::structure::structure_constants_with;

/// One named check with its outcome and a short detail line.
#[derive(Clone, Debug)]
pub struct CheckReport {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

fn report(name: String, cases: usize, failures: Vec<String>) -> CheckReport {
    if failures.is_empty() {
        CheckReport {
            name,
            pass: true,
            detail: format!("{cases} cases"),
        }
    } else {
        CheckReport {
            name,
            pass: false,
            detail: format!(
                "{} of {cases} cases failed; first: {}",
                failures.len(),
                failures[0]
            ),
        }
    }
}

/// Extracts one dual family and re-sums coefficient * basis element,
/// requiring the residual against the kernel to vanish identically at
/// the cutoff. Returns the report together with the extracted duals.
pub fn verify_cauchy(
    law: &FormalGroupLaw,
    pairing: Pairing,
    d: u32,
    n_y: usize,
    factorial: bool,
) -> Result<(CheckReport, BasisExpansion<StrictPartition>), DualError> {
    let mut n_x = d as usize;
    if pairing == Pairing::PWithQhat && n_x % 2 == 1 {
        n_x += 1;
    }
    let kernel = kernel_delta(law, n_x, n_y, d)?;
    let mut engine = Engine::new(law, n_x, d, factorial)?;
    let duals = extract_duals_with(&mut engine, &kernel, pairing)?;
    let mut sum = TruncatedSeries::zero(Some(d));
    for (sp, coeff) in &duals.entries {
        sum = sum.add(&engine.pq(sp, pairing.doubled())?.mul(coeff));
    }
    let name = format!("cauchy reconstruction ({pairing:?})");
    let rep = match kernel.value.difference_witness(&sum) {
        None => report(name, duals.entries.len(), Vec::new()),
        Some((m, a, b)) => report(
            name,
            duals.entries.len(),
            vec![format!("first difference at {m}: {a} vs {b}")],
        ),
    };
    Ok((rep, duals))
}

/// Extracts the type-A dual family, re-sums it against the s-basis, and
/// checks that the empty-shape dual is exactly 1.
pub fn verify_shat(
    law: &FormalGroupLaw,
    d: u32,
    n_y: usize,
    factorial: bool,
) -> Result<(CheckReport, BasisExpansion<Partition>), DualError> {
    let n_x = d as usize;
    let duals = shat_duals(law, n_x, n_y, d, factorial)?;
    let kernel = kernel_shat(law, n_x, n_y, d, factorial)?;
    let mut engine = Engine::new(law, n_x, d, factorial)?;
    let mut sum = TruncatedSeries::zero(Some(d));
    for (p, coeff) in &duals.entries {
        sum = sum.add(&engine.s(p, true)?.mul(coeff));
    }
    let mut failures = Vec::new();
    if let Some((m, a, b)) = kernel.value.difference_witness(&sum) {
        failures.push(format!("first difference at {m}: {a} vs {b}"));
    }
    let empty = duals.entry(&Partition::empty());
    if !empty.agrees_with(&TruncatedSeries::one(Some(d))) || empty.num_terms() != 1 {
        failures.push(format!("shat for the empty shape is {empty}, not 1"));
    }
    let rep = report(
        "type-A reconstruction".to_string(),
        duals.entries.len() + 1,
        failures,
    );
    Ok((rep, duals))
}

/// Verifies the four duality statements at cutoff d on the split
/// alphabet y' = y_1..y_m, y'' = y_{m+1}..y_{2m} with m = d rounded
/// even. For each family the coproduct side comes from kernel
/// extraction and the product side from independent engine expansions:
///
/// 1./3. the coproduct of each dual (its doubled-alphabet form) equals
///    the structure constants of the partner basis contracted with pairs
///    of duals;
/// 2./4. the pair coefficients of the split kernel equal products of
///    duals, and the doubled-alphabet kernel resums from the 2m-variable
///    basis elements, which together express that products of duals are
///    governed by the partner basis' coproduct.
///
/// Shapes run up to weight max_size. Comparisons happen at the honest
/// meet of both sides' precisions; away from it nothing is claimed.
pub fn verify_duality(
    law: &FormalGroupLaw,
    d: u32,
    max_size: u32,
    factorial: bool,
) -> Result<Vec<CheckReport>, DualError> {
    let m = d as usize + d as usize % 2;
    // Nonzero constants for nu force lambda, mu inside nu, so shapes up
    // to max_size suffice, but the pair weight reaches 2*max_size and
    // the constants engine must cover it; keeping it >= d also keeps the
    // recombined side as precise as the extracted one.
    let cs = d.max(2 * max_size);
    let shapes = StrictPartition::up_to_weight(max_size);
    let mut reports = Vec::new();
    for kind in [DualKind::PHat, DualKind::QHat] {
        let pairing = kind.pairing();
        let which = match kind {
            DualKind::PHat => PqKind::Q,
            DualKind::QHat => PqKind::P,
        };
        let mut engine_x = Engine::new(law, m, d, factorial)?;
        let kernel_small = kernel_delta(law, m, m, d)?;
        let small = extract_duals_with(&mut engine_x, &kernel_small, pairing)?;
        let big_kernel = kernel_delta(law, m, 2 * m, d)?;
        let big = extract_duals_with(&mut engine_x, &big_kernel, pairing)?;

        // Statements (1)/(3): coproducts of duals against the partner
        // basis' structure constants.
        let mut failures = Vec::new();
        let mut cases = 0usize;
        let mut engine_c = Engine::new(law, m, cs, factorial)?;
        let mut constants: BTreeMap<(StrictPartition, StrictPartition), BasisExpansion<StrictPartition>> =
            BTreeMap::new();
        for l in &shapes {
            for r in &shapes {
                let exp = structure_constants_with(&mut engine_c, l, r, which)?;
                for (nu, c) in &exp.entries {
                    if !c.is_zero() && !(l.contained_in(nu) && r.contained_in(nu)) {
                        failures.push(format!(
                            "constant for {nu} in {l} * {r} is nonzero without containment"
                        ));
                    }
                }
                constants.insert((l.clone(), r.clone()), exp);
            }
        }
        for nu in &shapes {
            cases += 1;
            let lhs = big.entry(nu);
            let mut rhs = TruncatedSeries::zero(Some(d));
            for ((l, r), exp) in &constants {
                let c = exp.entry(nu);
                if c.is_zero() {
                    continue;
                }
                let term = c.mul(&small.entry(l)).mul(&shift_y(&small.entry(r), m));
                rhs = rhs.add(&term);
            }
            if let Some((mono, a, b)) = lhs.difference_witness(&rhs) {
                failures.push(format!("nu = {nu}: first difference at {mono}: {a} vs {b}"));
            }
        }
        reports.push(report(
            format!("{kind:?} coproducts against {which:?}-product constants"),
            cases,
            failures,
        ));

        // Statements (2)/(4): products of duals against the split kernel.
        let mut failures = Vec::new();
        let mut cases = 1usize;
        let k2 = kernel_small.value.mul(&kernel_small.value.rename_variables(|v| {
            if v.family == Family::X {
                Variable::x(v.index + m as i64)
            } else {
                v
            }
        }));
        let mut engine2 = Engine::new(law, 2 * m, d, factorial)?;
        let mut resummed = TruncatedSeries::zero(Some(d));
        for nu in StrictPartition::up_to_weight(d) {
            if nu.len() > 2 * m {
                continue;
            }
            resummed = resummed.add(&engine2.pq(&nu, pairing.doubled())?.mul(&small.entry(&nu)));
        }
        if let Some((mono, a, b)) = k2.difference_witness(&resummed) {
            failures.push(format!(
                "doubled-alphabet resummation differs at {mono}: {a} vs {b}"
            ));
        }
        let doubled = pairing.doubled();
        let pairs = expand_in_strict_pair_basis(&k2, m, doubled, |(l, r)| {
            let left = engine_x.pq(l, doubled)?;
            let right = engine_x.pq(r, doubled)?.rename_variables(|v| {
                if v.family == Family::X {
                    Variable::x(v.index + m as i64)
                } else {
                    v
                }
            });
            Ok(left.mul(&right))
        })?;
        for ((l, r), got) in &pairs {
            cases += 1;
            let expected = small.entry(l).mul(&small.entry(r));
            if let Some((mono, a, b)) = got.difference_witness(&expected) {
                failures.push(format!(
                    "pair ({l}, {r}): first difference at {mono}: {a} vs {b}"
                ));
            }
        }
        reports.push(report(
            format!("{kind:?} products against the split {which:?}-kernel"),
            cases,
            failures,
        ));
    }
    Ok(reports)
}
