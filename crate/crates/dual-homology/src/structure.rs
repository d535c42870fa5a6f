//! Structure constants of the x-side bases.

use fgl_provider::FormalGroupLaw;
use schur_cohomology::{expand_in_strict_basis, Engine, PqKind, StrictPartition};

use crate::error::DualError;
use crate::extract::BasisExpansion;

/// Expands F_lambda * F_mu back in the same family. Entries are the
/// structure-constant series c^nu_{lambda,mu} in the shift variables,
/// each honest to d - |nu|.
pub fn structure_constants(
    law: &FormalGroupLaw,
    lambda: &StrictPartition,
    mu: &StrictPartition,
    which: PqKind,
    n: usize,
    d: u32,
    factorial: bool,
) -> Result<BasisExpansion<StrictPartition>, DualError> {
    let mut engine = Engine::new(law, n, d, factorial)?;
    structure_constants_with(&mut engine, lambda, mu, which)
}

/// As `structure_constants`, reusing a prepared engine.
pub fn structure_constants_with(
    engine: &mut Engine,
    lambda: &StrictPartition,
    mu: &StrictPartition,
    which: PqKind,
) -> Result<BasisExpansion<StrictPartition>, DualError> {
    let d = engine.degree();
    if lambda.size() + mu.size() > d {
        return Err(DualError::InvalidRequest(format!(
            "|lambda| + |mu| = {} exceeds the cutoff {d}, so the product's \
             own leading shape is already out of range",
            lambda.size() + mu.size()
        )));
    }
    let doubled = which == PqKind::Q;
    let f = engine.pq(lambda, doubled)?.mul(&engine.pq(mu, doubled)?);
    let n = engine.variables();
    let entries = expand_in_strict_basis(&f, n, doubled, |sp| engine.pq(sp, doubled))?;
    Ok(BasisExpansion { entries })
}
