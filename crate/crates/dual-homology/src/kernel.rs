//! Cauchy kernels pairing the x-side bases with their duals.

use fgl_provider::FormalGroupLaw;
use series_core::{Family, SeriesResult, TruncatedSeries, Variable};

/// A truncated Cauchy kernel together with its alphabet sizes.
#[derive(Clone, Debug)]
pub struct KernelSeries {
    pub value: TruncatedSeries,
    pub n_x: usize,
    pub n_y: usize,
}

/// The P/Q kernel prod_{i<=n_x, j<=n_y} (1 - xbar_i y_j)/(1 - x_i y_j)
/// truncated at total degree d. One canonical factor is computed; every
/// (i, j) instance is a variable rename of it.
pub fn kernel_delta(
    law: &FormalGroupLaw,
    n_x: usize,
    n_y: usize,
    d: u32,
) -> SeriesResult<KernelSeries> {
    let x1 = TruncatedSeries::variable(Variable::x(1), Some(d));
    let y1 = TruncatedSeries::variable(Variable::y(1), Some(d));
    let one = TruncatedSeries::one(Some(d));
    let xbar = law.formal_inverse(&x1)?;
    let numer = one.sub(&xbar.mul(&y1));
    let denom_inv = one.sub(&x1.mul(&y1)).invert_unit(d)?;
    let factor = numer.mul(&denom_inv);
    let mut acc = one;
    for i in 1..=n_x as i64 {
        for j in 1..=n_y as i64 {
            let inst = factor.rename_variables(|v| match v.family {
                Family::X => Variable::x(i),
                Family::Y => Variable::y(j),
                _ => v,
            });
            acc = acc.mul(&inst);
        }
    }
    Ok(KernelSeries { value: acc, n_x, n_y })
}

/// The type-A kernel prod_{i<=n_x, j<=n_y} (1 - bbar_i y_j)/(1 - x_i y_j);
/// with `factorial` off the numerator is dropped.
pub fn kernel_shat(
    law: &FormalGroupLaw,
    n_x: usize,
    n_y: usize,
    d: u32,
    factorial: bool,
) -> SeriesResult<KernelSeries> {
    let x1 = TruncatedSeries::variable(Variable::x(1), Some(d));
    let y1 = TruncatedSeries::variable(Variable::y(1), Some(d));
    let one = TruncatedSeries::one(Some(d));
    let denom_inv = one.sub(&x1.mul(&y1)).invert_unit(d)?;
    let numer = if factorial {
        let b1 = TruncatedSeries::variable(Variable::b(1), Some(d));
        Some(one.sub(&law.formal_inverse(&b1)?.mul(&y1)))
    } else {
        None
    };
    let mut acc = one;
    for i in 1..=n_x as i64 {
        for j in 1..=n_y as i64 {
            let inst = denom_inv.rename_variables(|v| match v.family {
                Family::X => Variable::x(i),
                Family::Y => Variable::y(j),
                _ => v,
            });
            acc = acc.mul(&inst);
            if let Some(numer) = &numer {
                let ninst = numer.rename_variables(|v| match v.family {
                    Family::B => Variable::b(i),
                    Family::Y => Variable::y(j),
                    _ => v,
                });
                acc = acc.mul(&ninst);
            }
        }
    }
    Ok(KernelSeries { value: acc, n_x, n_y })
}
