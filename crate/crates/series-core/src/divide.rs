//! Unit inversion, exact division, and triangular coefficient extraction.

use crate::error::{SeriesError, SeriesResult};
use crate::monomial::Monomial;
use crate::series::{meet, Q, TruncatedSeries};
use crate::variable::Variable;

/// Hard iteration guard for exact division of exact (untruncated) inputs;
/// truncated inputs are bounded by their cutoff instead.
const DIVISION_ITERATION_CAP: usize = 4_000_000;

impl TruncatedSeries {
    /// Multiplicative inverse of a unit, to degree `d`.
    ///
    /// The degree-0 part must be a single coefficient monomial c*m (e.g. 2,
    /// or 1+beta*b1 after the geometric part is separated); general
    /// degree-0 sums such as 1+beta are not invertible in this ring. The
    /// tail is folded in by Horner evaluation of the geometric series,
    /// costing d series multiplications.
    pub fn invert_unit(&self, d: u32) -> SeriesResult<TruncatedSeries> {
        let cutoff = meet(self.cutoff(), Some(d));
        let head: Vec<(Monomial, Q)> = self
            .terms()
            .take_while(|(m, _)| m.geo_degree() == 0)
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        let (m0, c0) = match head.as_slice() {
            [] => {
                return Err(SeriesError::NotAUnit(format!(
                    "series has no degree-0 term: {self}"
                )))
            }
            [(m, c)] => (m.clone(), c.clone()),
            _ => {
                return Err(SeriesError::NotAUnit(format!(
                    "degree-0 part has {} coefficient monomials; \
                     only a single invertible monomial is supported",
                    head.len()
                )))
            }
        };
        let m0_inv = Monomial::one()
            .try_div(&m0)
            .expect("degree-0 monomials are pure coefficient monomials");
        let head_inv = TruncatedSeries::monomial(m0_inv, c0.recip(), None);
        // g = 1 - f/head has valuation >= 1; 1/f = head_inv * sum g^k.
        let g = TruncatedSeries::one(cutoff).sub(&self.mul(&head_inv));
        debug_assert!(g.val_lb() >= 1);
        let mut acc = TruncatedSeries::one(cutoff);
        let steps = cutoff.expect("meet with Some(d) is finite");
        for _ in 0..steps {
            acc = TruncatedSeries::one(cutoff).add(&g.mul(&acc));
        }
        Ok(acc.mul(&head_inv).truncated_to(cutoff))
    }

    /// Exact quotient `self / g` for a dividend known to be a multiple of
    /// `g`, by repeated elimination of the minimal term. The term order is
    /// multiplicative, so min(q*g) = min(q)*min(g): whenever the minimal
    /// remainder term is not divisible by min(g) the dividend was not a
    /// multiple, and the offending monomial is reported as a witness.
    ///
    /// The result is known to degree cutoff(self) - val(g).
    pub fn exact_divide(&self, g: &TruncatedSeries) -> SeriesResult<TruncatedSeries> {
        let (g_min, g_min_coeff) = match g.terms().next() {
            Some((m, c)) => (m.clone(), c.clone()),
            None => {
                return Err(SeriesError::DivisibilityViolation(
                    "division by the zero series".to_string(),
                ))
            }
        };
        let val_g = g_min.geo_degree();
        let cutoff = match self.cutoff() {
            None => None,
            Some(c) => {
                if c < val_g {
                    return Err(SeriesError::InsufficientPrecision(format!(
                        "cutoff {c} cannot support division by a series of valuation {val_g}"
                    )));
                }
                Some(c - val_g)
            }
        };
        let max_mono = self.terms().next_back().map(|(m, _)| m.clone());
        let mut remainder = self.clone();
        let mut quotient: Vec<(Monomial, Q)> = Vec::new();
        let mut steps = 0usize;
        loop {
            let head = remainder.terms().next().map(|(m, c)| (m.clone(), c.clone()));
            let Some((m, c)) = head else { break };
            if self.cutoff().is_none() {
                // An exact multiple keeps every remainder below max(self)
                // in the term order; anything larger proves inexactness.
                if max_mono.as_ref().is_some_and(|mx| &m > mx) {
                    return Err(SeriesError::DivisibilityViolation(format!(
                        "remainder term {m} exceeds the dividend's leading term"
                    )));
                }
                steps += 1;
                assert!(
                    steps <= DIVISION_ITERATION_CAP,
                    "exact_divide exceeded {DIVISION_ITERATION_CAP} elimination steps"
                );
            }
            let qm = match m.try_div(&g_min) {
                Some(qm) => qm,
                None => {
                    return Err(SeriesError::DivisibilityViolation(format!(
                        "minimal remainder term {m} is not divisible by {g_min}"
                    )))
                }
            };
            let qc = c / &g_min_coeff;
            let step = TruncatedSeries::monomial(qm.clone(), qc.clone(), None);
            remainder = remainder.sub(&step.mul(g)).truncated_to(self.cutoff());
            quotient.push((qm, qc));
        }
        Ok(TruncatedSeries::from_terms(quotient, cutoff))
    }

    /// Expands `f` in a basis unitriangular in the variable `t`:
    /// `basis[k]` must have minimal t-exponent k with a t-free unit there.
    /// Returns the t-free coefficient series c_k (each honest to
    /// cutoff(f) - k) such that f = sum c_k * basis[k] within precision.
    pub fn coefficient_of(
        &self,
        t: Variable,
        basis: &[TruncatedSeries],
    ) -> SeriesResult<Vec<TruncatedSeries>> {
        if basis.is_empty() {
            return Err(SeriesError::NonTriangularBasis("empty basis".to_string()));
        }
        let mut remainder = self.clone();
        let mut coeffs = Vec::new();
        let max_k = match self.cutoff() {
            Some(c) => (basis.len() as u32 - 1).min(c),
            None => basis.len() as u32 - 1,
        };
        for k in 0..=max_k {
            let bk = &basis[k as usize];
            let min_t = bk.terms().map(|(m, _)| m.exponent_of(t)).min();
            let lead = bk.coeff_of_var_power(t, k);
            if min_t != Some(k as i32) || lead.is_zero() || !lead.is_free_of(t) {
                return Err(SeriesError::NonTriangularBasis(format!(
                    "basis element {k} does not start with a t-free unit at {t}^{k}"
                )));
            }
            let target = remainder.coeff_of_var_power(t, k);
            let ck = match target.cutoff() {
                Some(c) => target.mul(&lead.invert_unit(c)?),
                None => {
                    // Exact dividend: the unit head must divide exactly.
                    target.exact_divide(&lead)?
                }
            };
            remainder = remainder.sub(&ck.mul(bk));
            for j in 0..=k {
                if !remainder.coeff_of_var_power(t, j).is_zero() {
                    return Err(SeriesError::NonTriangularBasis(format!(
                        "eliminating {t}^{k} left residue at {t}^{j}"
                    )));
                }
            }
            coeffs.push(ck);
        }
        if remainder.max_exponent_of(t) > max_k as i32 {
            return Err(SeriesError::NonTriangularBasis(format!(
                "basis too short: residue of t-degree {} remains",
                remainder.max_exponent_of(t)
            )));
        }
        Ok(coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{q_int, q_ratio};

    fn x1(cutoff: Option<u32>) -> TruncatedSeries {
        TruncatedSeries::variable(Variable::x(1), cutoff)
    }

    #[test]
    fn invert_unit_geometric_series() {
        let f = TruncatedSeries::one(Some(6)).sub(&x1(Some(6)));
        let inv = f.invert_unit(6).expect("1 - x1 is a unit");
        assert!(f.mul(&inv).agrees_with(&TruncatedSeries::one(Some(6))));
        assert_eq!(inv.num_terms(), 7, "1 + x1 + ... + x1^6");
    }

    #[test]
    fn invert_unit_with_coefficient_head() {
        let beta = TruncatedSeries::variable(Variable::beta(), Some(4));
        let f = beta.scale(&q_int(2)).add(&beta.mul(&x1(Some(4))));
        let inv = f.invert_unit(4).expect("2*beta*(1 + x1/2) is a unit");
        assert!(f.mul(&inv).agrees_with(&TruncatedSeries::one(Some(4))));
    }

    #[test]
    fn invert_unit_rejects_non_units() {
        assert!(matches!(
            x1(Some(3)).invert_unit(3),
            Err(SeriesError::NotAUnit(_))
        ));
        let two_headed = TruncatedSeries::one(Some(3))
            .add(&TruncatedSeries::variable(Variable::beta(), Some(3)));
        assert!(matches!(
            two_headed.invert_unit(3),
            Err(SeriesError::NotAUnit(_))
        ));
    }

    #[test]
    fn exact_divide_recovers_polynomial_factor() {
        let a = x1(None).add(&TruncatedSeries::variable(Variable::x(2), None));
        let b = x1(None).sub(&TruncatedSeries::variable(Variable::x(2), None).scale(&q_ratio(1, 3)));
        let q = a.mul(&b).exact_divide(&b).expect("constructed multiple");
        assert_eq!(q, a);
        assert_eq!(q.cutoff(), None);
    }

    #[test]
    fn exact_divide_reports_witness_for_non_multiples() {
        let a = x1(None).add(&TruncatedSeries::one(None));
        let b = x1(None).mul(&x1(None));
        match b.exact_divide(&a) {
            Err(SeriesError::DivisibilityViolation(_)) => {}
            other => panic!("expected divisibility violation, got {other:?}"),
        }
    }

    #[test]
    fn exact_divide_tracks_cutoff_drop() {
        let v = x1(Some(6)).mul(&TruncatedSeries::variable(Variable::x(2), Some(6)));
        // val(x1) = val(x2) = 1, so the product is honest to degree 7,
        // and dividing by the valuation-2 series v spends two degrees.
        let f = v.mul(&TruncatedSeries::one(Some(6)).add(&x1(Some(6))));
        assert_eq!(f.cutoff(), Some(7));
        let q = f.exact_divide(&v).expect("multiple of v");
        assert_eq!(q.cutoff(), Some(5));
        assert!(q.agrees_with(&TruncatedSeries::one(Some(5)).add(&x1(Some(5)))));
    }

    #[test]
    fn coefficient_of_unitriangular_basis() {
        // Basis: 1, t + t^2, 2t^2 — strictly increasing minimal t-degree
        // with t-free unit leading coefficients.
        let t = Variable::x(1);
        let ts = TruncatedSeries::variable(t, Some(5));
        let b1 = TruncatedSeries::variable(Variable::b(1), Some(5));
        let x2 = TruncatedSeries::variable(Variable::x(2), Some(5));
        let basis = vec![
            TruncatedSeries::one(Some(5)),
            ts.add(&ts.pow(2)),
            ts.pow(2).scale(&q_int(2)),
        ];
        // f = 3 + b1*(t + t^2) + x2*t^2, so the t^2 coefficient splits
        // between basis[1]'s tail and basis[2].
        let f = TruncatedSeries::constant(q_int(3), Some(5))
            .add(&b1.mul(&basis[1]))
            .add(&x2.mul(&ts.pow(2)));
        let coeffs = f.coefficient_of(t, &basis).expect("triangular system");
        assert!(coeffs[0].agrees_with(&TruncatedSeries::constant(q_int(3), Some(5))));
        assert!(coeffs[1].agrees_with(&b1.truncated(4)));
        assert!(coeffs[2].agrees_with(&x2.scale(&q_ratio(1, 2)).truncated(3)));
    }

    #[test]
    fn coefficient_of_rejects_factorial_style_bases() {
        // t*(t + b1) has minimal t-degree 1, not 2: extracting in such a
        // basis needs interpolation, not back-substitution.
        let t = Variable::x(1);
        let ts = TruncatedSeries::variable(t, Some(4));
        let b1 = TruncatedSeries::variable(Variable::b(1), Some(4));
        let basis = vec![
            TruncatedSeries::one(Some(4)),
            ts.clone(),
            ts.mul(&ts.add(&b1)),
        ];
        let f = basis[2].clone();
        assert!(matches!(
            f.coefficient_of(t, &basis),
            Err(SeriesError::NonTriangularBasis(_))
        ));
    }
}
