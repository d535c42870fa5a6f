//! Substitution of series for variables.

use std::collections::BTreeMap;

use crate::error::{SeriesError, SeriesResult};
use crate::series::{meet, TruncatedSeries};
use crate::variable::Variable;

impl TruncatedSeries {
    /// Substitutes `bindings[v]` for each bound variable `v`.
    ///
    /// The result is honest to the meet of this cutoff and the cutoffs of
    /// the bindings actually used. Substituting a series with a nonzero
    /// constant term for a geometric variable of a truncated series is
    /// rejected: the unknown tail would contaminate every output degree.
    /// Bound variables may not occur with negative exponents.
    pub fn substitute(
        &self,
        bindings: &BTreeMap<Variable, TruncatedSeries>,
    ) -> SeriesResult<TruncatedSeries> {
        let mut used: Vec<Variable> = Vec::new();
        for (m, _) in self.terms() {
            for (v, e) in m.iter() {
                if bindings.contains_key(&v) && !used.contains(&v) {
                    if e < 0 {
                        return Err(SeriesError::NegativeExponentSubstitution(format!(
                            "{v} occurs with exponent {e}"
                        )));
                    }
                    used.push(v);
                }
            }
        }
        let mut cutoff = self.cutoff();
        for v in &used {
            cutoff = meet(cutoff, bindings[v].cutoff());
            // A geometric variable of a truncated series may only receive a
            // series of positive valuation; coefficient variables carry
            // degree 0, so any binding leaves the grading honest there.
            if v.is_geometric() && self.cutoff().is_some() && bindings[v].val_lb() == 0 {
                return Err(SeriesError::DivergentSubstitution(format!(
                    "binding for {v} has a nonzero constant term but the \
                     target series is truncated"
                )));
            }
        }
        // Progressive power cache per bound variable.
        let mut powers: BTreeMap<Variable, Vec<TruncatedSeries>> = used
            .iter()
            .map(|&v| (v, vec![TruncatedSeries::one(cutoff)]))
            .collect();
        let mut total = TruncatedSeries::zero(cutoff);
        for (m, c) in self.terms() {
            let mut bound_part = TruncatedSeries::constant(c.clone(), cutoff);
            let mut free_part = Vec::new();
            for (v, e) in m.iter() {
                match powers.get_mut(&v) {
                    Some(cache) => {
                        while cache.len() <= e as usize {
                            let next = cache.last().expect("cache starts at 1").mul(&bindings[&v]);
                            cache.push(next);
                        }
                        bound_part = bound_part.mul(&cache[e as usize]);
                        if bound_part.is_zero() {
                            break;
                        }
                    }
                    None => free_part.push((v, e)),
                }
            }
            if bound_part.is_zero() {
                continue;
            }
            let free = TruncatedSeries::monomial(
                crate::monomial::Monomial::from_pairs(free_part),
                num_rational::BigRational::from_integer(1.into()),
                None,
            );
            total = total.add(&bound_part.mul(&free));
        }
        // Preserve the computed meet even when every contribution vanished.
        if total.is_zero() {
            return Ok(TruncatedSeries::zero(cutoff));
        }
        Ok(total.truncated_to(cutoff))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::q_int;

    fn var(v: Variable, c: Option<u32>) -> TruncatedSeries {
        TruncatedSeries::variable(v, c)
    }

    #[test]
    fn substitute_polynomial_into_variable() {
        // x1 -> y1 + y1^2 in x1^2, exactly.
        let f = var(Variable::x(1), None).pow(2);
        let g = var(Variable::y(1), None).add(&var(Variable::y(1), None).pow(2));
        let mut b = BTreeMap::new();
        b.insert(Variable::x(1), g.clone());
        let h = f.substitute(&b).expect("polynomial substitution");
        assert_eq!(h, g.mul(&g));
    }

    #[test]
    fn substitute_meets_cutoffs() {
        let f = var(Variable::x(1), Some(9));
        let mut b = BTreeMap::new();
        b.insert(Variable::x(1), var(Variable::y(1), Some(4)));
        assert_eq!(f.substitute(&b).expect("ok").cutoff(), Some(4));
    }

    #[test]
    fn unused_binding_cutoffs_are_ignored() {
        let f = var(Variable::x(1), Some(9));
        let mut b = BTreeMap::new();
        b.insert(Variable::x(2), var(Variable::y(1), Some(2)));
        assert_eq!(f.substitute(&b).expect("ok").cutoff(), Some(9));
    }

    #[test]
    fn constant_term_into_truncated_series_is_rejected() {
        let f = var(Variable::x(1), Some(5));
        let mut b = BTreeMap::new();
        b.insert(
            Variable::x(1),
            var(Variable::y(1), Some(5)).add(&TruncatedSeries::one(Some(5))),
        );
        assert!(matches!(
            f.substitute(&b),
            Err(SeriesError::DivergentSubstitution(_))
        ));
        // ...but fine when the target is exact.
        let g = var(Variable::x(1), None).scale(&q_int(3));
        let h = g.substitute(&b).expect("polynomial target");
        assert_eq!(h.cutoff(), Some(5));
    }

    #[test]
    fn negative_exponent_substitution_is_rejected() {
        let beta_inv = TruncatedSeries::monomial(
            crate::monomial::Monomial::var_pow(Variable::beta(), -1),
            q_int(1),
            None,
        );
        let mut b = BTreeMap::new();
        b.insert(Variable::beta(), TruncatedSeries::one(None));
        assert!(matches!(
            beta_inv.substitute(&b),
            Err(SeriesError::NegativeExponentSubstitution(_))
        ));
    }
}
