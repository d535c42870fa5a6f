//! The formal group law enum and its series operations.

use series_core::{meet, Q, SeriesError, SeriesResult, TruncatedSeries, Variable};

/// The multiplicative parameter: symbolic beta or a fixed rational value.
#[derive(Clone, Debug, PartialEq)]
pub enum BetaParameter {
    Symbolic,
    Value(Q),
}

impl BetaParameter {
    /// The parameter as an exact series.
    fn to_series(&self) -> TruncatedSeries {
        match self {
            BetaParameter::Symbolic => TruncatedSeries::variable(Variable::beta(), None),
            BetaParameter::Value(q) => TruncatedSeries::constant(q.clone(), None),
        }
    }
}

/// A one-dimensional commutative formal group law.
#[derive(Clone, Debug, PartialEq)]
pub enum FormalGroupLaw {
    Additive,
    Multiplicative(BetaParameter),
    UniversalRational,
}

impl FormalGroupLaw {
    /// F(f, g) for series of positive valuation. For the universal law the
    /// result is an infinite series, so the inputs must carry a cutoff.
    pub fn formal_sum(
        &self,
        f: &TruncatedSeries,
        g: &TruncatedSeries,
    ) -> SeriesResult<TruncatedSeries> {
        self.check_positive_valuation(f)?;
        self.check_positive_valuation(g)?;
        match self {
            FormalGroupLaw::Additive => Ok(f.add(g)),
            FormalGroupLaw::Multiplicative(beta) => {
                Ok(f.add(g).add(&beta.to_series().mul(&f.mul(g))))
            }
            FormalGroupLaw::UniversalRational => {
                let cutoff = self.require_cutoff(meet(f.cutoff(), g.cutoff()), "formal_sum")?;
                let s = self.logarithm(f, cutoff).add(&self.logarithm(g, cutoff));
                Ok(self.exponential(&s, cutoff))
            }
        }
    }

    /// The formal inverse: the unique series with F(f, inverse(f)) = 0.
    pub fn formal_inverse(&self, f: &TruncatedSeries) -> SeriesResult<TruncatedSeries> {
        self.check_positive_valuation(f)?;
        match self {
            FormalGroupLaw::Additive => Ok(f.neg()),
            FormalGroupLaw::Multiplicative(beta) => {
                // inverse = -f / (1 + beta*f)
                let beta_f = beta.to_series().mul(f);
                if beta_f.is_zero() {
                    return Ok(f.neg());
                }
                let cutoff = self.require_cutoff(f.cutoff(), "formal_inverse")?;
                let unit = TruncatedSeries::one(Some(cutoff)).add(&beta_f);
                Ok(f.neg().mul(&unit.invert_unit(cutoff)?))
            }
            FormalGroupLaw::UniversalRational => {
                let cutoff = self.require_cutoff(f.cutoff(), "formal_inverse")?;
                Ok(self.exponential(&self.logarithm(f, cutoff).neg(), cutoff))
            }
        }
    }

    /// F(f, inverse(g)): the recurring cross factor x +_F ybar.
    pub fn formal_difference(
        &self,
        f: &TruncatedSeries,
        g: &TruncatedSeries,
    ) -> SeriesResult<TruncatedSeries> {
        if let FormalGroupLaw::UniversalRational = self {
            // One exponential instead of two: exp(log f - log g).
            self.check_positive_valuation(f)?;
            self.check_positive_valuation(g)?;
            let cutoff = self.require_cutoff(meet(f.cutoff(), g.cutoff()), "formal_difference")?;
            let s = self.logarithm(f, cutoff).sub(&self.logarithm(g, cutoff));
            return Ok(self.exponential(&s, cutoff));
        }
        self.formal_sum(f, &self.formal_inverse(g)?)
    }

    /// The law coefficient a_ij, extracted from F on two scratch variables.
    /// Coefficients are weight-homogeneous, hence exact polynomials in the
    /// law parameters.
    pub fn coefficient_aij(&self, i: u32, j: u32) -> TruncatedSeries {
        let d = i + j;
        let u = TruncatedSeries::variable(Variable::x(1), Some(d));
        let v = TruncatedSeries::variable(Variable::x(2), Some(d));
        let f = self
            .formal_sum(&u, &v)
            .expect("scratch variables have positive valuation");
        let c = f
            .coeff_of_var_power(Variable::x(1), i)
            .coeff_of_var_power(Variable::x(2), j);
        // The coefficient of u^i v^j sits exactly at degree i+j = cutoff,
        // so it is known completely: promote to an exact polynomial.
        TruncatedSeries::from_terms(c.terms().map(|(m, q)| (m.clone(), q.clone())), None)
    }

    /// The factorial power `[t|b]^k` (doubled: `[[t|b]]^k`), built on the
    /// standard coefficient sequence b_1, b_2, ...
    pub fn factorial_power(
        &self,
        t: &TruncatedSeries,
        k: u32,
        doubled: bool,
    ) -> SeriesResult<TruncatedSeries> {
        let cutoff = t.cutoff();
        if k == 0 {
            return Ok(TruncatedSeries::one(cutoff));
        }
        let bs: Vec<TruncatedSeries> = if doubled {
            std::iter::once(t.clone())
                .chain((1..=(k as i64 - 1)).map(|i| TruncatedSeries::variable(Variable::b(i), cutoff)))
                .collect()
        } else {
            (1..=k as i64)
                .map(|i| TruncatedSeries::variable(Variable::b(i), cutoff))
                .collect()
        };
        self.factorial_power_with(t, &bs)
    }

    /// The generalized factorial power `prod_i (t +_F bs[i])` for an
    /// arbitrary shift sequence (used by the doubled factorial powers and
    /// the two-sided sequence b_n, b_{n-1}, ..., which runs into indices
    /// <= 0).
    pub fn factorial_power_with(
        &self,
        t: &TruncatedSeries,
        bs: &[TruncatedSeries],
    ) -> SeriesResult<TruncatedSeries> {
        let mut acc = TruncatedSeries::one(t.cutoff());
        for b in bs {
            acc = acc.mul(&self.formal_sum(t, b)?);
        }
        Ok(acc)
    }

    /// log(f) = f + sum_k m_k f^{k+1} truncated at `cutoff` (universal law
    /// only).
    fn logarithm(&self, f: &TruncatedSeries, cutoff: u32) -> TruncatedSeries {
        let mut acc = f.truncated(cutoff);
        if acc.is_zero() {
            return acc;
        }
        let val = f.val_lb().max(1);
        let mut fk = f.truncated(cutoff).mul(f); // f^2
        let mut k = 1i64;
        while (k as u32 + 1) * val <= cutoff {
            let mk = TruncatedSeries::variable(Variable::m(k), None);
            acc = acc.add(&mk.mul(&fk));
            fk = fk.mul(f);
            k += 1;
        }
        acc.truncated(cutoff)
    }

    /// exp(s): the compositional inverse of the logarithm, via the fixed
    /// point E = s - sum_k m_k E^{k+1}, which gains one degree of accuracy
    /// per iteration.
    fn exponential(&self, s: &TruncatedSeries, cutoff: u32) -> TruncatedSeries {
        let mut e = s.truncated(cutoff);
        for _ in 0..cutoff {
            let log_e = self.logarithm(&e, cutoff);
            e = e.add(&s.truncated(cutoff).sub(&log_e));
        }
        debug_assert!(
            self.logarithm(&e, cutoff).agrees_with(&s.truncated(cutoff)),
            "exponential fixed point did not converge"
        );
        e
    }

    fn check_positive_valuation(&self, f: &TruncatedSeries) -> SeriesResult<()> {
        if f.val_lb() == 0 {
            return Err(SeriesError::DivergentSubstitution(
                "formal group law arguments must have positive valuation".to_string(),
            ));
        }
        Ok(())
    }

    fn require_cutoff(&self, cutoff: Option<u32>, op: &str) -> SeriesResult<u32> {
        cutoff.ok_or_else(|| {
            SeriesError::InsufficientPrecision(format!(
                "{op} over this law is an infinite series; truncate the inputs"
            ))
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use series_core::q_int;

    fn x(i: i64, cutoff: u32) -> TruncatedSeries {
        TruncatedSeries::variable(Variable::x(i), Some(cutoff))
    }

    fn all_laws() -> Vec<FormalGroupLaw> {
        vec![
            FormalGroupLaw::Additive,
            FormalGroupLaw::Multiplicative(BetaParameter::Symbolic),
            FormalGroupLaw::Multiplicative(BetaParameter::Value(q_int(-1))),
            FormalGroupLaw::UniversalRational,
        ]
    }

    #[test]
    fn multiplicative_sum_and_inverse() {
        let law = FormalGroupLaw::Multiplicative(BetaParameter::Symbolic);
        let f = law.formal_sum(&x(1, 4), &x(2, 4)).expect("ok");
        let beta = TruncatedSeries::variable(Variable::beta(), Some(4));
        let expected = x(1, 4).add(&x(2, 4)).add(&beta.mul(&x(1, 4)).mul(&x(2, 4)));
        assert!(f.agrees_with(&expected));
        // inverse(b1) = -b1 + beta*b1^2 - beta^2*b1^3 + ...
        let b1 = TruncatedSeries::variable(Variable::b(1), Some(3));
        let inv = law.formal_inverse(&b1).expect("ok");
        let expected = b1
            .neg()
            .add(&beta.truncated(3).mul(&b1.pow(2)))
            .sub(&beta.truncated(3).pow(2).mul(&b1.pow(3)));
        assert!(inv.agrees_with(&expected));
    }

    #[test]
    fn universal_law_coefficients_match_hand_expansion() {
        // By hand from F = exp(log u + log v) with
        // log t = t + m1 t^2 + m2 t^3 + ...:
        //   exp(s) = s - m1 s^2 + (2 m1^2 - m2) s^3 + ...
        //   a_11 = -2 m1,  a_12 = a_21 = 4 m1^2 - 3 m2,  a_20 = a_02 = 0.
        let law = FormalGroupLaw::UniversalRational;
        let m1 = TruncatedSeries::variable(Variable::m(1), None);
        let m2 = TruncatedSeries::variable(Variable::m(2), None);
        assert_eq!(law.coefficient_aij(1, 0), TruncatedSeries::one(None));
        assert_eq!(law.coefficient_aij(0, 1), TruncatedSeries::one(None));
        assert!(law.coefficient_aij(2, 0).is_zero());
        assert_eq!(law.coefficient_aij(1, 1), m1.scale(&q_int(-2)));
        let a12 = m1.pow(2).scale(&q_int(4)).sub(&m2.scale(&q_int(3)));
        assert_eq!(law.coefficient_aij(1, 2), a12);
        assert_eq!(law.coefficient_aij(2, 1), a12);
    }

    #[test]
    fn universal_inverse_starts_minus_t_minus_2m1_t2() {
        let law = FormalGroupLaw::UniversalRational;
        let b1 = TruncatedSeries::variable(Variable::b(1), Some(3));
        let inv = law.formal_inverse(&b1).expect("ok");
        let m1 = TruncatedSeries::variable(Variable::m(1), Some(3));
        // By hand: exp(-log t) = -t - 2 m1 t^2 - 4 m1^2 t^3 + ... (the m2
        // contribution cancels in degree 3).
        let expected = b1
            .neg()
            .sub(&m1.mul(&b1.pow(2)).scale(&q_int(2)))
            .sub(&m1.pow(2).mul(&b1.pow(3)).scale(&q_int(4)));
        assert!(inv.agrees_with(&expected));
    }

    #[test]
    fn specializing_mk_to_zero_recovers_the_additive_law() {
        let law = FormalGroupLaw::UniversalRational;
        let f = law.formal_sum(&x(1, 4), &x(2, 4)).expect("ok");
        let additive = FormalGroupLaw::Additive.formal_sum(&x(1, 4), &x(2, 4)).expect("ok");
        let mut at_zero = f;
        for k in 1..4 {
            at_zero = at_zero.set_var_zero(Variable::m(k));
        }
        assert!(at_zero.agrees_with(&additive));
    }

    #[test]
    fn factorial_powers_match_definitions() {
        for law in all_laws() {
            let t = x(1, 5);
            let b = |i: i64| TruncatedSeries::variable(Variable::b(i), Some(5));
            // [t|b]^2 = (t +_F b1)(t +_F b2)
            let undoubled = law.factorial_power(&t, 2, false).expect("ok");
            let expected = law
                .formal_sum(&t, &b(1))
                .expect("ok")
                .mul(&law.formal_sum(&t, &b(2)).expect("ok"));
            assert!(undoubled.agrees_with(&expected));
            // [[t|b]]^3 = (t +_F t)(t +_F b1)(t +_F b2)
            let doubled = law.factorial_power(&t, 3, true).expect("ok");
            let expected = law
                .formal_sum(&t, &t)
                .expect("ok")
                .mul(&law.formal_sum(&t, &b(1)).expect("ok"))
                .mul(&law.formal_sum(&t, &b(2)).expect("ok"));
            assert!(doubled.agrees_with(&expected));
            assert!(law
                .factorial_power(&t, 0, false)
                .expect("ok")
                .agrees_with(&TruncatedSeries::one(Some(5))));
            // [[t|b]]^1 = t +_F t
            let d1 = law.factorial_power(&t, 1, true).expect("ok");
            assert!(d1.agrees_with(&law.formal_sum(&t, &t).expect("ok")));
        }
    }

    #[test]
    fn exact_inputs_are_preserved_where_the_law_is_polynomial() {
        let add = FormalGroupLaw::Additive;
        let s = add
            .formal_sum(
                &TruncatedSeries::variable(Variable::x(1), None),
                &TruncatedSeries::variable(Variable::x(2), None),
            )
            .expect("ok");
        assert_eq!(s.cutoff(), None);
        let mult = FormalGroupLaw::Multiplicative(BetaParameter::Symbolic);
        let s = mult
            .formal_sum(
                &TruncatedSeries::variable(Variable::x(1), None),
                &TruncatedSeries::variable(Variable::x(2), None),
            )
            .expect("ok");
        assert_eq!(s.cutoff(), None);
        assert!(matches!(
            FormalGroupLaw::UniversalRational.formal_sum(
                &TruncatedSeries::variable(Variable::x(1), None),
                &TruncatedSeries::variable(Variable::x(2), None),
            ),
            Err(SeriesError::InsufficientPrecision(_))
        ));
    }
}
