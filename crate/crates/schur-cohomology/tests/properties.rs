//! Property-based invariants: stability in the number of variables and
//! round-trips through the basis expansion.
//!
//! The universal law is exercised deterministically on one small case;
//! its four-variable series blow up far beyond proptest budgets.

use std::collections::BTreeMap;

use fgl_provider::{BetaParameter, FormalGroupLaw};
use proptest::prelude::*;
use schur_cohomology::{expand_in_strict_basis, schur_p, schur_q, StrictPartition};
use series_core::{q_int, TruncatedSeries, Variable};

const D: u32 = 4;

fn arb_cheap_law() -> impl Strategy<Value = FormalGroupLaw> {
    prop_oneof![
        Just(FormalGroupLaw::Additive),
        Just(FormalGroupLaw::Multiplicative(BetaParameter::Symbolic)),
        Just(FormalGroupLaw::Multiplicative(BetaParameter::Value(q_int(
            1
        )))),
    ]
}

fn arb_shape() -> impl Strategy<Value = StrictPartition> {
    prop_oneof![
        Just(StrictPartition::new(vec![1]).unwrap()),
        Just(StrictPartition::new(vec![2]).unwrap()),
        Just(StrictPartition::new(vec![3]).unwrap()),
        Just(StrictPartition::new(vec![2, 1]).unwrap()),
        Just(StrictPartition::new(vec![3, 1]).unwrap()),
    ]
}

fn assert_q_one_stable(law: &FormalGroupLaw, lambda: &StrictPartition, d: u32, factorial: bool) {
    let wide = schur_q(law, lambda, 3, d, factorial).unwrap();
    let narrow = schur_q(law, lambda, 2, d, factorial).unwrap();
    let restricted = wide.set_var_zero(Variable::x(3));
    assert!(
        restricted.sub(&narrow).is_zero(),
        "witness {:?}",
        restricted.difference_witness(&narrow)
    );
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10))]

    /// Q is stable under appending a single zero variable.
    #[test]
    fn q_is_one_stable(law in arb_cheap_law(), lambda in arb_shape(), factorial in any::<bool>()) {
        assert_q_one_stable(&law, &lambda, D, factorial);
    }

    /// Expanding a known combination of Q's recovers its coefficients.
    #[test]
    fn expansion_round_trip(
        law in prop_oneof![
            Just(FormalGroupLaw::Additive),
            Just(FormalGroupLaw::Multiplicative(BetaParameter::Symbolic)),
        ],
        c1 in -2i64..3,
        c2 in -2i64..3,
        c21 in -2i64..3,
        factorial in any::<bool>(),
    ) {
        let n = 2;
        let shapes = [vec![1u32], vec![2], vec![2, 1]];
        let coeffs = [c1, c2, c21];
        let mut f = TruncatedSeries::zero(Some(D));
        let mut expected: BTreeMap<StrictPartition, i64> = BTreeMap::new();
        for (parts, &c) in shapes.iter().zip(&coeffs) {
            if c == 0 {
                continue;
            }
            let shape = StrictPartition::new(parts.clone()).unwrap();
            let basis = schur_q(&law, &shape, n, D, factorial).unwrap();
            f = f.add(&basis.scale(&q_int(c)));
            expected.insert(shape, c);
        }
        let expansion =
            expand_in_strict_basis(&f, n, true, |shape| schur_q(&law, shape, n, D, factorial))
                .unwrap();
        for (shape, series) in &expansion {
            let want = expected.remove(shape).unwrap_or(0);
            let diff = series.sub(&TruncatedSeries::constant(q_int(want), series.cutoff()));
            prop_assert!(diff.is_zero(), "coefficient of {shape} is {series}, want {want}");
        }
        for (shape, want) in expected {
            prop_assert_eq!(want, 0, "missing coefficient for {}", shape);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(6))]

    /// P is stable under appending a pair of zero variables.
    #[test]
    fn p_is_two_stable(
        law in prop_oneof![
            Just(FormalGroupLaw::Additive),
            Just(FormalGroupLaw::Multiplicative(BetaParameter::Value(q_int(1)))),
        ],
        lambda in arb_shape(),
        factorial in any::<bool>(),
    ) {
        let wide = schur_p(&law, &lambda, 4, D, factorial).unwrap();
        let narrow = schur_p(&law, &lambda, 2, D, factorial).unwrap();
        let restricted = wide
            .set_var_zero(Variable::x(4))
            .set_var_zero(Variable::x(3));
        prop_assert!(
            restricted.sub(&narrow).is_zero(),
            "witness {:?}",
            restricted.difference_witness(&narrow)
        );
    }
}

#[test]
fn p_two_stability_multiplicative_symbolic() {
    let law = FormalGroupLaw::Multiplicative(BetaParameter::Symbolic);
    let lambda = StrictPartition::new(vec![2, 1]).unwrap();
    let wide = schur_p(&law, &lambda, 4, 3, true).unwrap();
    let narrow = schur_p(&law, &lambda, 2, 3, true).unwrap();
    let restricted = wide
        .set_var_zero(Variable::x(4))
        .set_var_zero(Variable::x(3));
    assert!(
        restricted.sub(&narrow).is_zero(),
        "witness {:?}",
        restricted.difference_witness(&narrow)
    );
}

#[test]
fn q_one_stability_universal() {
    let law = FormalGroupLaw::UniversalRational;
    let lambda = StrictPartition::new(vec![2, 1]).unwrap();
    for factorial in [false, true] {
        assert_q_one_stable(&law, &lambda, 3, factorial);
    }
}
