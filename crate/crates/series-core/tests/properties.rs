//! Property-based invariants for truncated series arithmetic.

use std::collections::BTreeMap;

use proptest::prelude::*;
use series_core::{q_ratio, Monomial, TruncatedSeries, Variable};

/// A small pool of variables across all families.
fn variable_pool() -> Vec<Variable> {
    vec![
        Variable::x(1),
        Variable::x(2),
        Variable::y(1),
        Variable::b(-1),
        Variable::b(1),
        Variable::beta(),
        Variable::m(1),
    ]
}

/// Strategy for a monomial of small degree over the pool.
fn arb_monomial() -> impl Strategy<Value = Monomial> {
    proptest::collection::vec((0usize..7, 1i32..3), 0..3).prop_map(|picks| {
        let pool = variable_pool();
        Monomial::from_pairs(picks.into_iter().map(|(i, e)| (pool[i], e)).collect())
    })
}

/// Strategy for a series with a few terms and an optional small cutoff.
fn arb_series() -> impl Strategy<Value = TruncatedSeries> {
    let term = (arb_monomial(), -4i64..5, 1i64..4);
    (proptest::collection::vec(term, 0..5), proptest::option::of(4u32..8)).prop_map(
        |(terms, cutoff)| {
            TruncatedSeries::from_terms(
                terms.into_iter().map(|(m, n, d)| (m, q_ratio(n, d))),
                cutoff,
            )
        },
    )
}

/// Strategy for a unit: 1 + (series of positive valuation).
fn arb_unit() -> impl Strategy<Value = TruncatedSeries> {
    (arb_series(), 4u32..7).prop_map(|(s, d)| {
        let tail = TruncatedSeries::from_terms(
            s.terms()
                .filter(|(m, _)| m.geo_degree() >= 1)
                .map(|(m, c)| (m.clone(), c.clone())),
            Some(d),
        );
        TruncatedSeries::one(Some(d)).add(&tail)
    })
}

proptest! {
    #[test]
    fn addition_commutes(a in arb_series(), b in arb_series()) {
        prop_assert!(a.add(&b).agrees_with(&b.add(&a)));
    }

    #[test]
    fn multiplication_commutes(a in arb_series(), b in arb_series()) {
        prop_assert!(a.mul(&b).agrees_with(&b.mul(&a)));
    }

    #[test]
    fn multiplication_associates(a in arb_series(), b in arb_series(), c in arb_series()) {
        prop_assert!(a.mul(&b).mul(&c).agrees_with(&a.mul(&b.mul(&c))));
    }

    #[test]
    fn multiplication_distributes(a in arb_series(), b in arb_series(), c in arb_series()) {
        prop_assert!(a.mul(&b.add(&c)).agrees_with(&a.mul(&b).add(&a.mul(&c))));
    }

    #[test]
    fn one_is_neutral(a in arb_series()) {
        prop_assert!(a.mul(&TruncatedSeries::one(None)).agrees_with(&a));
    }

    #[test]
    fn truncation_commutes_with_arithmetic(a in arb_series(), b in arb_series(), d in 0u32..6) {
        prop_assert!(a.add(&b).truncated(d).agrees_with(&a.truncated(d).add(&b.truncated(d))));
        // Products of truncated inputs still agree up to the meet of the
        // resulting precisions.
        prop_assert!(a.mul(&b).agrees_with(&a.truncated(d).mul(&b.truncated(d))));
    }

    #[test]
    fn invert_unit_round_trips(u in arb_unit(), d in 3u32..6) {
        let inv = u.invert_unit(d).expect("constructed a unit");
        prop_assert!(u.mul(&inv).agrees_with(&TruncatedSeries::one(Some(d))));
    }

    #[test]
    fn exact_divide_round_trips(a in arb_series(), b in arb_series()) {
        prop_assume!(!b.is_zero());
        let product = a.mul(&b);
        let q = product.exact_divide(&b).expect("dividend is a multiple by construction");
        prop_assert!(q.agrees_with(&a));
    }

    #[test]
    fn substitution_is_a_ring_map(a in arb_series(), b in arb_series()) {
        // x1 -> y1^2 is a safe binding for truncated targets.
        let mut bind = BTreeMap::new();
        bind.insert(Variable::x(1), TruncatedSeries::variable(Variable::y(1), None).pow(2));
        let lhs_add = a.add(&b).substitute(&bind).expect("positive valuation binding");
        let rhs_add = a.substitute(&bind).expect("ok").add(&b.substitute(&bind).expect("ok"));
        prop_assert!(lhs_add.agrees_with(&rhs_add));
        let lhs_mul = a.mul(&b).substitute(&bind).expect("ok");
        let rhs_mul = a.substitute(&bind).expect("ok").mul(&b.substitute(&bind).expect("ok"));
        prop_assert!(lhs_mul.agrees_with(&rhs_mul));
    }

    #[test]
    fn json_is_deterministic(a in arb_series()) {
        let s1 = serde_json::to_string(&a.to_json()).expect("serializable");
        let s2 = serde_json::to_string(&a.clone().to_json()).expect("serializable");
        prop_assert_eq!(s1, s2);
    }
}
