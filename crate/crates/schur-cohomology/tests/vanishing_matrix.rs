//! The vanishing theorem over a full grid of shape pairs: P_lambda and
//! Q_lambda evaluated at the point attached to mu vanish exactly when mu
//! does not contain lambda, and on the diagonal mu = lambda the value is
//! the nonzero closed product.

use fgl_provider::{BetaParameter, FormalGroupLaw};
use schur_cohomology::{
    diagonal_value_p, diagonal_value_q, evaluate_vanishing, PqKind, StrictPartition,
};

fn check_grid(law: &FormalGroupLaw, max_weight: u32, d: u32) {
    let shapes = StrictPartition::up_to_weight(max_weight);
    for lambda in &shapes {
        for mu in &shapes {
            for kind in [PqKind::P, PqKind::Q] {
                let report = evaluate_vanishing(law, kind, lambda, mu, d).unwrap();
                assert_eq!(report.must_vanish, !lambda.contained_in(mu));
                if report.must_vanish {
                    assert!(
                        report.value.is_zero(),
                        "{kind:?}_{lambda} at the {mu} point should vanish, got {}",
                        report.value
                    );
                }
            }
        }
        for kind in [PqKind::P, PqKind::Q] {
            let report = evaluate_vanishing(law, kind, lambda, lambda, d).unwrap();
            let closed = match kind {
                PqKind::P => diagonal_value_p(law, lambda, d).unwrap(),
                PqKind::Q => diagonal_value_q(law, lambda, d).unwrap(),
            };
            assert!(
                report.value.sub(&closed).is_zero(),
                "{kind:?}_{lambda} diagonal: evaluated {} vs closed {}",
                report.value,
                closed
            );
            assert!(
                !closed.is_zero(),
                "{kind:?}_{lambda} diagonal product should be nonzero"
            );
        }
    }
}

#[test]
fn vanishing_grid_additive() {
    check_grid(&FormalGroupLaw::Additive, 4, 5);
}

#[test]
fn vanishing_grid_multiplicative() {
    check_grid(
        &FormalGroupLaw::Multiplicative(BetaParameter::Symbolic),
        4,
        5,
    );
}

#[test]
fn vanishing_grid_universal() {
    check_grid(&FormalGroupLaw::UniversalRational, 3, 4);
}
