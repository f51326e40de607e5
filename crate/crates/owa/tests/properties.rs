//! Property tests for the aggregation axioms and the algebraic identities
//! connecting duals, quantifiers and weight generation.

use owa::{
    dual_weights_from_quantifier, dual_wowa_aggregate, dual_wowa_weights, owa_aggregate,
    weights_from_quantifier, wowa_weights, ArgumentVector, ProbabilityVector, Quantifier,
    WeightVector,
};
use proptest::prelude::*;

fn normalized(raw: Vec<f64>) -> WeightVector {
    let total: f64 = raw.iter().sum();
    WeightVector::new(raw.iter().map(|x| x / total).collect()).unwrap()
}

fn weight_and_args(max_n: usize) -> impl Strategy<Value = (WeightVector, ArgumentVector)> {
    (1..=max_n).prop_flat_map(|n| {
        (
            prop::collection::vec(0.001f64..1.0, n),
            prop::collection::vec(-100.0f64..100.0, n),
        )
            .prop_map(|(raw, args)| (normalized(raw), ArgumentVector::new(args).unwrap()))
    })
}

fn weight_and_unit_args(max_n: usize) -> impl Strategy<Value = (WeightVector, ArgumentVector)> {
    (1..=max_n).prop_flat_map(|n| {
        (
            prop::collection::vec(0.001f64..1.0, n),
            prop::collection::vec(0.0f64..=1.0, n),
        )
            .prop_map(|(raw, args)| {
                (
                    normalized(raw),
                    ArgumentVector::unit_interval(args).unwrap(),
                )
            })
    })
}

/// Closed-form quantifiers; the integral-backed ones are exercised in the
/// slower theorem suite.
fn any_quantifier() -> impl Strategy<Value = Quantifier> {
    prop_oneof![
        Just(Quantifier::identity()),
        Just(Quantifier::all()),
        Just(Quantifier::exists()),
        (0.01f64..=1.0).prop_map(|t| Quantifier::threshold_step(t).unwrap()),
        (0.0f64..0.45, 0.55f64..=1.0)
            .prop_map(|(lo, hi)| Quantifier::trimmed_linear(lo, hi).unwrap()),
        (0.1f64..6.0).prop_map(|r| Quantifier::power(r).unwrap()),
        ((0.1f64..4.0), (0.0f64..1.0)).prop_map(|(r, a)| Quantifier::mixture(
            vec![Quantifier::power(r).unwrap(), Quantifier::identity()],
            vec![a, 1.0 - a],
        )
        .unwrap()),
    ]
}

fn quantifier_p_args(
    max_n: usize,
) -> impl Strategy<Value = (Quantifier, ProbabilityVector, ArgumentVector)> {
    (any_quantifier(), 1..=max_n).prop_flat_map(|(q, n)| {
        (
            Just(q),
            prop::collection::vec(0.0f64..1.0, n),
            prop::collection::vec(-50.0f64..50.0, n),
        )
            .prop_map(|(q, raw, args)| {
                let total: f64 = raw.iter().sum();
                let p = if total > 0.0 {
                    ProbabilityVector::new(raw.iter().map(|x| x / total).collect()).unwrap()
                } else {
                    ProbabilityVector::uniform(raw.len()).unwrap()
                };
                (q, p, ArgumentVector::new(args).unwrap())
            })
    })
}

proptest! {
    #[test]
    fn commutativity((w, args) in weight_and_args(9)) {
        let mut shuffled = args.values().to_vec();
        shuffled.reverse();
        let mid = shuffled.len() / 2;
        if shuffled.len() > 2 {
            shuffled.swap(0, mid);
        }
        let permuted = ArgumentVector::new(shuffled).unwrap();
        prop_assert_eq!(
            owa_aggregate(&args, &w).unwrap(),
            owa_aggregate(&permuted, &w).unwrap()
        );
    }

    #[test]
    fn monotonicity(
        (w, args) in weight_and_args(9),
        bumps in prop::collection::vec(0.0f64..25.0, 9),
    ) {
        let bumped: Vec<f64> = args
            .values()
            .iter()
            .zip(&bumps)
            .map(|(a, d)| a + d)
            .collect();
        let above = ArgumentVector::new(bumped).unwrap();
        prop_assert!(
            owa_aggregate(&above, &w).unwrap() >= owa_aggregate(&args, &w).unwrap() - 1e-9
        );
    }

    #[test]
    fn boundedness_and_idempotency((w, args) in weight_and_args(9), c in -50.0f64..50.0) {
        let v = owa_aggregate(&args, &w).unwrap();
        let lo = args.values().iter().cloned().fold(f64::INFINITY, f64::min);
        let hi = args.values().iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        prop_assert!(v >= lo - 1e-9 && v <= hi + 1e-9);

        let constant = ArgumentVector::new(vec![c; w.len()]).unwrap();
        prop_assert!((owa_aggregate(&constant, &w).unwrap() - c).abs() <= 1e-12 * c.abs().max(1.0));
    }

    #[test]
    fn orness_duality((w, _) in weight_and_args(12)) {
        prop_assert!((w.orness() + w.dual().orness() - 1.0).abs() <= 1e-12);
    }

    #[test]
    fn dispersion_is_reversal_invariant((w, _) in weight_and_args(12)) {
        prop_assert!((w.dispersion() - w.dual().dispersion()).abs() <= 1e-12);
        prop_assert!(w.dispersion() >= 0.0);
        prop_assert!(w.dispersion() <= (w.len() as f64).ln() + 1e-12);
    }

    #[test]
    fn unit_interval_duality((w, args) in weight_and_unit_args(9)) {
        let flipped: Vec<f64> = args.values().iter().map(|a| 1.0 - a).collect();
        let flipped = ArgumentVector::unit_interval(flipped).unwrap();
        let lhs = owa_aggregate(&args, &w).unwrap();
        let rhs = 1.0 - owa_aggregate(&flipped, &w.dual()).unwrap();
        prop_assert!((lhs - rhs).abs() <= 1e-12);
    }

    #[test]
    fn generated_weights_validate_and_dualize(q in any_quantifier(), n in 1usize..=12) {
        let w = weights_from_quantifier(&q, n).unwrap();
        let wd = dual_weights_from_quantifier(&q, n).unwrap();
        // reversal is exact, and both re-validate as weight vectors
        prop_assert_eq!(&wd, &w.dual());
        prop_assert!(WeightVector::new(w.as_slice().to_vec()).is_ok());
        prop_assert!((w.orness() + wd.orness() - 1.0).abs() <= 1e-12);
    }

    #[test]
    fn wowa_uniform_p_matches_rank_construction(q in any_quantifier(), n in 1usize..=10) {
        let p = ProbabilityVector::uniform(n).unwrap();
        let w = wowa_weights(&q, &p).unwrap();
        let rank = weights_from_quantifier(&q, n).unwrap();
        for (a, b) in w.as_slice().iter().zip(rank.as_slice()) {
            prop_assert!((a - b).abs() <= 1e-12);
        }
        let wd = dual_wowa_weights(&q, &p).unwrap();
        let rank_dual = dual_weights_from_quantifier(&q, n).unwrap();
        for (a, b) in wd.as_slice().iter().zip(rank_dual.as_slice()) {
            prop_assert!((a - b).abs() <= 1e-12);
        }
    }

    #[test]
    fn telescoped_aggregate_matches_weight_form((q, p, args) in quantifier_p_args(10)) {
        let telescoped = dual_wowa_aggregate(&q, &p, &args).unwrap();
        let weights = dual_wowa_weights(&q, &p).unwrap();
        let direct = owa_aggregate(&args, &weights).unwrap();
        prop_assert!(
            (telescoped - direct).abs() <= 1e-10,
            "telescoped {} vs weighted {}",
            telescoped,
            direct
        );
    }

    #[test]
    fn wowa_weights_telescope_to_one((q, p, _) in quantifier_p_args(10)) {
        let sum: f64 = wowa_weights(&q, &p).unwrap().iter().sum();
        prop_assert!((sum - 1.0).abs() <= 1e-12);
        let dual_sum: f64 = dual_wowa_weights(&q, &p).unwrap().iter().sum();
        prop_assert!((dual_sum - 1.0).abs() <= 1e-12);
    }
}
