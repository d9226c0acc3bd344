use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::oracle::*;
use super::*;
use crate::classes::{check_classical, ClassicalProperty};
use crate::error::Error;
use crate::games::{
    family, parse_game, random, ClassicalGame, Coalition, FamilyKind, IntervalGame, IntervalPayoffVector, PayoffVector,
};
use crate::numerics::Scalar;

fn game(text: &str) -> IntervalGame {
    parse_game(text).unwrap()
}

fn worked() -> IntervalGame {
    game("players 2\n1 [1, 3]\n2 [1, 3]\n1,2 [1, 4]\n")
}

fn unit_pair() -> IntervalGame {
    game("players 2\n1 [0, 1]\n2 [0, 1]\n1,2 [0, 2]\n")
}

fn strong3() -> IntervalGame {
    game("players 3\n1 [0, 1]\n2 [0, 1]\n3 [0, 1]\n1,2 [0, 2]\n1,3 [0, 2]\n2,3 [0, 2]\n1,2,3 3\n")
}

fn pv(text: &str) -> PayoffVector {
    text.parse().unwrap()
}

fn majority3() -> ClassicalGame {
    ClassicalGame::from_fn(3, |s| Scalar::from(u32::from(s.len() >= 2))).unwrap()
}

#[test]
fn classical_imputation_and_core() {
    let v = ClassicalGame::from_fn(2, |s| Scalar::from(if s.len() == 2 { 4 } else { 2 })).unwrap();
    assert!(is_imputation(&v, &pv("2,2")).unwrap());
    assert!(is_core_member(&v, &pv("2,2")).unwrap());
    assert!(!is_imputation(&v, &pv("2,1")).unwrap());
    assert!(matches!(is_imputation(&v, &pv("2,2,0")), Err(Error::Dimension { .. })));

    let m = majority3();
    assert!(core_nonempty(&m).is_none());
    assert!(!is_core_member(&m, &pv("1/3,1/3,1/3")).unwrap());

    let weights = [Scalar::from(1), Scalar::from(-2), Scalar::from(5)];
    let a = ClassicalGame::additive(&weights).unwrap();
    let x = PayoffVector::new(weights.to_vec());
    assert!(is_imputation(&a, &x).unwrap());
    assert!(is_core_member(&a, &x).unwrap());
    assert_eq!(core_nonempty(&a), Some(x));
    assert!(core_nonempty(&ClassicalGame::zero(3).unwrap()).is_some());
}

#[test]
fn worked_example() {
    let w = worked();
    let x = pv("2,2");
    assert!(is_selection_core_member(&w, &x).unwrap());
    let witness = selection_core_witness(&w, &x).unwrap().unwrap();
    assert!(w.is_selection(&witness.selection));
    assert!(is_core_member(&witness.selection, &x).unwrap());
    assert!(gen_membership(&w, &x).unwrap().is_none());
    let rows = gen_failing_rows(&w, &x).unwrap().unwrap();
    assert_eq!(
        rows,
        [
            GenRow::LowerEfficiency,
            GenRow::Lower(Coalition::from_players(&[1])),
            GenRow::Lower(Coalition::from_players(&[2])),
            GenRow::UpperEfficiency,
            GenRow::Upper(Coalition::from_players(&[2])),
        ]
    );

    let verdict = core_coincidence(&w, DEFAULT_COINCIDENCE_BUDGET).unwrap();
    assert!(!verdict.coincident);
    assert_eq!(verdict.vertices, 3);
    let c = verdict.counterexample.unwrap();
    assert_eq!(c, pv("1,1"));
    assert!(is_selection_core_member(&w, &c).unwrap());
    assert!(gen_membership(&w, &c).unwrap().is_none());

    assert!(is_selection_imputation(&w, &x).unwrap());
    assert!(!is_selection_imputation(&w, &pv("0,0")).unwrap());
    assert!(selection_imputation_witness(&w, &pv("0,0")).unwrap().is_none());
    assert!(!is_strong_core_member(&w, &x).unwrap());
    assert!(strong_core_nonempty(&w).is_none());
}

#[test]
fn unit_pair_selection_core() {
    let w = unit_pair();
    let x = pv("2,0");
    let witness = selection_core_witness(&w, &x).unwrap().unwrap();
    assert!(is_core_member(&witness.selection, &x).unwrap());
    assert_eq!(
        witness.subgame.worth(Coalition::from_players(&[2])).to_string(),
        "[0, 0]"
    );
    assert!(selection_core_oracle(&w, &x).unwrap());

    let verdict = core_coincidence(&w, DEFAULT_COINCIDENCE_BUDGET).unwrap();
    assert!(!verdict.coincident);
    assert_eq!(verdict.counterexample, Some(pv("0,2")));
    assert!(gen_membership(&w, &pv("2,0")).unwrap().is_none());
    assert!(gen_membership(&w, &pv("0,0")).unwrap().is_some());
}

#[test]
fn interval_imputations_and_core() {
    let w = game("players 2\n1 [0, 1]\n2 [0, 1]\n1,2 [2, 3]\n");
    let i: IntervalPayoffVector = "[1, 3/2] [1, 3/2]".parse().unwrap();
    assert!(is_interval_imputation(&w, &i).unwrap());
    assert!(is_interval_core_member(&w, &i).unwrap());
    assert!("[0, 3] [2, 0]".parse::<IntervalPayoffVector>().is_err());

    let degenerate: IntervalPayoffVector = "[2, 2] [2, 2]".parse().unwrap();
    assert!(!is_interval_core_member(&worked(), &degenerate).unwrap());
}

#[test]
fn degenerate_embedding_coincides() {
    let v = ClassicalGame::additive(&[Scalar::from(1), Scalar::from(2), Scalar::from(3)]).unwrap();
    let verdict = core_coincidence(&v.embed(), DEFAULT_COINCIDENCE_BUDGET).unwrap();
    assert!(verdict.coincident);
    assert_eq!(verdict.vertices, 1);

    let empty = majority3().embed();
    let verdict = core_coincidence(&empty, DEFAULT_COINCIDENCE_BUDGET).unwrap();
    assert!(verdict.coincident);
    assert_eq!(verdict.vertices, 0);
}

#[test]
fn coincidence_respects_budget() {
    let w = family(FamilyKind::SelectionConvex, 5).unwrap();
    assert!(matches!(core_coincidence(&w, 4), Err(Error::Budget { budget: 4, .. })));
}

#[test]
fn strong_concepts() {
    let w = strong3();
    let x = pv("1,1,1");
    assert!(is_strong_imputation(&w, &x).unwrap());
    assert!(is_strong_core_member(&w, &x).unwrap());
    assert!(strong_core_oracle(&w, &x).unwrap());
    assert!(strong_imputation_oracle(&w, &x).unwrap());
    assert_eq!(strong_core_nonempty(&w), Some(x.clone()));
    assert_eq!(strong_core_vertices(&w).unwrap().vertices(), [x.as_slice().to_vec()]);
    let zero = GenWitness {
        l: pv("0,0,0"),
        u: pv("0,0,0"),
    };
    assert!(zero.verify(&w, &x));
    assert!(is_strongly_balanced(&w));
    assert!(strongly_balanced_oracle(&w).unwrap());

    assert!(!is_strong_imputation(&worked(), &pv("2,2")).unwrap());
    assert!(strong_imputation_nonempty(&worked()).is_none());
    assert_eq!(strong_imputation_nonempty(&w), Some(pv("1,1,1")));
    assert!(strong_core_vertices(&worked()).unwrap().is_empty());
}

#[test]
fn strong_balancedness_examples() {
    assert!(!is_strongly_balanced(&majority3().embed()));
    assert!(!strongly_balanced_oracle(&majority3().embed()).unwrap());
    let w = game("players 2\n1 0\n2 0\n1,2 [1, 2]\n");
    assert!(is_strongly_balanced(&w));
    assert!(strong_core_nonempty(&w).is_none());
}

#[test]
fn additive_border_games_generate_the_lower_vector() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for n in 1..=4 {
        let w = random::additive_border_game(&mut rng, n);
        let q: PayoffVector = (0..n).map(|i| w.lower(Coalition::singleton(i)).clone()).collect();
        let proof = GenWitness {
            l: (0..n).map(|_| Scalar::zero()).collect(),
            u: (0..n).map(|i| w.worth(Coalition::singleton(i)).width()).collect(),
        };
        assert!(proof.verify(&w, &q));
        assert!(gen_membership(&w, &q).unwrap().is_some());
    }
}

#[test]
fn truncated_selection_convex_family_has_strong_core() {
    for n in 2..=5 {
        let w = family(FamilyKind::SelectionConvex, n).unwrap().truncate_grand();
        let x = strong_core_nonempty(&w).unwrap();
        assert!(is_strong_core_member(&w, &x).unwrap());
    }
}

#[test]
fn oracles_enforce_budget() {
    let w = family(FamilyKind::SelectionConvex, 5).unwrap();
    let x = pv("0,0,0,0,0");
    assert!(matches!(selection_core_oracle(&w, &x), Err(Error::Budget { .. })));
    let w4 = family(FamilyKind::SelectionConvex, 4).unwrap();
    assert!(matches!(strongly_balanced_oracle(&w4), Err(Error::Budget { .. })));
}

fn random_game(seed: u64, n: usize) -> IntervalGame {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match seed % 3 {
        0 => random::interval_game(&mut rng, n),
        1 => random::structured_interval_game(&mut rng, n),
        _ => random::balanced_interval_game(&mut rng, n),
    }
}

fn random_point(rng: &mut ChaCha8Rng, n: usize) -> PayoffVector {
    (0..n).map(|_| random::rational(rng, -8, 40, 2)).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn closed_forms_match_endpoint_oracles(seed in any::<u64>(), n in 1usize..=3) {
        let w = random_game(seed, n);
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
        let mut points: Vec<PayoffVector> = selection_core_vertices(&w)
            .unwrap()
            .into_vertices()
            .into_iter()
            .map(PayoffVector::new)
            .collect();
        points.extend((0..8).map(|_| random_point(&mut rng, n)));
        if let Some(x) = strong_core_nonempty(&w) {
            points.push(x);
        }
        for x in &points {
            prop_assert_eq!(is_selection_core_member(&w, x).unwrap(), selection_core_oracle(&w, x).unwrap());
            prop_assert_eq!(is_selection_imputation(&w, x).unwrap(), selection_imputation_oracle(&w, x).unwrap());
            prop_assert_eq!(is_strong_core_member(&w, x).unwrap(), strong_core_oracle(&w, x).unwrap());
            prop_assert_eq!(is_strong_imputation(&w, x).unwrap(), strong_imputation_oracle(&w, x).unwrap());
        }
    }

    #[test]
    fn generated_vectors_lie_in_the_selection_core(seed in any::<u64>(), n in 1usize..=4) {
        let w = random_game(seed, n);
        for v in selection_core_vertices(&w).unwrap().vertices() {
            let x = PayoffVector::new(v.clone());
            if let Some(witness) = gen_membership(&w, &x).unwrap() {
                prop_assert!(witness.verify(&w, &x));
                prop_assert!(is_selection_core_member(&w, &x).unwrap());
            } else {
                prop_assert!(!gen_failing_rows(&w, &x).unwrap().unwrap().is_empty());
            }
        }
    }

    #[test]
    fn coincidence_verdict_is_consistent(seed in any::<u64>(), n in 1usize..=3) {
        let w = random_game(seed, n);
        let verdict = core_coincidence(&w, DEFAULT_COINCIDENCE_BUDGET).unwrap();
        prop_assert_eq!(verdict.coincident, verdict.counterexample.is_none());
        if let Some(c) = &verdict.counterexample {
            prop_assert!(is_selection_core_member(&w, c).unwrap());
            prop_assert!(gen_membership(&w, c).unwrap().is_none());
        }
    }

    #[test]
    fn strong_core_characterization(seed in any::<u64>(), n in 1usize..=4, force in any::<bool>()) {
        let mut w = random_game(seed, n);
        if force {
            w = w.truncate_grand();
        }
        let vertices = strong_core_vertices(&w).unwrap();
        prop_assert_eq!(strong_core_nonempty(&w).is_some(), !vertices.is_empty());
        let zero: PayoffVector = (0..n).map(|_| Scalar::zero()).collect();
        for v in vertices.vertices() {
            let x = PayoffVector::new(v.clone());
            prop_assert!(is_strong_core_member(&w, &x).unwrap());
            let witness = GenWitness { l: zero.clone(), u: zero.clone() };
            prop_assert!(witness.verify(&w, &x));
        }
        prop_assert_eq!(
            strong_imputation_nonempty(&w).is_some(),
            w.worth(w.grand()).is_degenerate()
                && (0..n).map(|i| w.upper(Coalition::singleton(i)).clone()).sum::<Scalar>() <= *w.lower(w.grand())
        );
    }

    #[test]
    fn strong_balancedness_matches_oracle(seed in any::<u64>(), n in 1usize..=3) {
        let w = random_game(seed, n);
        prop_assert_eq!(is_strongly_balanced(&w), strongly_balanced_oracle(&w).unwrap());
    }

    #[test]
    fn convex_games_have_nonempty_cores(seed in any::<u64>(), n in 1usize..=4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let v = random::classical_game(&mut rng, n);
        if check_classical(&v, ClassicalProperty::Convex) {
            prop_assert!(core_nonempty(&v).is_some());
        }
    }

    #[test]
    fn embedding_collapses_solution_concepts(seed in any::<u64>(), n in 1usize..=3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let v = random::classical_game(&mut rng, n);
        let w = v.embed();
        let mut points: Vec<PayoffVector> = (0..6).map(|_| random_point(&mut rng, n)).collect();
        if let Some(x) = core_nonempty(&v) {
            points.push(x);
        }
        for x in &points {
            let core = is_core_member(&v, x).unwrap();
            prop_assert_eq!(is_selection_core_member(&w, x).unwrap(), core);
            prop_assert_eq!(gen_membership(&w, x).unwrap().is_some(), core);
            prop_assert_eq!(is_strong_core_member(&w, x).unwrap(), core);
            prop_assert_eq!(is_strong_imputation(&w, x).unwrap(), is_imputation(&v, x).unwrap());
        }
        prop_assert!(core_coincidence(&w, DEFAULT_COINCIDENCE_BUDGET).unwrap().coincident);
        prop_assert_eq!(is_strongly_balanced(&w), core_nonempty(&v).is_some());
    }
}
