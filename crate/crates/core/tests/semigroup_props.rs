mod common;

use common::*;
use proptest::prelude::*;
use wsbound_core::NumericalSemigroup;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn matches_closure_oracle(gens in coprime_gens()) {
        let s = NumericalSemigroup::from_generators(&gens).unwrap();
        let gaps = brute_gaps(&gens);
        prop_assert_eq!(s.gaps(), gaps.clone());
        prop_assert_eq!(s.genus(), gaps.len() as u64);
        prop_assert_eq!(s.conductor(), gaps.last().map_or(0, |g| g + 1));
        prop_assert!(s.conductor() <= 2 * s.genus());
        let m = closure(&gens, safe_window(&gens));
        prop_assert_eq!(s.multiplicity(), (1..).find(|&n| m[n]).unwrap() as u64);
    }

    #[test]
    fn apery_consistency(gens in coprime_gens()) {
        let s = NumericalSemigroup::from_generators(&gens).unwrap();
        let m = s.multiplicity();
        let ap = s.apery_set(m).unwrap();
        let gaps = brute_gaps(&gens);
        let conductor = ap.iter().max().unwrap() + 1 - m;
        prop_assert_eq!(conductor, gaps.last().map_or(0, |g| g + 1));
        // 2 * sum / m - (m - 1) = 2g
        let sum: u64 = ap.iter().sum();
        prop_assert_eq!(2 * sum / m - (m - 1), 2 * gaps.len() as u64);
    }

    #[test]
    fn minimal_generators_generate(gens in coprime_gens()) {
        let s = NumericalSemigroup::from_generators(&gens).unwrap();
        let mg = s.minimal_generators();
        prop_assert!(mg.iter().all(|g| gens.contains(g)));
        let t = NumericalSemigroup::from_generators(&mg).unwrap();
        prop_assert_eq!(s.gaps(), t.gaps());
        prop_assert_eq!(t.minimal_generators(), mg);
    }

    #[test]
    fn lemma_residual_of_single_shift(gens in coprime_gens(), pick in 1u64..=50) {
        let s = NumericalSemigroup::from_generators(&gens).unwrap();
        prop_assume!(s.genus() <= 40 && s.contains(pick));
        prop_assert_eq!(s.count_residual(&[pick]).unwrap(), pick);
    }

    #[test]
    fn residual_matches_oracle(gens in coprime_gens(), q in 2u64..=5) {
        let s = NumericalSemigroup::from_generators(&gens).unwrap();
        let shifts: Vec<u64> = gens.iter().map(|g| g * q).collect();
        prop_assert_eq!(s.residual_set(&shifts).unwrap(), brute_residual(&gens, &shifts));
    }

    #[test]
    fn more_shifts_never_increase(gens in coprime_gens(), extra in 1u64..=60) {
        let s = NumericalSemigroup::from_generators(&gens).unwrap();
        prop_assume!(s.contains(extra));
        let base = vec![2 * s.multiplicity()];
        let mut more = base.clone();
        more.push(extra);
        prop_assert!(s.count_residual(&more).unwrap() <= s.count_residual(&base).unwrap());
    }
}
