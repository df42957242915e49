use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use fuzzdyn::compacta::hausdorff_distance;
use fuzzdyn::dynamics::{fuzzy_witness, iterate_fuzzy};
use fuzzdyn::fuzzy::{
    d_infty, d_sendo, d_skorokhod, f_entourage_contains, level_partition, partition_holds, skorokhod, warp_apply,
    warp_norm, zadeh_extend, StepFuzzySet,
};
use fuzzdyn::compacta::EntourageRef;
use fuzzdyn::ground::{DynMap, GroundSpace};
use fuzzdyn::io::{fuzzy_set_to_json, parse_fuzzy_set};
use fuzzdyn::random::{random_compactum, random_fuzzy_set, random_warp};
use fuzzdyn::Rational;

fn space(circle: bool) -> GroundSpace {
    if circle {
        GroundSpace::Circle
    } else {
        GroundSpace::UnitInterval
    }
}

fn pair(seed: u64, circle: bool) -> (StepFuzzySet, StepFuzzySet) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let s = space(circle);
    (random_fuzzy_set(&mut rng, &s, 4, 6), random_fuzzy_set(&mut rng, &s, 4, 6))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn hausdorff_is_symmetric_and_zero_on_diagonal(seed in any::<u64>(), circle in any::<bool>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let s = space(circle);
        let a = random_compactum(&mut rng, &s, 8);
        let b = random_compactum(&mut rng, &s, 8);
        prop_assert!(hausdorff_distance(&a, &a).unwrap().is_zero());
        prop_assert_eq!(hausdorff_distance(&a, &b).unwrap(), hausdorff_distance(&b, &a).unwrap());
    }

    #[test]
    fn metrics_are_ordered(seed in any::<u64>(), circle in any::<bool>()) {
        let (u, v) = pair(seed, circle);
        let di = d_infty(&u, &v).unwrap();
        let d0 = d_skorokhod(&u, &v).unwrap();
        let ds = d_sendo(&u, &v).unwrap();
        prop_assert!(d0 <= di);
        prop_assert!(ds <= di);
        prop_assert!(ds <= Rational::new(2, 1) * d0);
    }

    #[test]
    fn skorokhod_warp_attains_distance(seed in any::<u64>(), circle in any::<bool>()) {
        let (u, v) = pair(seed, circle);
        let sol = skorokhod(&u, &v).unwrap();
        let tv = warp_apply(&sol.warp, &v);
        let achieved = d_infty(&u, &tv).unwrap().max(warp_norm(&sol.warp));
        prop_assert_eq!(achieved, sol.distance);
    }

    #[test]
    fn warp_never_beats_dp(seed in any::<u64>()) {
        let (u, v) = pair(seed, false);
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
        let t = random_warp(&mut rng, 3);
        let tv = warp_apply(&t, &v);
        let bound = d_infty(&u, &tv).unwrap().max(warp_norm(&t));
        prop_assert!(d_skorokhod(&u, &v).unwrap() <= bound);
    }

    #[test]
    fn f_entourage_matches_sup_distance(seed in any::<u64>(), k in 1i64..64) {
        let (u, v) = pair(seed, false);
        let eps = Rational::new(k, 64);
        prop_assert_eq!(f_entourage_contains(&eps, &u, &v).unwrap(), d_infty(&u, &v).unwrap() < eps);
    }

    #[test]
    fn json_round_trips(seed in any::<u64>(), circle in any::<bool>()) {
        let (u, _) = pair(seed, circle);
        let text = fuzzy_set_to_json(&u);
        prop_assert_eq!(parse_fuzzy_set(&text).unwrap(), u);
    }

    #[test]
    fn iterates_compose(seed in any::<u64>(), n in 0usize..5, m in 0usize..5) {
        let (u, _) = pair(seed, false);
        let f = DynMap::tent();
        let lhs = iterate_fuzzy(&f, &iterate_fuzzy(&f, &u, n).unwrap(), m).unwrap();
        prop_assert_eq!(lhs, iterate_fuzzy(&f, &u, n + m).unwrap());
    }

    #[test]
    fn zadeh_preserves_levels_and_normality(seed in any::<u64>()) {
        let (u, _) = pair(seed, true);
        let fu = zadeh_extend(&DynMap::doubling(), &u).unwrap();
        prop_assert!(fu.levels().iter().all(|a| u.levels().contains(a)));
        prop_assert_eq!(fu.levels().last(), Some(&Rational::one()));
    }

    #[test]
    fn level_partition_post_check(seed in any::<u64>(), k in 1i64..1000) {
        let (u, _) = pair(seed, seed % 2 == 0);
        let eps = Rational::new(1, k);
        let p = level_partition(&u, &eps).unwrap();
        prop_assert!(partition_holds(&u, &p, &EntourageRef::metric(eps).unwrap()).unwrap());
    }

    #[test]
    fn witness_is_close_on_both_ends(seed in any::<u64>(), k in 2i64..128) {
        let (u, v) = pair(seed, false);
        let eps = Rational::new(1, k);
        let f = DynMap::tent();
        let c = fuzzy_witness(&f, &u, &v, &eps).unwrap();
        prop_assert!(d_infty(&u, &c.w).unwrap() < eps);
        prop_assert!(d_infty(&iterate_fuzzy(&f, &c.w, c.n).unwrap(), &v).unwrap() < eps);
    }
}
