mod common;

use common::*;
use hybridk::oracle::kcenter_radius_exact;
use hybridk::solver::{approx_solution_on_sample, build_candidate_set};
use hybridk::*;
use proptest::prelude::*;

fn quick(seed: u64) -> AlgoConfig {
    AlgoConfig {
        seed,
        repetitions: 1,
        leaf_budget: 2_000,
        branch_cap: 60,
        ..AlgoConfig::default()
    }
}

fn state_with(chosen: &PointSet, remaining: usize, seed: u64) -> SearchState {
    SearchState {
        chosen: chosen.clone(),
        remaining,
        seed,
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn search_respects_center_budget(
        p in point_set(1..=20, 2, 5.0),
        k in 1usize..=3,
        r in 0.0..1.0f64,
        z in power(),
        seed in any::<u64>(),
    ) {
        let sol = hybrid_clustering(&SearchState::root(2, k, seed), &p, k, r, z, &quick(seed)).unwrap();
        prop_assert!(sol.centers.len() <= k);
        let inst = Instance::new(p.clone(), k, r, z).unwrap();
        let out = full_pipeline(&inst, &quick(seed)).unwrap();
        prop_assert!(out.solution.centers.len() <= k);
    }

    #[test]
    fn reported_cost_matches_recomputation(
        p in point_set(1..=20, 2, 5.0),
        k in 1usize..=3,
        r in 0.0..1.0f64,
        z in power(),
        seed in any::<u64>(),
    ) {
        let sol = hybrid_clustering(&SearchState::root(2, k, seed), &p, k, r, z, &quick(seed)).unwrap();
        prop_assert_eq!(sol.cost, cost(&p, &sol.centers, sol.radius_factor * r, z).unwrap());
        let inst = Instance::new(p.clone(), k, r, z).unwrap();
        let out = full_pipeline(&inst, &quick(seed)).unwrap().solution;
        prop_assert_eq!(out.radius_factor, 1.5);
        prop_assert_eq!(out.cost, cost(&p, &out.centers, 1.5 * r, z).unwrap());
    }

    #[test]
    fn adding_centers_never_hurts(
        p in point_set(2..=20, 2, 5.0),
        fixed in point_set(1..=2, 2, 5.0),
        m in 1usize..=2,
        r in 0.0..1.0f64,
        z in power(),
        seed in any::<u64>(),
    ) {
        let k = fixed.len() + m;
        let sol = hybrid_clustering(&state_with(&fixed, m, seed), &p, k, r, z, &quick(seed)).unwrap();
        let empty_branch = cost(&p, &fixed, sol.radius_factor * r, z).unwrap();
        prop_assert!(sol.cost <= empty_branch);
        for c in fixed.iter() {
            prop_assert!(sol.centers.iter().any(|x| x == c));
        }
    }

    #[test]
    fn identical_seeds_give_identical_results(
        p in point_set(1..=20, 2, 5.0),
        k in 1usize..=3,
        r in 0.0..1.0f64,
        seed in any::<u64>(),
    ) {
        let inst = Instance::new(p, k, r, Power::Linear).unwrap();
        let par = full_pipeline(&inst, &quick(seed)).unwrap();
        prop_assert_eq!(&par, &full_pipeline(&inst, &quick(seed)).unwrap());
        let seq = AlgoConfig { execution: Execution::Sequential, ..quick(seed) };
        prop_assert_eq!(&par, &full_pipeline(&inst, &seq).unwrap());
    }

    #[test]
    fn more_restarts_never_cost_more(
        p in point_set(2..=12, 2, 5.0),
        k in 1usize..=2,
        r in 0.0..1.0f64,
        t in 1usize..=3,
        seed in any::<u64>(),
    ) {
        let inst = Instance::new(p, k, r, Power::Linear).unwrap();
        let few = full_pipeline(&inst, &AlgoConfig { repetitions: t, ..quick(seed) }).unwrap();
        let more = full_pipeline(&inst, &AlgoConfig { repetitions: t + 1, ..quick(seed) }).unwrap();
        prop_assert!(more.solution.cost <= few.solution.cost);
    }

    #[test]
    fn radius_beyond_kcenter_radius_costs_nothing(
        p in point_set(2..=10, 2, 5.0),
        k in 1usize..=2,
        slack in 1.01..2.0f64,
        z in power(),
        seed in any::<u64>(),
    ) {
        let rad = kcenter_radius_exact(&p, k, 10_000_000).unwrap();
        prop_assume!(rad > 1e-6);
        let inst = Instance::new(p, k, slack * rad, z).unwrap();
        let out = full_pipeline(&inst, &quick(seed)).unwrap();
        prop_assert_eq!(out.solution.cost, 0.0);
    }

    #[test]
    fn sample_median_beats_every_sample_point(s in point_set(1..=30, 2, 5.0), z in power()) {
        let c = approx_solution_on_sample(&s, 0.2, z).unwrap();
        let single = PointSet::from_rows(std::slice::from_ref(&c)).unwrap();
        let got = cost(&s, &single, 0.0, z).unwrap();
        for x in s.iter() {
            let at = cost(&s, &PointSet::from_rows(&[x]).unwrap(), 0.0, z).unwrap();
            prop_assert!(got <= at * (1.0 + 1e-12) + 1e-12);
        }
        let bbox = BoundingBox::of(&s).unwrap().inflate(1e-9);
        prop_assert!(bbox.contains(&c));
    }

    #[test]
    fn candidate_sets_are_distinct_new_and_capped(
        p in lattice_set(1..=25, 2),
        chosen in lattice_set(0..=2, 2),
        m in 1usize..=3,
        r in 0.0..1.5f64,
        seed in any::<u64>(),
    ) {
        let k = chosen.len() + m;
        let cfg = quick(seed);
        let cands = build_candidate_set(&state_with(&chosen, m, seed), &p, k, r, Power::Linear, &cfg).unwrap();
        let cap = cfg.search_params(k, m).unwrap().level_cap;
        prop_assert!(cands.len() <= cap);
        let rows = cands.to_rows();
        for (i, a) in rows.iter().enumerate() {
            prop_assert!(rows[i + 1..].iter().all(|b| b != a));
            prop_assert!(chosen.iter().all(|c| c != a.as_slice()));
        }
        let again = build_candidate_set(&state_with(&chosen, m, seed), &p, k, r, Power::Linear, &cfg).unwrap();
        prop_assert_eq!(cands, again);
    }

    #[test]
    fn resolved_parameters_are_consistent(
        eps in 0.01..0.99f64,
        k in 1usize..=10,
        depth in 1usize..=10,
        theory in any::<bool>(),
    ) {
        let cfg = AlgoConfig {
            eps,
            mode: if theory { Mode::Theory } else { Mode::Practical },
            ..AlgoConfig::default()
        };
        let params = cfg.search_params(k, depth).unwrap();
        prop_assert!(params.delta > 0.0 && params.delta < 0.5);
        prop_assert!(rel_close(params.delta, eps / (10.0 * k as f64), 1e-15));
        prop_assert_eq!(params.delta_prime, params.delta / 3.0);
        prop_assert!(params.beta >= 1 && params.level_cap >= 1 && params.subset_cap >= 1);
        if let Some(bp) = params.beta_prime {
            prop_assert!(params.beta <= bp);
        }
    }

    #[test]
    fn overfull_states_are_rejected(p in point_set(1..=5, 2, 5.0), chosen in point_set(1..=3, 2, 5.0), extra in 1usize..=2) {
        let k = chosen.len();
        let state = state_with(&chosen, extra, 0);
        let res = hybrid_clustering(&state, &p, k, 0.5, Power::Linear, &quick(0));
        prop_assert!(matches!(res, Err(HybridError::InvalidInput(_))));
    }
}
