mod common;

use common::*;
use hybridk::geometry::{grid_cardinality_bound, min_nonzero_pairwise_distance};
use hybridk::*;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn cost_non_increasing_in_radius(
        p in point_set(1..=12, 2, 10.0),
        f in point_set(1..=3, 2, 10.0),
        r1 in 0.0..5.0f64,
        dr in 0.0..5.0f64,
        z in power(),
    ) {
        let a = cost(&p, &f, r1, z).unwrap();
        let b = cost(&p, &f, r1 + dr, z).unwrap();
        prop_assert!(b <= a);
    }

    #[test]
    fn cost_non_increasing_in_centers(
        p in point_set(1..=12, 3, 10.0),
        f in point_set(1..=3, 3, 10.0),
        extra in point_set(1..=3, 3, 10.0),
        r in 0.0..3.0f64,
        z in power(),
    ) {
        let mut bigger = f.clone();
        bigger.extend_from(&extra).unwrap();
        prop_assert!(cost(&p, &bigger, r, z).unwrap() <= cost(&p, &f, r, z).unwrap());
    }

    #[test]
    fn linear_cost_sandwich(
        p in point_set(1..=15, 2, 10.0),
        f in point_set(1..=3, 2, 10.0),
        r in 0.0..4.0f64,
    ) {
        let c0 = cost(&p, &f, 0.0, Power::Linear).unwrap();
        let cr = cost(&p, &f, r, Power::Linear).unwrap();
        let slack = 1e-9 * c0.max(1.0);
        prop_assert!(cr <= c0 + slack);
        prop_assert!(c0 <= cr + p.len() as f64 * r + slack);
    }

    #[test]
    fn relaxed_triangle_inequality(
        p in coords(3, 10.0),
        c in coords(3, 10.0),
        c2 in coords(3, 10.0),
        r in 0.0..5.0f64,
    ) {
        let lhs = dist_r(&p, &c2, r, Power::Linear).unwrap();
        let rhs = dist_r(&p, &c, r, Power::Linear).unwrap() + dist(&c, &c2).unwrap();
        prop_assert!(lhs <= rhs + 1e-12);
    }

    #[test]
    fn distance_is_a_metric(a in coords(4, 10.0), b in coords(4, 10.0), c in coords(4, 10.0)) {
        let ab = dist(&a, &b).unwrap();
        prop_assert_eq!(ab, dist(&b, &a).unwrap());
        prop_assert_eq!(dist(&a, &a).unwrap(), 0.0);
        prop_assert!(dist(&a, &c).unwrap() <= ab + dist(&b, &c).unwrap() + 1e-12);
    }

    #[test]
    fn cost_is_sum_of_thresholded_distances(
        p in point_set(1..=10, 2, 10.0),
        f in point_set(1..=3, 2, 10.0),
        r in 0.0..3.0f64,
        z in power(),
    ) {
        let direct: f64 = p
            .iter()
            .map(|x| f.iter().map(|c| dist_r(x, c, r, z).unwrap()).fold(f64::INFINITY, f64::min))
            .sum();
        prop_assert!(rel_close(cost(&p, &f, r, z).unwrap(), direct, 1e-12));
    }

    #[test]
    fn cost_ignores_center_order(
        p in point_set(1..=10, 2, 10.0),
        f in point_set(2..=4, 2, 10.0),
        r in 0.0..3.0f64,
        z in power(),
    ) {
        let mut rows = f.to_rows();
        rows.reverse();
        let g = PointSet::from_rows(&rows).unwrap();
        prop_assert_eq!(cost(&p, &f, r, z).unwrap(), cost(&p, &g, r, z).unwrap());
    }

    #[test]
    fn assignment_partitions_and_is_nearest(p in lattice_set(1..=15, 2), f in lattice_set(1..=4, 2)) {
        let a = assign_clusters(&p, &f).unwrap();
        let clusters = a.clusters(f.len());
        let mut seen: Vec<usize> = clusters.iter().flatten().copied().collect();
        seen.sort_unstable();
        prop_assert_eq!(seen, (0..p.len()).collect::<Vec<_>>());
        for (i, x) in p.iter().enumerate() {
            let own = dist(x, f.point(a.owner[i])).unwrap();
            prop_assert_eq!(own, a.distance[i]);
            for (j, c) in f.iter().enumerate() {
                let d = dist(x, c).unwrap();
                prop_assert!(own < d || (own == d && a.owner[i] <= j));
            }
        }
    }

    #[test]
    fn grid_covers_ball(
        d in 1usize..=3,
        seed_p in coords(3, 5.0),
        lambda in 0.1..3.0f64,
        frac in 0.05..1.0f64,
        dir in coords(3, 1.0),
        t in 0.0..1.0f64,
        at_point in any::<bool>(),
    ) {
        let p = &seed_p[..d];
        let tau = lambda * frac;
        let offset = if at_point { GridOffset::AtPoint } else { GridOffset::Origin };
        let g = grid_points(p, lambda, tau, offset).unwrap();
        let norm = dir[..d].iter().map(|x| x * x).sum::<f64>().sqrt().max(1e-9);
        let q: Vec<f64> = (0..d).map(|j| p[j] + dir[j] / norm * lambda * t).collect();
        let nearest = g.iter().map(|c| dist(&q, c).unwrap()).fold(f64::INFINITY, f64::min);
        prop_assert!(nearest <= tau + 1e-9, "nearest {} tau {}", nearest, tau);
        prop_assert!((g.len() as f64) <= grid_cardinality_bound(d, lambda, tau));
    }

    #[test]
    fn pairwise_extremes_bound_every_pair(p in lattice_set(2..=12, 2)) {
        let hi = max_pairwise_distance(&p).unwrap();
        let lo = min_nonzero_pairwise_distance(&p);
        for a in p.iter() {
            for b in p.iter() {
                let d = dist(a, b).unwrap();
                prop_assert!(d <= hi);
                if d > 0.0 {
                    prop_assert!(lo.unwrap() <= d);
                }
            }
        }
    }
}
