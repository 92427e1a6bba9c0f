use std::time::Instant;

use proptest::prelude::*;

use robustcurve::attack::{
    adaptive_removal_order, attack_curve, curve_ensemble, naive_attack_curve, removal_order,
    simulate, AttackOptions, CurveSpec, Scenario,
};
use robustcurve::graph::{component_sizes, gen_ba, gen_er, lcc_size, DsuForest, Graph};
use robustcurve::metrics::robustness;

fn arb_graph() -> impl Strategy<Value = Graph> {
    (2usize..50, any::<u64>(), prop::bool::ANY, 1usize..4).prop_map(|(n, seed, er, m)| {
        if er || n <= m {
            gen_er(n, ((seed % 5) as f64).min((n - 1) as f64), seed).unwrap()
        } else {
            gen_ba(n, m, seed).unwrap()
        }
    })
}

fn arb_scenario() -> impl Strategy<Value = Scenario> {
    (0u8..4).prop_map(|c| Scenario::from_code(c).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn incremental_matches_naive(g in arb_graph(), scenario in arb_scenario(), seed in any::<u64>(), steps in 1usize..120) {
        let spec = CurveSpec::new(steps).unwrap();
        let order = removal_order(&g, scenario, seed);
        prop_assert_eq!(attack_curve(&g, &order, &spec).unwrap(), naive_attack_curve(&g, &order, &spec).unwrap());
        let adaptive = adaptive_removal_order(&g, scenario, seed);
        prop_assert_eq!(attack_curve(&g, &adaptive, &spec).unwrap(), naive_attack_curve(&g, &adaptive, &spec).unwrap());
    }

    #[test]
    fn first_value_is_relative_lcc(g in arb_graph(), scenario in arb_scenario(), seed in any::<u64>()) {
        let spec = CurveSpec::new(10).unwrap();
        let curve = attack_curve(&g, &removal_order(&g, scenario, seed), &spec).unwrap();
        let lcc = lcc_size(&g, &vec![true; g.n()], &vec![true; g.m()]);
        prop_assert_eq!(curve.values()[0], lcc as f64 / g.n() as f64);
        prop_assert!(curve.is_non_increasing());
    }

    #[test]
    fn lcc_matches_bfs(g in arb_graph()) {
        let bfs = component_sizes(&g);
        prop_assert_eq!(bfs.iter().sum::<usize>(), g.n());
        let lcc = lcc_size(&g, &vec![true; g.n()], &vec![true; g.m()]);
        prop_assert_eq!(lcc, bfs.iter().copied().max().unwrap_or(0));

        let mut dsu = DsuForest::with_all_active(g.n());
        for &(u, v) in g.edges() {
            dsu.union(u as usize, v as usize);
        }
        prop_assert_eq!(dsu.max_size(), lcc);
    }

    #[test]
    fn clique_rnf_is_deterministic(n in 1usize..40, seed in any::<u64>()) {
        let edges = (0..n as u32).flat_map(|u| (u + 1..n as u32).map(move |v| (u, v)));
        let g = Graph::new(n, edges).unwrap();
        let spec = CurveSpec::new(n).unwrap();
        let curve = attack_curve(&g, &removal_order(&g, Scenario::Rnf, seed), &spec).unwrap();
        let expected: Vec<f64> = (0..n).map(|k| (n - k) as f64 / n as f64).collect();
        prop_assert_eq!(curve.values(), &expected[..]);
    }
}

#[test]
fn lcc_matches_bfs_on_larger_graphs() {
    for seed in 0..20 {
        let g = gen_er(200, 1.5, seed).unwrap();
        let bfs_max = component_sizes(&g).into_iter().max().unwrap();
        assert_eq!(
            lcc_size(&g, &vec![true; g.n()], &vec![true; g.m()]),
            bfs_max
        );
    }
}

#[test]
fn ensemble_is_ordered_and_reproducible() {
    let g = gen_er(300, 4.0, 9).unwrap();
    let spec = CurveSpec::new(300).unwrap();
    let opts = AttackOptions::default();
    let a = curve_ensemble(&g, Scenario::Ref, &spec, 16, 100, &opts).unwrap();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .unwrap();
    let b = pool.install(|| curve_ensemble(&g, Scenario::Ref, &spec, 16, 100, &opts).unwrap());
    assert_eq!(a, b);
    for (r, curve) in a.iter().enumerate() {
        assert_eq!(
            curve,
            &simulate(&g, Scenario::Ref, &spec, 100 + r as u64, &opts).unwrap()
        );
    }
}

#[test]
fn disconnected_graph_robustness_defined() {
    let g = Graph::new(6, [(0, 1), (1, 2), (3, 4)]).unwrap();
    let spec = CurveSpec::new(6).unwrap();
    let curve = attack_curve(&g, &removal_order(&g, Scenario::Hdaa, 0), &spec).unwrap();
    assert_eq!(curve.values()[0], 0.5);
    let r = robustness(curve.values()).unwrap();
    assert!(r > 0.0 && r < 0.5);
}

fn median_curve_time(g: &Graph, scenario: Scenario, spec: &CurveSpec) -> f64 {
    let order = removal_order(g, scenario, 1);
    let mut times: Vec<f64> = (0..7)
        .map(|_| {
            let start = Instant::now();
            std::hint::black_box(attack_curve(g, &order, spec).unwrap());
            start.elapsed().as_secs_f64()
        })
        .collect();
    times.sort_by(f64::total_cmp);
    times[3]
}

#[test]
fn incremental_runtime_scales_near_linearly() {
    // Doubling the edge count (same N) must not cost more than 4x.
    let spec = CurveSpec::new(1000).unwrap();
    let small = gen_er(20_000, 5.0, 3).unwrap();
    let large = gen_er(20_000, 10.0, 3).unwrap();
    for scenario in [Scenario::Ref, Scenario::Hedaa] {
        let t1 = median_curve_time(&small, scenario, &spec);
        let t2 = median_curve_time(&large, scenario, &spec);
        assert!(t2 <= 4.0 * t1, "{scenario}: {t1:.5}s -> {t2:.5}s");
    }
}
