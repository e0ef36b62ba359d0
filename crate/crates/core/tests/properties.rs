mod common;

use proptest::prelude::*;

use tough_core::bounds::{BoundReport, Tolerances};
use tough_core::exact::{toughness, Ratio, Tau};
use tough_core::extremal::{build_extremal, detect_join_form, eigen_condition};
use tough_core::io::{enumerate_labeled, parse_edge_list, parse_graph6, write_edge_list, write_graph6};
use tough_core::spectra::{
    adjacency_matrix, adjacency_spectrum, laplacian_spectrum, normalized_laplacian_spectrum, spectral_summary,
};
use tough_core::{Graph, VertexSet};

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (1..n).flat_map(|v| (0..v).map(move |u| (u, v)));
            let edges = pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e);
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

fn subset_strategy(n: usize) -> impl Strategy<Value = VertexSet> {
    (0..1u64 << n).prop_map(VertexSet::from_bits)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn graph6_round_trip(g in graph_strategy(30)) {
        let text = write_graph6(&g).unwrap();
        prop_assert_eq!(parse_graph6(&text).unwrap(), g);
    }

    #[test]
    fn edge_list_round_trip(g in graph_strategy(12)) {
        prop_assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn boundary_and_volume(
        (g, x) in graph_strategy(8).prop_flat_map(|g| { let n = g.n(); (Just(g), subset_strategy(n)) })
    ) {
        let adj = common::adjacency(&g);
        let inside = x.iter().flat_map(|u| x.iter().map(move |v| (u, v)))
            .filter(|&(u, v)| u < v && adj[u][v])
            .count();
        let within = g.edge_boundary(x, x);
        prop_assert_eq!(within % 2, 0);
        prop_assert_eq!(within, 2 * inside);
        prop_assert_eq!(g.volume(x) + g.volume(g.vertices() - x), 2 * g.m());
    }

    #[test]
    fn connectivity_matches_component_count(g in graph_strategy(10)) {
        let blocks = g.components(VertexSet::EMPTY).unwrap().omega();
        prop_assert_eq!(blocks == 1, g.is_connected());
        prop_assert_eq!(blocks, common::components_after(&common::adjacency(&g), 0));
    }

    #[test]
    fn join_adds_the_other_order(g in graph_strategy(6), h in graph_strategy(6)) {
        let j = g.join(&h).unwrap();
        for v in 0..h.n() {
            prop_assert_eq!(j.degree(g.n() + v), h.degree(v) + g.n());
        }
        for v in 0..g.n() {
            prop_assert_eq!(j.degree(v), g.degree(v) + h.n());
        }
    }

    #[test]
    fn spectral_invariants(g in graph_strategy(8)) {
        let lap = laplacian_spectrum(&g).unwrap();
        let trace: f64 = lap.iter().sum();
        prop_assert!((trace - 2.0 * g.m() as f64).abs() < 1e-8);
        prop_assert!(lap.windows(2).all(|w| w[0] >= w[1]));
        prop_assert!(lap.last().unwrap().abs() < 1e-8);
        prop_assert!(common::power_sum_residual(&common::laplacian(&g), &lap) < 1e-9);

        let adj = adjacency_spectrum(&g).unwrap();
        let a = adjacency_matrix(&g);
        let rows: Vec<Vec<f64>> = (0..g.n()).map(|i| (0..g.n()).map(|j| a.get(i, j)).collect()).collect();
        prop_assert!(common::power_sum_residual(&rows, &adj) < 1e-9);

        for xi in normalized_laplacian_spectrum(&g).unwrap() {
            prop_assert!((-1e-9..=2.0 + 1e-9).contains(&xi));
        }

        if let Some(d) = g.regular_degree() {
            // μ_i = d − λ_{n+1−i}.
            for (mu, lambda) in lap.iter().zip(adj.iter().rev()) {
                prop_assert!((mu - (d as f64 - lambda)).abs() < 1e-8);
            }
        }
    }
}

#[test]
fn connected_counts_match_brute_force() {
    for n in 1..=5 {
        let brute = enumerate_labeled(n)
            .unwrap()
            .filter(|g| common::components_after(&common::adjacency(g), 0) == 1)
            .count();
        assert_eq!(tough_core::io::enumerate_labeled_connected(n).unwrap().count(), brute);
    }
}

/// Every member of the extremal family built from a labeled H on at most four
/// vertices that satisfies the eigenvalue condition attains both Laplacian
/// bounds.
#[test]
fn extremal_family_attains_both_bounds() {
    let tol = Tolerances::default();
    let mut built = 0;
    for delta in 1..=4 {
        for h in enumerate_labeled(delta).unwrap() {
            for n in delta + 2..=delta + 4 {
                if !eigen_condition(&h, n, tol).unwrap() {
                    continue;
                }
                built += 1;
                let g = build_extremal(&h, n).unwrap();
                let s = spectral_summary(&g).unwrap();
                assert_eq!(g.min_degree(), delta);
                assert!((s.mu1() - n as f64).abs() < 1e-8);
                assert!((s.algebraic_connectivity() - delta as f64).abs() < 1e-8);
                let expected = Tau::Finite(Ratio::new(delta as u64, (n - delta) as u64));
                assert_eq!(toughness(&g).unwrap().tau(), expected);
                let report = BoundReport::compute(&g, tol).unwrap();
                assert!(report.equality_spectral_radius && report.equality_algebraic_connectivity);
                let w = detect_join_form(&g, tol).unwrap().expect("join form");
                assert_eq!(w.independent_part.len(), n - delta);
                assert!(w.eigen_condition_ok);
            }
        }
    }
    assert!(built > 0);
}
