mod common;

use std::collections::BTreeMap;

use common::oracles::{brute_chordless_cycle, brute_simple_cycle, closed_walks, det_char_poly, petgraph_isomorphic};
use fullerene_core::facetgraph::{induced_subgraph, Graph, GraphKind};
use fullerene_core::spectral::{
    char_poly, eigenvalues, newton_recursive, newton_vector, AdjacencyMatrix, DEFAULT_TOLERANCE,
};
use fullerene_core::spiral::{canonical_spiral, wind, SpiralSequence};
use fullerene_core::stats::{least_squares, regress, EnergyTable, Transform};
use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use proptest::prelude::*;
use proptest::sample::subsequence;

fn graph_strategy(max_order: usize) -> impl Strategy<Value = Graph> {
    (1..=max_order).prop_flat_map(|m| {
        let pairs: Vec<(usize, usize)> = (0..m).flat_map(|u| (u + 1..m).map(move |v| (u, v))).collect();
        let len = pairs.len();
        subsequence(pairs, 0..=len).prop_map(move |edges| Graph::from_edges(m, &edges).unwrap())
    })
}

fn permutation(m: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..m).collect::<Vec<_>>()).prop_shuffle()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn char_poly_matches_determinant(g in graph_strategy(10)) {
        let a = AdjacencyMatrix::from_graph(&g);
        let expected = det_char_poly(&g);
        prop_assert_eq!(char_poly(&a).low_to_high().to_vec(), expected);
    }

    #[test]
    fn newton_routes_and_walks_agree(g in graph_strategy(9)) {
        let a = AdjacencyMatrix::from_graph(&g);
        let m = g.order();
        let nv = newton_vector(&a, m.max(1)).unwrap();
        for k in 2..=m {
            prop_assert_eq!(newton_recursive(&a, k).unwrap(), BigInt::from(nv.get(k).clone()));
        }
        for k in 1..=m.min(6) {
            prop_assert_eq!(nv.get(k).to_u64().unwrap(), closed_walks(&g, k));
        }
        prop_assert_eq!(nv.get(1).clone(), Zero::zero());
        if m >= 2 {
            prop_assert_eq!(nv.get(2).to_usize().unwrap(), 2 * g.edge_count());
        }
    }

    #[test]
    fn cycle_searches_match_brute_force(g in graph_strategy(8), k in 3usize..=6) {
        prop_assert_eq!(g.has_simple_cycle_of_length(k), brute_simple_cycle(&g, k));
        prop_assert_eq!(g.has_chordless_cycle_of_length(k), brute_chordless_cycle(&g, k));
    }

    #[test]
    fn isomorphism_matches_petgraph(g in graph_strategy(9), h in graph_strategy(9)) {
        if g.order() == h.order() {
            prop_assert_eq!(g.is_isomorphic(&h).unwrap(), petgraph_isomorphic(&g, &h));
        }
    }

    #[test]
    fn relabelled_graphs_are_isomorphic_and_cospectral((g, perm) in graph_strategy(10).prop_flat_map(|g| {
        let m = g.order();
        (Just(g), permutation(m))
    })) {
        let h = g.permuted(&perm);
        prop_assert!(g.is_isomorphic(&h).unwrap());
        prop_assert_eq!(char_poly(&AdjacencyMatrix::from_graph(&g)), char_poly(&AdjacencyMatrix::from_graph(&h)));
    }

    #[test]
    fn bipartite_equivalences(g in graph_strategy(10)) {
        let a = AdjacencyMatrix::from_graph(&g);
        let m = g.order();
        let nv = newton_vector(&a, m).unwrap();
        let odd_zero = (1..=m).step_by(2).all(|k| nv.get(k).is_zero());
        let s = eigenvalues(&a, DEFAULT_TOLERANCE).unwrap();
        let symmetric = s.values.iter().zip(s.values.iter().rev()).all(|(x, y)| (x + y).abs() <= 1e-8);
        prop_assert_eq!(g.is_bipartite(), odd_zero);
        prop_assert_eq!(g.is_bipartite(), symmetric);
    }

    #[test]
    fn eigenvalues_reproduce_power_sums(g in graph_strategy(10)) {
        let a = AdjacencyMatrix::from_graph(&g);
        let nv = newton_vector(&a, 6).unwrap();
        let s = eigenvalues(&a, DEFAULT_TOLERANCE).unwrap();
        for k in 1..=6 {
            let sum: f64 = s.values.iter().map(|x| x.powi(k as i32)).sum();
            let exact = nv.get(k).to_f64().unwrap();
            prop_assert!((sum - exact).abs() <= 1e-6 * exact.max(1.0));
        }
    }

    #[test]
    fn random_spirals_wind_consistently(n in (12usize..=22).prop_map(|h| 2 * h), seed in any::<u64>()) {
        use rand::{seq::index::sample, SeedableRng};
        let faces = n / 2 + 2;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let mut positions: Vec<u16> = sample(&mut rng, faces, 12).into_iter().map(|p| p as u16 + 1).collect();
        positions.sort_unstable();
        let spiral = SpiralSequence::from_slice(n, &positions).unwrap();
        if let Ok(dual) = wind(&spiral) {
            prop_assert_eq!(dual.edge_count(), 3 * n / 2);
            prop_assert_eq!(dual.triangles().len(), n);
            let canon = canonical_spiral(&dual).unwrap();
            prop_assert!(canon <= spiral);
            let rewound = wind(&canon).unwrap();
            prop_assert_eq!(canonical_spiral(&rewound).unwrap(), canon);
            let (t, u) = (induced_subgraph(&dual, GraphKind::Full), induced_subgraph(&rewound, GraphKind::Full));
            prop_assert!(t.is_isomorphic(&u).unwrap());
        }
    }

    #[test]
    fn pearson_is_affine_invariant(
        pts in prop::collection::vec((-100.0f64..100.0, -100.0f64..100.0), 3..40),
        a in prop_oneof![-50.0f64..-0.1, 0.1f64..50.0],
        b in -100.0f64..100.0,
    ) {
        let xs: Vec<f64> = pts.iter().map(|p| p.0).collect();
        let ys: Vec<f64> = pts.iter().map(|p| p.1).collect();
        if let Ok((rho, _, _)) = least_squares(&xs, &ys) {
            let scaled: Vec<f64> = xs.iter().map(|x| a * x + b).collect();
            let (rho_x, _, _) = least_squares(&scaled, &ys).unwrap();
            prop_assert!((rho_x - a.signum() * rho).abs() <= 1e-9);
            let scaled: Vec<f64> = ys.iter().map(|y| a * y + b).collect();
            let (rho_y, _, _) = least_squares(&xs, &scaled).unwrap();
            prop_assert!((rho_y - a.signum() * rho).abs() <= 1e-9);
        }
    }
}

#[test]
fn exact_line_regresses_exactly() {
    let predictor: BTreeMap<usize, f64> = (1..=20).map(|i| (i, i as f64 * 0.5)).collect();
    let energies = EnergyTable {
        n: 60,
        energies: predictor.iter().map(|(&i, &x)| (i, 2.0 * x + 3.0)).collect(),
    };
    let r = regress(&predictor, &energies, Transform::Identity).unwrap();
    assert!((r.slope - 2.0).abs() <= 1e-12);
    assert!((r.intercept - 3.0).abs() <= 1e-12);
    assert!((r.rho - 1.0).abs() <= 1e-12);
}

#[test]
fn newton_ratio_approaches_lambda_squared_on_buckminster() {
    let spiral = SpiralSequence::new(60, [1, 7, 9, 11, 13, 15, 18, 20, 22, 24, 26, 32]).unwrap();
    let t6 = induced_subgraph(&wind(&spiral).unwrap(), GraphKind::Hexagon);
    let a = AdjacencyMatrix::from_graph(t6.graph());
    let lambda = eigenvalues(&a, DEFAULT_TOLERANCE).unwrap().lambda_max().unwrap();
    let target = lambda * lambda;
    let nv = newton_vector(&a, 62).unwrap();
    let gaps: Vec<f64> = (2..=60)
        .step_by(2)
        .map(|k| {
            let ratio = nv.get(k + 2).to_f64().unwrap() / nv.get(k).to_f64().unwrap();
            (ratio - target).abs()
        })
        .collect();
    assert!(gaps.windows(2).all(|w| w[1] <= w[0] + 1e-12));
    assert!(*gaps.last().unwrap() <= 0.01 * target);
}
