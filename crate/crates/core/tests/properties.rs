mod common;

use proptest::prelude::*;

use common::naive_profile;
use vsep_core::exact::{optimal_vs, optimal_vs_exhaustive};
use vsep_core::instances::{gen_grid, gen_random_tree, parse_edge_list, write_edge_list};
use vsep_core::{cut_profile, vertex_separation, Graph, Heuristic, Layout, RandomSource};

/// A graph on `1..=n` plus a permutation of its vertices.
fn graph_and_order(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    (1..=max_n)
        .prop_flat_map(|n| {
            let pairs = n * (n - 1) / 2;
            (
                Just(n),
                proptest::collection::vec(any::<bool>(), pairs),
                Just((1..=n).collect::<Vec<usize>>()).prop_shuffle(),
            )
        })
        .prop_map(|(n, mask, order)| {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 1..=n {
                for v in u + 1..=n {
                    if mask[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            (Graph::new(n, edges).unwrap(), order)
        })
}

proptest! {
    #[test]
    fn graph_is_symmetric_and_simple((g, _) in graph_and_order(25)) {
        let mut degree_sum = 0;
        for u in g.vertices() {
            prop_assert!(!g.neighbors(u).contains(&u));
            for &v in g.neighbors(u) {
                prop_assert!(g.neighbors(v).contains(&u));
            }
            degree_sum += g.neighbors(u).len();
        }
        prop_assert_eq!(degree_sum, 2 * g.m());
        prop_assert_eq!(g.max_degree(), g.vertices().map(|u| g.neighbors(u).len()).max().unwrap());
    }

    #[test]
    fn layout_round_trip(order in (1usize..40).prop_flat_map(|n| Just((1..=n).collect::<Vec<usize>>()).prop_shuffle())) {
        let layout = Layout::from_sequence(order.clone()).unwrap();
        let read_back: Vec<usize> = (1..=order.len()).map(|i| layout.vertex_at(i).unwrap()).collect();
        prop_assert_eq!(&read_back, &order);
        for i in 1..=order.len() {
            prop_assert_eq!(layout.position_of(layout.vertex_at(i).unwrap()), Some(i));
        }
    }

    #[test]
    fn profile_matches_definition((g, order) in graph_and_order(30)) {
        let layout = Layout::from_sequence(order).unwrap();
        let profile = cut_profile(&g, &layout).unwrap();
        prop_assert_eq!(&profile.values, &naive_profile(&g, &layout));
        let n = g.n();
        prop_assert_eq!(profile.values[n - 1], 0);
        for (k, &value) in profile.values.iter().enumerate() {
            let i = k + 1;
            prop_assert!(value <= i.min(g.max_degree() * (n - i)));
        }
        prop_assert_eq!(profile.vs == 0, g.m() == 0);
    }

    #[test]
    fn separation_is_invariant_under_relabelling(
        (g, order) in graph_and_order(20),
        seed in any::<u64>(),
    ) {
        let layout = Layout::from_sequence(order).unwrap();
        let mapping = RandomSource::new(seed).permutation(g.n());
        let h = g.relabel(&mapping).unwrap();
        let moved = layout.relabel(&mapping).unwrap();
        prop_assert_eq!(
            vertex_separation(&g, &layout).unwrap(),
            vertex_separation(&h, &moved).unwrap()
        );
    }

    #[test]
    fn isolated_vertex_leaves_separation_unchanged(
        (g, order) in graph_and_order(20),
        slot in any::<prop::sample::Index>(),
    ) {
        let n = g.n();
        let layout = Layout::from_sequence(order.clone()).unwrap();
        let bigger = Graph::new(n + 1, g.edges()).unwrap();
        let mut extended = order;
        extended.insert(slot.index(n + 1), n + 1);
        let extended = Layout::from_sequence(extended).unwrap();
        prop_assert_eq!(
            vertex_separation(&g, &layout).unwrap(),
            vertex_separation(&bigger, &extended).unwrap()
        );
    }

    #[test]
    fn heuristics_are_valid_and_deterministic((g, _) in graph_and_order(50), seed in any::<u64>()) {
        for h in Heuristic::ALL {
            let a = h.construct(&g, &mut RandomSource::new(seed));
            let b = h.construct(&g, &mut RandomSource::new(seed));
            prop_assert_eq!(&a, &b);
            prop_assert_eq!(a.len(), g.n());
        }
    }

    #[test]
    fn heuristics_never_beat_the_optimum((g, _) in graph_and_order(9), seed in any::<u64>()) {
        let opt = optimal_vs(&g).unwrap().1;
        for h in Heuristic::ALL {
            let layout = h.construct(&g, &mut RandomSource::new(seed));
            prop_assert!(vertex_separation(&g, &layout).unwrap() >= opt);
        }
    }

    #[test]
    fn dp_matches_enumeration((g, _) in graph_and_order(7)) {
        let (witness, opt) = optimal_vs(&g).unwrap();
        prop_assert_eq!(opt, optimal_vs_exhaustive(&g).unwrap());
        prop_assert_eq!(vertex_separation(&g, &witness).unwrap(), opt);
    }

    #[test]
    fn random_trees_are_trees(n in 1usize..200, seed in any::<u64>()) {
        let t = gen_random_tree(n, &mut RandomSource::new(seed)).unwrap();
        prop_assert_eq!(t.m(), n - 1);
        let mut seen = vec![false; n];
        let mut stack = vec![1];
        seen[0] = true;
        while let Some(u) = stack.pop() {
            for &v in t.neighbors(u) {
                if !seen[v - 1] {
                    seen[v - 1] = true;
                    stack.push(v);
                }
            }
        }
        prop_assert!(seen.into_iter().all(|s| s));
    }

    #[test]
    fn edge_list_round_trip((g, _) in graph_and_order(25)) {
        let text = write_edge_list(&g);
        let parsed = parse_edge_list(&text).unwrap();
        prop_assert_eq!(write_edge_list(&parsed), text);
        prop_assert_eq!(parsed, g);
    }
}

#[test]
fn grid_transpose_has_same_optimum() {
    for rows in 1..=3 {
        for cols in 1..=5 {
            let a = optimal_vs(&gen_grid(rows, cols).unwrap()).unwrap().1;
            let b = optimal_vs(&gen_grid(cols, rows).unwrap()).unwrap().1;
            assert_eq!(a, b, "{rows}x{cols}");
            let expected = if rows * cols == 1 { 0 } else { rows.min(cols) };
            assert_eq!(a, expected, "{rows}x{cols}");
        }
    }
}
