use proptest::prelude::*;

use matchpoly::*;

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let all = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
            let edges: Vec<(usize, usize)> =
                all.zip(bits).filter(|(_, b)| *b).map(|(p, _)| p).collect();
            Graph::new(n, edges).unwrap()
        })
    })
}

fn permuted(g: &Graph, perm: &[usize]) -> Graph {
    Graph::new(
        g.vertex_count(),
        g.edges().iter().map(|&(u, v)| (perm[u.0], perm[v.0])),
    )
    .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn handshake_and_incidence(g in graph_strategy(9)) {
        let total: usize = g.vertices().map(|v| g.degree(v)).sum();
        prop_assert_eq!(total, 2 * g.edge_count());
        for e in g.edge_ids() {
            prop_assert!(!g.adjacent_edges(e).contains(&e));
            for &f in g.adjacent_edges(e) {
                prop_assert!(g.adjacent_edges(f).contains(&e));
            }
            if g.is_bond(e) {
                let (u, v) = g.endpoints(e);
                let w = g.common_neighbors(u, v)[0];
                prop_assert!(g.edge_between(u, w).is_some() && g.edge_between(v, w).is_some());
            }
        }
    }

    #[test]
    fn graph6_round_trip(g in graph_strategy(12)) {
        prop_assert_eq!(parse_graph6(&emit_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn stars_triangles_verdict_ignores_labels(
        g in graph_strategy(8),
        seed in any::<u64>(),
    ) {
        use rand::seq::SliceRandom;
        let mut perm: Vec<usize> = (0..g.vertex_count()).collect();
        perm.shuffle(&mut matchpoly::generate::rng(seed));
        let h = permuted(&g, &perm);
        prop_assert_eq!(
            g.decompose_stars_triangles().is_stars_and_triangles,
            h.decompose_stars_triangles().is_stars_and_triangles
        );
    }

    #[test]
    fn skeleton_routes_agree(g in graph_strategy(6)) {
        let a = build_skeleton(&g, 10_000).unwrap();
        let b = build_skeleton_pairwise(&g, 10_000).unwrap();
        prop_assert_eq!(&a, &b);
        let seq = build_skeleton_with(&g, 10_000, Execution::Sequential).unwrap();
        prop_assert_eq!(&a, &seq);
        prop_assert_eq!(a.stats().min_degree, g.edge_count());
        prop_assert!(a.is_connected());
    }

    #[test]
    fn neighbours_are_exactly_the_adjacent_matchings(g in graph_strategy(6)) {
        let all: Vec<Matching> = enumerate_matchings(&g).collect();
        for m in &all {
            let listed = neighbors_of_matching(&g, m);
            prop_assert_eq!(listed.len(), degree_of_matching(&g, m).total);
            let scanned: Vec<Matching> = all
                .iter()
                .filter(|n| *n != m
                    && classify_adjacency(&g, m, n).unwrap().kind != WitnessKind::NotAdjacent)
                .cloned()
                .collect();
            prop_assert_eq!(listed, scanned);
        }
    }

    #[test]
    fn witness_symmetry_and_size_gap(g in graph_strategy(6)) {
        let all: Vec<Matching> = enumerate_matchings(&g).collect();
        for (i, a) in all.iter().enumerate() {
            for b in &all[i + 1..] {
                let w = classify_adjacency(&g, a, b).unwrap();
                prop_assert_eq!(w.kind, classify_adjacency(&g, b, a).unwrap().kind);
                if w.kind != WitnessKind::NotAdjacent {
                    prop_assert!(a.len().abs_diff(b.len()) <= 1);
                    prop_assert!(w.edges.windows(2).all(|p| a.contains(p[0]) != a.contains(p[1])));
                }
                if w.kind == WitnessKind::EvenCycle {
                    prop_assert_eq!(w.edges.len() % 2, 0);
                }
            }
        }
    }

    #[test]
    fn degree_monotone_and_closed_form(g in graph_strategy(7)) {
        let all: Vec<Matching> = enumerate_matchings(&g).collect();
        let degrees: Vec<usize> = all.iter().map(|m| degree_of_matching(&g, m).total).collect();
        for (j, big) in all.iter().enumerate() {
            for e in big.iter() {
                let mut smaller = big.edges().clone();
                smaller.remove(e);
                let i = all.binary_search(&Matching::new(&g, smaller).unwrap()).unwrap();
                prop_assert!(degrees[i] <= degrees[j]);
            }
            if !has_common_neighbors(&g, big) {
                prop_assert_eq!(degree_closed_form(&g, big).unwrap().total, degrees[j]);
                prop_assert!(enumerate_good_cycles(&g, big).is_empty());
            }
            prop_assert_eq!(is_min_degree_matching(&g, big), degrees[j] == g.edge_count());
        }
    }

    #[test]
    fn verify_all_passes(g in graph_strategy(7)) {
        let report = verify_all(&g, 10_000).unwrap();
        let failures: Vec<&Check> = report.failures().collect();
        prop_assert!(failures.is_empty(), "{:?}", failures);
    }
}
