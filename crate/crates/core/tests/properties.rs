mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;
use zagreb_core::formulas::{predicted_degree_partition, predicted_edge_partition};
use zagreb_core::indices::{
    edge_degree_partition, first_coindex_identity, first_zagreb, first_zagreb_by_edges,
    second_coindex_identity, second_zagreb,
};
use zagreb_core::io::{emit_edge_list, emit_graph6, parse_edge_list, parse_graph6};
use zagreb_core::{
    evaluate_formula, index_report, line_cut_vertex_graph, line_graph, subdivision, FormulaId,
    Graph, GraphBuilder, VertexLabel,
};

use common::{brute_force_coindices, brute_force_cut_vertices, components_without, v};

fn graph_strategy(max_order: usize) -> impl Strategy<Value = Graph> {
    (0..=max_order).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(
            move |bits| {
                let mut b = GraphBuilder::new();
                for i in 0..n {
                    b.add_vertex(v(i));
                }
                let mut it = bits.into_iter();
                for j in 1..n {
                    for i in 0..j {
                        if it.next().unwrap() {
                            b.add_edge(v(i), v(j)).unwrap();
                        }
                    }
                }
                b.build()
            },
        )
    })
}

fn choose2(d: usize) -> usize {
    d * d.saturating_sub(1) / 2
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn handshake_and_symmetry(g in graph_strategy(14)) {
        let total: usize = g.vertices().iter().map(|x| g.degree(x).unwrap()).sum();
        prop_assert_eq!(total, 2 * g.size());
        prop_assert_eq!(g.degree_sequence().iter().sum::<usize>(), 2 * g.size());
        for x in g.vertices() {
            for y in g.neighbors(x).unwrap() {
                prop_assert!(g.has_edge(y, x));
            }
        }
    }

    #[test]
    fn articulation_points_match_removal_oracle(g in graph_strategy(12)) {
        prop_assert_eq!(g.articulation_points(), brute_force_cut_vertices(&g));
    }

    #[test]
    fn unicyclic_matches_cyclomatic_number(g in graph_strategy(10)) {
        let c = components_without(&g, None);
        // Independent cycle count: edges outside a spanning forest.
        let surplus = g.size() + c - g.order();
        let expected = c == 1 && surplus == 1;
        prop_assert_eq!(g.is_unicyclic(), expected);
        prop_assert_eq!(g.is_connected(), c <= 1);
    }

    #[test]
    fn zagreb_identities(g in graph_strategy(14)) {
        let r = index_report(&g).unwrap();
        prop_assert!(r.is_consistent());
        prop_assert_eq!(first_zagreb(&g).unwrap(), first_zagreb_by_edges(&g).unwrap());
        let (c1, c2) = brute_force_coindices(&g);
        prop_assert_eq!((r.m1_coindex, r.m2_coindex), (c1, c2));
        prop_assert_eq!(first_coindex_identity(r.order, r.size, r.m1).unwrap(), i128::from(c1));
        prop_assert_eq!(second_coindex_identity(r.size, r.m1, r.m2).unwrap(), i128::from(c2));
        // All pairs: Σ_{u<v} d(u)d(v) = ((Σd)² - Σd²) / 2 splits into adjacent and non-adjacent.
        let sum_d = 2 * r.size;
        prop_assert_eq!(second_zagreb(&g).unwrap() + c2, (sum_d * sum_d - r.m1) / 2);
        let from_partition: u64 = edge_degree_partition(&g)
            .iter()
            .map(|(&(a, b), &n)| (n * a * b) as u64)
            .sum();
        prop_assert_eq!(from_partition, r.m2);
    }

    #[test]
    fn operator_identities(g in graph_strategy(11)) {
        let (n, m) = (g.order(), g.size());
        let s = subdivision(&g).unwrap();
        prop_assert_eq!((s.order(), s.size()), (n + m, 2 * m));
        for (a, b) in s.edges() {
            let original = |x: &VertexLabel| matches!(x, VertexLabel::Original(_));
            prop_assert!(original(a) != original(b), "subdivision must be bipartite");
        }

        let degree_pairs: usize = g.vertices().iter().map(|x| choose2(g.degree(x).unwrap())).sum();
        let l = line_graph(&g);
        prop_assert_eq!((l.order(), l.size()), (m, degree_pairs));

        let cut = g.articulation_points();
        let cut_degrees: usize = cut.iter().map(|c| g.degree(c).unwrap()).sum();
        let lc = line_cut_vertex_graph(&g);
        prop_assert_eq!(lc.order(), m + cut.len());
        prop_assert_eq!(lc.size(), degree_pairs + cut_degrees);
        let restricted = lc.induced_subgraph(|x| matches!(x, VertexLabel::EdgeVertex(..)));
        prop_assert_eq!(&restricted, &l);

        prop_assert_eq!(subdivision(&g).unwrap(), s);
        prop_assert_eq!(line_graph(&g), l);
        prop_assert_eq!(line_cut_vertex_graph(&g), lc);
    }

    #[test]
    fn edge_list_round_trip(g in graph_strategy(12)) {
        let derived = line_cut_vertex_graph(&subdivision(&g).unwrap());
        for h in [g, derived] {
            prop_assert_eq!(parse_edge_list(&emit_edge_list(&h)).unwrap(), h);
        }
    }

    #[test]
    fn graph6_round_trip(g in graph_strategy(50)) {
        let back = parse_graph6(&emit_graph6(&g).unwrap()).unwrap();
        prop_assert_eq!(back.order(), g.order());
        prop_assert_eq!(back.size(), g.size());
        prop_assert_eq!(back.degree_sequence(), g.degree_sequence());
    }
}

#[test]
fn graph6_round_trip_is_exact_in_sorted_order() {
    // Single-digit labels sort numerically, so the re-read graph is identical.
    let g = Graph::from_named_edges([("0", "3"), ("1", "2"), ("2", "4"), ("3", "4")]).unwrap();
    let back = parse_graph6(&emit_graph6(&g).unwrap()).unwrap();
    assert_eq!(back, g);
}

#[test]
fn formula_grid_invariants() {
    let mut non_integer = BTreeSet::new();
    for k in 3..=12i64 {
        for leaves in 1..=12i64 {
            let n = k + leaves;
            for f in FormulaId::SCALARS {
                if !evaluate_formula(f, k, n).unwrap().is_integer() {
                    non_integer.insert(f);
                }
            }
            let int = |f| evaluate_formula(f, k, n).unwrap().to_i128().unwrap() as usize;
            let (ls_order, ls_size) = (int(FormulaId::LsOrder), int(FormulaId::LsSize));
            let (lcs_order, lcs_size) = (int(FormulaId::LcsOrder), int(FormulaId::LcsSize));

            let ls_deg = predicted_degree_partition(FormulaId::LsDegreePartition, k, n).unwrap();
            let lcs_deg = predicted_degree_partition(FormulaId::LcsDegreePartition, k, n).unwrap();
            let ls_edge = predicted_edge_partition(FormulaId::LsEdgePartition, k, n).unwrap();
            let lcs_edge = predicted_edge_partition(FormulaId::LcsEdgePartition, k, n).unwrap();
            assert_eq!(ls_deg.values().sum::<usize>(), ls_order);
            assert_eq!(lcs_deg.values().sum::<usize>(), lcs_order);
            assert_eq!(ls_edge.values().sum::<usize>(), ls_size);
            assert_eq!(lcs_edge.values().sum::<usize>(), lcs_size, "k={k} n={n}");

            let m1: usize = ls_deg.iter().map(|(d, c)| c * d * d).sum();
            assert_eq!(
                m1 as i128,
                evaluate_formula(FormulaId::LsFirstZagreb, k, n)
                    .unwrap()
                    .to_i128()
                    .unwrap()
            );
        }
    }
    // Only the second coindex of L_c(S(CS)) has a fractional part anywhere on the grid.
    assert_eq!(non_integer, BTreeSet::from([FormulaId::LcsSecondCoindex]));
}
