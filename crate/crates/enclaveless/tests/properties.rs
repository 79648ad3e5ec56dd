//! Property tests for the set algebra, codecs, and game bounds.

use proptest::prelude::*;

use enclaveless::families;
use enclaveless::game::{solve, GameKind, Side};
use enclaveless::graph::{Graph, VertexSet};
use enclaveless::invariants::{
    self, compute_invariants, is_dominating, is_enclaveless, is_maximal_enclaveless,
    is_minimal_dominating,
};
use enclaveless::io::{edgelist, graph6};

/// A labeled graph on 1..=max_n vertices with an arbitrary edge selection.
fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let bits = n * (n - 1) / 2;
        (Just(n), proptest::collection::vec(any::<bool>(), bits)).prop_map(|(n, picks)| {
            let mut edges = Vec::new();
            let mut t = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if picks[t] {
                        edges.push((u, v));
                    }
                    t += 1;
                }
            }
            Graph::new(n, &edges).unwrap()
        })
    })
}

proptest! {
    /// A set dominates iff its complement is enclaveless.
    #[test]
    fn domination_complements_enclaveless(g in arb_graph(8), mask in any::<u64>()) {
        let n = g.order();
        let d = VertexSet::from_bits(mask).intersection(VertexSet::full(n));
        prop_assert_eq!(is_dominating(&g, d), is_enclaveless(&g, d.complement(n)));
    }

    /// Minimal dominating sets and maximal enclaveless sets are exchanged
    /// by complementation.
    #[test]
    fn minimality_complements_maximality(g in arb_graph(7), mask in any::<u64>()) {
        let n = g.order();
        let d = VertexSet::from_bits(mask).intersection(VertexSet::full(n));
        prop_assert_eq!(
            is_minimal_dominating(&g, d),
            is_maximal_enclaveless(&g, d.complement(n))
        );
    }

    /// The two halves of the size identity hold on every graph.
    #[test]
    fn size_identities(g in arb_graph(8)) {
        let r = compute_invariants(&g).unwrap();
        prop_assert_eq!(r.gamma + r.upper_psi, r.n);
        prop_assert_eq!(r.upper_gamma + r.psi, r.n);
        // the maximality-structure chain
        prop_assert!(r.alpha <= r.upper_gamma);
        prop_assert!(r.upper_gamma <= r.ir.unwrap());
        // well-dominated iff the dominating extremes meet
        prop_assert_eq!(r.well_dominated, r.gamma == r.upper_gamma);
    }

    /// Both game values sit between the lower and upper enclaveless numbers.
    #[test]
    fn game_values_are_sandwiched(g in arb_graph(8)) {
        let r = compute_invariants(&g).unwrap();
        for starter in [Side::Maximizing, Side::Minimizing] {
            let v = solve(&g, GameKind::Enclaveless, starter).unwrap().total_moves;
            prop_assert!(r.psi <= v && v <= r.upper_psi);
        }
    }

    /// The domination game ends with a dominating set of at least gamma and
    /// at most n vertices.
    #[test]
    fn domination_game_values_bracket_gamma(g in arb_graph(7)) {
        let r = compute_invariants(&g).unwrap();
        for starter in [Side::Maximizing, Side::Minimizing] {
            let v = solve(&g, GameKind::Domination, starter).unwrap().total_moves;
            prop_assert!(r.gamma <= v && v <= r.n);
        }
    }

    /// graph6 round-trips every graph bit-exactly.
    #[test]
    fn graph6_roundtrip(g in arb_graph(12)) {
        let token = graph6::write_graph6(&g);
        prop_assert_eq!(graph6::parse_graph6(&token).unwrap(), g);
    }

    /// The edge-list format round-trips to an identical adjacency structure.
    #[test]
    fn edge_list_roundtrip(g in arb_graph(12)) {
        let text = edgelist::write_edge_list(&g);
        prop_assert_eq!(edgelist::parse_edge_list(&text).unwrap(), g);
    }

    /// Line graphs never contain an induced 3-star.
    #[test]
    fn line_graphs_are_claw_free(g in arb_graph(7)) {
        if let Ok((line, _)) = g.line_graph() {
            prop_assert!(!line.has_induced_star(3));
        }
    }

    /// Coronas double the order, are isolate-free, give every pendant
    /// degree one, and are well-dominated.
    #[test]
    fn corona_shape(g in arb_graph(6)) {
        let n = g.order();
        let cor = g.corona().unwrap();
        prop_assert_eq!(cor.order(), 2 * n);
        prop_assert!(cor.is_isolate_free());
        for v in n..2 * n {
            prop_assert_eq!(cor.degree(v), 1);
        }
        let r = compute_invariants(&cor).unwrap();
        prop_assert!(r.well_dominated);
        prop_assert_eq!(r.gamma, n);
    }

    /// Every closed neighborhood contains its center and has degree + 1
    /// vertices.
    #[test]
    fn closed_neighborhood_shape(g in arb_graph(10)) {
        for v in g.vertices() {
            let nb = g.closed_neighborhood(v);
            prop_assert!(nb.contains(v));
            prop_assert_eq!(nb.len(), g.degree(v) + 1);
        }
    }

    /// Private neighborhoods restrict external private neighborhoods.
    #[test]
    fn epn_is_pn_without_the_set(g in arb_graph(8), mask in any::<u64>()) {
        let n = g.order();
        let s = VertexSet::from_bits(mask).intersection(VertexSet::full(n));
        for v in s.iter() {
            let pn = invariants::pn(&g, v, s);
            let epn = invariants::epn(&g, v, s);
            // external private neighbors are exactly the private neighbors
            // outside s that are adjacent to v
            let expected: VertexSet = pn
                .minus(s)
                .iter()
                .filter(|&w| g.has_edge(w, v))
                .collect();
            prop_assert_eq!(epn, expected);
        }
    }
}

proptest! {
    /// The text parsers reject malformed input with errors, never panics.
    #[test]
    fn parsers_never_panic(s in ".{0,60}") {
        let _ = graph6::parse_graph6(&s);
        let _ = edgelist::parse_edge_list(&s);
        let _ = families::parse_family_spec(&s);
    }

    /// Printable-byte soup stresses the graph6 body/padding paths.
    #[test]
    fn graph6_parser_handles_printable_soup(bytes in proptest::collection::vec(63u8..=126, 0..30)) {
        let s = String::from_utf8(bytes).unwrap();
        if let Ok(g) = graph6::parse_graph6(&s) {
            // anything accepted must round-trip to itself
            prop_assert_eq!(graph6::parse_graph6(&graph6::write_graph6(&g)).unwrap(), g);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// Labeled trees decoded from random sequences are trees, and their
    /// family members validate whole.
    #[test]
    fn prufer_trees_build_family_members(seq in proptest::collection::vec(0usize..4, 2)) {
        let tree = families::tree_from_prufer(&seq).unwrap();
        prop_assert!(tree.is_tree());
        let member = families::build_family_f(&families::FamilyFSpec {
            trees: vec![tree.edges()],
            glue_pairs: vec![],
        })
        .unwrap();
        prop_assert!(member.graph.is_claw_free());
        prop_assert_eq!(member.b.len(), member.a.len() + 1);
    }
}
