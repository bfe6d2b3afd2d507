use std::collections::BTreeSet;

use konig_core::corpus::connected_bipartite_graphs;
use konig_core::oracle::{
    all_maximal_matchings, all_minimum_covers, maximal_matchings_by_branching,
    minimum_covers_by_branching, OracleBudget,
};

const BUDGET: u64 = 1 << 24;

#[test]
fn branching_covers_match_subset_scan_on_corpus() {
    let b = OracleBudget::default();
    for g in connected_bipartite_graphs(8).unwrap() {
        assert_eq!(
            minimum_covers_by_branching(&g, BUDGET).unwrap(),
            all_minimum_covers(&g, &b).unwrap(),
            "{:?}",
            g.edges()
        );
    }
}

#[test]
fn branching_maximal_matchings_match_filter_on_corpus() {
    let b = OracleBudget::default();
    for g in connected_bipartite_graphs(8).unwrap() {
        let fast: BTreeSet<_> = maximal_matchings_by_branching(&g, BUDGET)
            .unwrap()
            .iter()
            .map(|m| m.edge_set(&g))
            .collect();
        let slow: BTreeSet<_> = all_maximal_matchings(&g, &b)
            .unwrap()
            .iter()
            .map(|m| m.edge_set(&g))
            .collect();
        assert_eq!(fast, slow, "{:?}", g.edges());
    }
}
