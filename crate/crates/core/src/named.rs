//! Small graphs that come up repeatedly in tests, fixtures and benchmarks.

use crate::graph::BipartiteGraph;

/// The path 1-2-3-4 with LEFT = {1, 3} and RIGHT = {2, 4}.
pub fn p4() -> BipartiteGraph {
    BipartiteGraph::from_labels(
        &["1", "3"],
        &["2", "4"],
        &[("1", "2"), ("2", "3"), ("3", "4")],
    )
    .expect("valid graph")
}

/// Two leaves a1, a2 on b1; b1 joined to c1; c1 carrying three leaves
/// d1, d2, d3. LEFT = {a1, a2, c1}, RIGHT = {b1, d1, d2, d3}.
pub fn fork() -> BipartiteGraph {
    BipartiteGraph::from_labels(
        &["a1", "a2", "c1"],
        &["b1", "d1", "d2", "d3"],
        &[
            ("a1", "b1"),
            ("a2", "b1"),
            ("b1", "c1"),
            ("c1", "d1"),
            ("c1", "d2"),
            ("c1", "d3"),
        ],
    )
    .expect("valid graph")
}

pub fn k2() -> BipartiteGraph {
    BipartiteGraph::build(1, 1, &[(0, 0)]).expect("valid graph")
}

pub fn complete(left: usize, right: usize) -> BipartiteGraph {
    let edges: Vec<(usize, usize)> = (0..left)
        .flat_map(|i| (0..right).map(move |j| (i, j)))
        .collect();
    BipartiteGraph::build(left, right, &edges).expect("valid graph")
}

/// The path on `n >= 2` vertices `0-1-...-(n-1)`, labelled by position, with
/// even positions on the LEFT.
pub fn path(n: usize) -> BipartiteGraph {
    assert!(n >= 2);
    let labels: Vec<String> = (0..n).map(|i| i.to_string()).collect();
    let left: Vec<&str> = labels.iter().step_by(2).map(String::as_str).collect();
    let right: Vec<&str> = labels
        .iter()
        .skip(1)
        .step_by(2)
        .map(String::as_str)
        .collect();
    let edges: Vec<(&str, &str)> = labels
        .windows(2)
        .map(|w| (w[0].as_str(), w[1].as_str()))
        .collect();
    BipartiteGraph::from_labels(&left, &right, &edges).expect("valid graph")
}
