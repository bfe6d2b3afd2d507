//! Every connected bipartite graph on a few vertices, one per isomorphism
//! class that keeps the sides in place.
//!
//! A graph with `a <= b` is encoded by the neighbourhoods of its `b` RIGHT
//! vertices as bit masks over the `a` LEFT vertices. Listing those masks in
//! sorted order fixes the RIGHT labelling, and a graph is kept only when no
//! relabelling of the LEFT side gives a smaller sorted list.

use crate::error::{Error, Result};
use crate::graph::BipartiteGraph;

pub const MAX_CORPUS_VERTICES: usize = 10;

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                go(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

fn permute_mask(mask: u32, perm: &[usize]) -> u32 {
    perm.iter()
        .enumerate()
        .filter(|(_, &from)| mask >> from & 1 == 1)
        .fold(0, |acc, (to, _)| acc | 1 << to)
}

fn is_canonical(cols: &[u32], perms: &[Vec<usize>], scratch: &mut Vec<u32>) -> bool {
    for perm in perms {
        scratch.clear();
        scratch.extend(cols.iter().map(|&c| permute_mask(c, perm)));
        scratch.sort_unstable();
        if scratch.as_slice() < cols {
            return false;
        }
    }
    true
}

fn is_connected(a: usize, cols: &[u32]) -> bool {
    // Grow the set of reached LEFT vertices through shared columns.
    let mut reached: u32 = 1;
    loop {
        let next = cols
            .iter()
            .filter(|&&c| c & reached != 0)
            .fold(reached, |acc, &c| acc | c);
        if next == reached {
            break;
        }
        reached = next;
    }
    reached == (1 << a) - 1 && cols.iter().all(|&c| c & reached != 0)
}

fn to_graph(a: usize, cols: &[u32]) -> BipartiteGraph {
    let left: Vec<String> = (0..a).map(|i| format!("u{i}")).collect();
    let right: Vec<String> = (0..cols.len()).map(|j| format!("v{j}")).collect();
    let edges: Vec<(String, String)> = cols
        .iter()
        .enumerate()
        .flat_map(|(j, &c)| {
            (0..a)
                .filter(move |i| c >> i & 1 == 1)
                .map(move |i| (format!("u{i}"), format!("v{j}")))
        })
        .collect();
    BipartiteGraph::from_labels(&left, &right, &edges).expect("generated graph is valid")
}

/// The connected graphs with exactly `a` LEFT and `b` RIGHT vertices.
pub fn graphs_with_sides(a: usize, b: usize) -> Vec<BipartiteGraph> {
    assert!(a >= 1 && b >= 1 && a + b <= MAX_CORPUS_VERTICES);
    let perms = permutations(a);
    let top = (1u32 << a) - 1;
    let mut out = Vec::new();
    let mut cols = vec![1u32; b];
    let mut scratch = Vec::with_capacity(b);
    loop {
        let rows = cols.iter().fold(0, |acc, &c| acc | c);
        if rows == top && is_connected(a, &cols) && is_canonical(&cols, &perms, &mut scratch) {
            out.push(to_graph(a, &cols));
        }
        // Next nondecreasing sequence over 1..=top.
        let Some(k) = (0..b).rev().find(|&k| cols[k] < top) else {
            break;
        };
        let v = cols[k] + 1;
        for c in &mut cols[k..] {
            *c = v;
        }
    }
    out
}

/// Connected graphs on 2 to `max_vertices` vertices, smaller side LEFT, in
/// order of vertex count and then LEFT size.
pub fn connected_bipartite_graphs(max_vertices: usize) -> Result<Vec<BipartiteGraph>> {
    if max_vertices > MAX_CORPUS_VERTICES {
        return Err(Error::BudgetExceeded(format!(
            "corpus limited to {MAX_CORPUS_VERTICES} vertices, {max_vertices} requested"
        )));
    }
    let mut out = Vec::new();
    for n in 2..=max_vertices {
        for a in 1..=n / 2 {
            out.extend(graphs_with_sides(a, n - a));
        }
    }
    Ok(out)
}
