//! Recovering a matching from a minimum vertex cover, so that Konig's
//! procedure maps the matching back to that cover.
//!
//! `U` is the Konig source side of each component (see
//! [`BipartiteGraph::is_source`]); everything below is per vertex, so
//! disconnected graphs are handled componentwise without extra work.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, Edge, Subgraph, VertexId, VertexSet};
use crate::konig::{is_minimum_cover, konig_cover};
use crate::matching::{maximum_matching, Matching};

/// The cover splits `G` into an upper part induced by `(V & C) | (U - C)`,
/// a lower part induced by `(U & C) | (V - C)`, and the edges inside `C`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverSplit {
    pub up: Subgraph,
    pub down: Subgraph,
    pub cut_edges: BTreeSet<Edge>,
}

pub fn split_by_cover(g: &BipartiteGraph, c: &VertexSet) -> Result<CoverSplit> {
    if !is_minimum_cover(g, c) {
        return Err(Error::NotMinimumCover);
    }
    Ok(split_unchecked(g, c))
}

fn split_unchecked(g: &BipartiteGraph, c: &VertexSet) -> CoverSplit {
    let (up, down): (Vec<VertexId>, Vec<VertexId>) = g
        .vertices()
        .partition(|&v| g.is_source(v) != c.contains(&v));
    let cut_edges = g
        .edges()
        .iter()
        .copied()
        .filter(|e| c.contains(&e.left) && c.contains(&e.right))
        .collect();
    CoverSplit {
        up: Subgraph::induced(g, up),
        down: Subgraph::induced(g, down),
        cut_edges,
    }
}

/// A maximum matching of the lower part, which must saturate `U & C`.
/// Returned in `g`'s ids.
pub fn saturating_matching_down(
    g: &BipartiteGraph,
    split: &CoverSplit,
    c: &VertexSet,
) -> Result<Matching> {
    let local = split.down.materialize(g);
    let m_local = maximum_matching(&local.graph, &Matching::empty(&local.graph))?;
    let edges = m_local.edges(&local.graph).into_iter().map(|e| {
        g.edge_between(local.parent_of(e.left), local.parent_of(e.right))
            .expect("subgraph edge exists in parent")
    });
    let m = Matching::from_edges(g, edges)?;
    let unsaturated = c.iter().any(|&v| g.is_source(v) && !m.is_saturated(v));
    if unsaturated {
        return Err(Error::SaturationImpossible);
    }
    Ok(m)
}

/// Roots of the upper part, `U - C`, in ascending id order.
pub fn default_visit_order(g: &BipartiteGraph, c: &VertexSet) -> Vec<VertexId> {
    g.source_vertices().filter(|v| !c.contains(v)).collect()
}

fn check_visit_order(g: &BipartiteGraph, c: &VertexSet, order: &[VertexId]) -> Result<()> {
    let mut expected = default_visit_order(g, c);
    let mut given = order.to_vec();
    expected.sort();
    given.sort();
    if expected != given {
        return Err(Error::InvalidConfig(
            "visit order must be a permutation of the uncovered source vertices".into(),
        ));
    }
    Ok(())
}

/// Builds the upper matching. Each root `u` in `visit_order` that is still
/// unsaturated starts a search: for every unsaturated neighbour `v` of the
/// current vertex `x`, the first unsaturated neighbour `w != u` of `v` is
/// matched to `v` and the search continues from `w`. Neighbours are scanned
/// in ascending id order and only vertices of the upper part are used.
pub fn reverse_procedure_up(
    g: &BipartiteGraph,
    split: &CoverSplit,
    visit_order: &[VertexId],
) -> Matching {
    let mut m = Matching::empty(g);
    let in_up = |v: VertexId| split.up.contains(v);
    for &root in visit_order {
        if m.is_saturated(root) {
            continue;
        }
        // Each frame is a vertex and the position of the next neighbour to
        // try. Returning from a child leaves its `v` saturated, so the parent
        // just moves on to its next neighbour.
        let mut stack: Vec<(VertexId, usize)> = vec![(root, 0)];
        while let Some(frame) = stack.last_mut() {
            let (x, start) = *frame;
            let next = g.adj(x)[start..]
                .iter()
                .position(|&v| in_up(v) && !m.is_saturated(v));
            let Some(offset) = next else {
                stack.pop();
                continue;
            };
            frame.1 = start + offset + 1;
            let v = g.adj(x)[start + offset];
            let w = g
                .adj(v)
                .iter()
                .copied()
                .find(|&w| w != root && in_up(w) && !m.is_saturated(w));
            if let Some(w) = w {
                m.link(v, w);
                stack.push((w, 0));
            }
        }
    }
    m
}

#[derive(Clone, Debug)]
pub struct ReverseResult {
    pub split: CoverSplit,
    pub m_up: Matching,
    pub m_down: Matching,
    pub combined: Matching,
    pub visit_order: Vec<VertexId>,
}

/// Runs both halves and checks that Konig's procedure maps the combined
/// matching back to `c`. `visit_order` defaults to ascending ids.
pub fn reverse_konig(
    g: &BipartiteGraph,
    c: &VertexSet,
    visit_order: Option<&[VertexId]>,
) -> Result<ReverseResult> {
    let split = split_by_cover(g, c)?;
    let visit_order = match visit_order {
        Some(order) => {
            check_visit_order(g, c, order)?;
            order.to_vec()
        }
        None => default_visit_order(g, c),
    };
    let m_down = saturating_matching_down(g, &split, c)?;
    let m_up = reverse_procedure_up(g, &split, &visit_order);
    let combined = Matching::from_edges(g, m_up.edges(g).into_iter().chain(m_down.edges(g)))?;
    if konig_cover(g, &combined)?.vertices() != c {
        return Err(Error::RoundTripFailed);
    }
    Ok(ReverseResult {
        split,
        m_up,
        m_down,
        combined,
        visit_order,
    })
}

/// Edges `(u, v)` of the upper part with both ends unsaturated by `m_up`
/// where `v` has a neighbour in the upper part other than `u`. Here `u` is
/// the endpoint outside the cover.
pub fn lone_soldier_exceptions(
    g: &BipartiteGraph,
    split: &CoverSplit,
    m_up: &Matching,
) -> Vec<(VertexId, VertexId)> {
    let mut out = Vec::new();
    for e in &split.up.edges {
        if m_up.is_saturated(e.left) || m_up.is_saturated(e.right) {
            continue;
        }
        let (u, v) = if g.is_source(e.left) {
            (e.left, e.right)
        } else {
            (e.right, e.left)
        };
        if g.adj(v).iter().any(|&x| x != u && split.up.contains(x)) {
            out.push((u, v));
        }
    }
    out
}
