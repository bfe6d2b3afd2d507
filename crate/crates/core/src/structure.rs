//! Augmenting-path structures `G_M<P>`: the union of all augmenting paths
//! that share an edge with a given augmenting path `P`, the orders those
//! paths induce, the hat and check truncations, and the classification of
//! maximal matchings built on them.
//!
//! As elsewhere, `U` is the Konig source side of each component and `V` the
//! other side.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, Edge, Subgraph, VertexId, VertexSet};
use crate::konig::konig_cover;
use crate::matching::{is_maximal, AlternatingPath, Matching};

pub const DEFAULT_PATH_LIMIT: usize = 1_000_000;

/// Every simple augmenting path that starts at an unsaturated `U` vertex,
/// in lexicographic order of vertex ids.
pub fn enumerate_augmenting_paths(
    g: &BipartiteGraph,
    m: &Matching,
    limit: usize,
) -> Result<Vec<AlternatingPath>> {
    m.check_host(g)?;
    let mut out: Vec<Vec<VertexId>> = Vec::new();
    let mut visited = vec![false; g.vertex_count()];
    let mut path = Vec::new();

    fn extend(
        g: &BipartiteGraph,
        m: &Matching,
        limit: usize,
        path: &mut Vec<VertexId>,
        visited: &mut [bool],
        out: &mut Vec<Vec<VertexId>>,
    ) -> Result<()> {
        let x = *path.last().expect("path starts at a root");
        for &v in g.adj(x) {
            if visited[v.index()] || m.mate(x) == Some(v) {
                continue;
            }
            match m.mate(v) {
                None => {
                    if out.len() == limit {
                        return Err(Error::PathExplosion { limit });
                    }
                    let mut done = path.clone();
                    done.push(v);
                    out.push(done);
                }
                Some(w) if !visited[w.index()] => {
                    visited[v.index()] = true;
                    visited[w.index()] = true;
                    path.extend([v, w]);
                    extend(g, m, limit, path, visited, out)?;
                    path.truncate(path.len() - 2);
                    visited[v.index()] = false;
                    visited[w.index()] = false;
                }
                Some(_) => {}
            }
        }
        Ok(())
    }

    for u in g.source_vertices() {
        if m.is_saturated(u) {
            continue;
        }
        visited[u.index()] = true;
        path.push(u);
        extend(g, m, limit, &mut path, &mut visited, &mut out)?;
        path.pop();
        visited[u.index()] = false;
    }
    out.sort();
    Ok(out
        .into_iter()
        .map(|vs| AlternatingPath::unchecked(m, vs))
        .collect())
}

/// Positions along a path.
#[derive(Clone, Debug)]
pub struct PathOrder {
    rank: Vec<Option<usize>>,
}

impl PathOrder {
    pub fn new(g: &BipartiteGraph, p: &AlternatingPath) -> Self {
        let mut rank = vec![None; g.vertex_count()];
        for (i, v) in p.vertices().iter().enumerate() {
            rank[v.index()] = Some(i);
        }
        PathOrder { rank }
    }

    pub fn rank(&self, v: VertexId) -> Option<usize> {
        self.rank.get(v.index()).copied().flatten()
    }

    /// `a <= b` along the path; false if either is off the path.
    pub fn le(&self, a: VertexId, b: VertexId) -> bool {
        matches!((self.rank(a), self.rank(b)), (Some(x), Some(y)) if x <= y)
    }
}

/// The first and last common vertex of `p` and `q`, both taken in `p`'s
/// order, as `(join, meet)`. Both are `None` when the paths are disjoint.
pub fn meet_join(p: &AlternatingPath, q: &AlternatingPath) -> (Option<VertexId>, Option<VertexId>) {
    let mut common = p.vertices().iter().copied().filter(|&v| q.contains(v));
    let first = common.next();
    let last = common.next_back().or(first);
    (first, last)
}

fn edge_set(g: &BipartiteGraph, p: &AlternatingPath) -> BTreeSet<Edge> {
    p.edges(g).into_iter().collect()
}

#[derive(Clone, Debug)]
pub struct PathStructure {
    pub base_path: AlternatingPath,
    /// Every augmenting path sharing at least one edge with the base path,
    /// the base path included.
    pub family: Vec<AlternatingPath>,
    pub subgraph: Subgraph,
    /// `v^`: the latest point, in the base path's order, at which a path
    /// from another root first reaches the base path.
    pub hat_cut_vertex: Option<VertexId>,
    /// `u-check`: the earliest point, in the base path's order, at which a
    /// path towards another endpoint last leaves the base path.
    pub check_cut_vertex: Option<VertexId>,
    matching: Matching,
}

/// Builds `G_M<P>` from a fresh enumeration of augmenting paths.
pub fn path_structure(
    g: &BipartiteGraph,
    m: &Matching,
    p: &AlternatingPath,
) -> Result<PathStructure> {
    let all = enumerate_augmenting_paths(g, m, DEFAULT_PATH_LIMIT)?;
    path_structure_among(g, m, p, &all)
}

/// Builds `G_M<P>` choosing the family from `all`, which must hold every
/// augmenting path of `m`.
pub fn path_structure_among(
    g: &BipartiteGraph,
    m: &Matching,
    p: &AlternatingPath,
    all: &[AlternatingPath],
) -> Result<PathStructure> {
    m.check_host(g)?;
    if !p.is_augmenting_for(m) {
        return Err(Error::NotAugmenting);
    }
    let base_edges = edge_set(g, p);
    let family: Vec<AlternatingPath> = all
        .iter()
        .filter(|q| q.edges(g).iter().any(|e| base_edges.contains(e)))
        .cloned()
        .collect();
    if !family.iter().any(|q| q.vertices() == p.vertices()) {
        return Err(Error::MalformedStructure(
            "base path is missing from the enumerated paths".into(),
        ));
    }

    let mut subgraph = Subgraph::default();
    for q in &family {
        subgraph.vertices.extend(q.vertices().iter().copied());
        subgraph.edges.extend(q.edges(g));
    }

    let order = PathOrder::new(g, p);
    let rank = |v: VertexId| order.rank(v).expect("intersection lies on the base path");
    let hat_cut_vertex = family
        .iter()
        .filter(|q| q.first() != p.first())
        .filter_map(|q| meet_join(q, p).0)
        .max_by_key(|&v| rank(v));
    let check_cut_vertex = family
        .iter()
        .filter(|q| q.last() != p.last())
        .filter_map(|q| meet_join(q, p).1)
        .min_by_key(|&v| rank(v));

    Ok(PathStructure {
        base_path: p.clone(),
        family,
        subgraph,
        hat_cut_vertex,
        check_cut_vertex,
        matching: m.clone(),
    })
}

impl PathStructure {
    pub fn roots(&self) -> VertexSet {
        self.family.iter().map(AlternatingPath::first).collect()
    }

    pub fn endpoints(&self) -> VertexSet {
        self.family.iter().map(AlternatingPath::last).collect()
    }

    /// `v-check`, the mate of the check cut vertex.
    pub fn check_vertex(&self) -> Result<Option<VertexId>> {
        match self.check_cut_vertex {
            None => Ok(None),
            Some(u) => self.matching.mate(u).map(Some).ok_or_else(|| {
                Error::MalformedStructure(format!("check cut vertex {u} is unsaturated"))
            }),
        }
    }

    /// Drops, from every family path through `v^`, the vertices up to and
    /// including `v^`. Unchanged when the family has a single root.
    pub fn hat_subgraph(&self) -> Result<Subgraph> {
        if self.roots().len() <= 1 {
            return Ok(self.subgraph.clone());
        }
        let cut = self.hat_cut_vertex.ok_or_else(|| {
            Error::MalformedStructure("several roots but no hat cut vertex".into())
        })?;
        let mut removed = VertexSet::new();
        for q in &self.family {
            if let Some(i) = q.position(cut) {
                removed.extend(q.vertices()[..=i].iter().copied());
            }
        }
        let keep = self
            .subgraph
            .vertices
            .difference(&removed)
            .copied()
            .collect();
        Ok(self.subgraph.restrict(&keep))
    }

    /// The vertices up to and including `v-check` on every family path
    /// through it. Unchanged when the family has a single endpoint.
    pub fn check_subgraph(&self) -> Result<Subgraph> {
        if self.endpoints().len() <= 1 {
            return Ok(self.subgraph.clone());
        }
        let cut = self.check_vertex()?.ok_or_else(|| {
            Error::MalformedStructure("several endpoints but no check cut vertex".into())
        })?;
        let mut keep = VertexSet::new();
        for q in &self.family {
            if let Some(i) = q.position(cut) {
                keep.extend(q.vertices()[..=i].iter().copied());
            }
        }
        Ok(self.subgraph.restrict(&keep))
    }

    /// Unsaturated `V` vertices of `G_M<P>` outside the check subgraph.
    pub fn unsaturated_outside_check(&self, g: &BipartiteGraph) -> Result<VertexSet> {
        let check = self.check_subgraph()?;
        Ok(self
            .subgraph
            .vertices
            .iter()
            .copied()
            .filter(|&v| !check.contains(v) && !g.is_source(v) && !self.matching.is_saturated(v))
            .collect())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub path: AlternatingPath,
    pub unsaturated: VertexSet,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationVerdict {
    pub is_minimum: bool,
    pub witness: Option<Witness>,
}

/// Predicts whether Konig's procedure sends the maximal matching `m` to a
/// minimum cover: it does unless some augmenting path `P` leaves two or more
/// unsaturated `V` vertices in `G_M<P>` outside the check subgraph. The
/// first such path in lexicographic order is returned as the witness.
pub fn classify_matching(
    g: &BipartiteGraph,
    m: &Matching,
    limit: usize,
) -> Result<ClassificationVerdict> {
    if !is_maximal(g, m)? {
        return Err(Error::NotMaximal);
    }
    let all = enumerate_augmenting_paths(g, m, limit)?;
    for p in &all {
        let ps = path_structure_among(g, m, p, &all)?;
        let unsaturated = ps.unsaturated_outside_check(g)?;
        if unsaturated.len() >= 2 {
            return Ok(ClassificationVerdict {
                is_minimum: false,
                witness: Some(Witness {
                    path: p.clone(),
                    unsaturated,
                }),
            });
        }
    }
    Ok(ClassificationVerdict {
        is_minimum: true,
        witness: None,
    })
}

/// `|K_M| - |K_{M xor P}|`.
pub fn cover_delta_under_augment(
    g: &BipartiteGraph,
    m: &Matching,
    p: &AlternatingPath,
) -> Result<i64> {
    m.check_host(g)?;
    if !p.is_augmenting_for(m) {
        return Err(Error::NotAugmenting);
    }
    let before = konig_cover(g, m)?.len() as i64;
    let after = konig_cover(g, &m.augment(g, p)?)?.len() as i64;
    Ok(before - after)
}

/// Vertices where two paths meet without sharing an edge, other than
/// vertices that are an endpoint of both.
pub fn non_endpoint_contacts(
    g: &BipartiteGraph,
    p: &AlternatingPath,
    q: &AlternatingPath,
) -> VertexSet {
    let pe = edge_set(g, p);
    if q.edges(g).iter().any(|e| pe.contains(e)) {
        return VertexSet::new();
    }
    let is_end = |a: &AlternatingPath, v: VertexId| a.first() == v || a.last() == v;
    p.vertices()
        .iter()
        .copied()
        .filter(|&v| q.contains(v) && !(is_end(p, v) && is_end(q, v)))
        .collect()
}
