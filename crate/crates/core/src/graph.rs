//! Bipartite graph representation.
//!
//! Vertices carry dense ids `0..n`, a [`Side`], and an external label used for
//! reporting. Every public constructor normalizes so that the LEFT side is never
//! larger than the RIGHT side; when the input has it the other way round the
//! sides are flipped and [`BipartiteGraph::swapped`] records it.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::hash::{DefaultHasher, Hash, Hasher};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct VertexId(pub usize);

impl VertexId {
    #[inline]
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

pub type VertexSet = BTreeSet<VertexId>;

#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn opposite(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

/// An edge, stored with its LEFT endpoint first.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub left: VertexId,
    pub right: VertexId,
}

impl Edge {
    pub fn contains(self, v: VertexId) -> bool {
        self.left == v || self.right == v
    }

    /// The endpoint that is not `v`. `v` must be an endpoint.
    pub fn other(self, v: VertexId) -> VertexId {
        debug_assert!(self.contains(v));
        if self.left == v {
            self.right
        } else {
            self.left
        }
    }
}

#[derive(Clone, Debug)]
pub struct BipartiteGraph {
    sides: Vec<Side>,
    labels: Vec<String>,
    label_index: HashMap<String, VertexId>,
    adj: Vec<Vec<VertexId>>,
    edges: Vec<Edge>,
    /// Membership in the side Konig's procedure searches from, decided per
    /// connected component (the smaller side, ties to LEFT).
    source: Vec<bool>,
    swapped: bool,
    fingerprint: u64,
}

impl PartialEq for BipartiteGraph {
    fn eq(&self, other: &Self) -> bool {
        self.sides == other.sides && self.edges == other.edges && self.labels == other.labels
    }
}

impl Eq for BipartiteGraph {}

impl BipartiteGraph {
    /// Builds a graph from side-local indices: `(i, j)` joins LEFT vertex `i`
    /// to RIGHT vertex `j`. LEFT vertices get ids `0..left_count`, RIGHT
    /// vertices follow. Labels are `L<i>` and `R<j>`. Duplicate edges are
    /// dropped.
    pub fn build(left_count: usize, right_count: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let n = left_count + right_count;
        let mut sides = vec![Side::Left; left_count];
        sides.resize(n, Side::Right);
        let labels = (0..left_count)
            .map(|i| format!("L{i}"))
            .chain((0..right_count).map(|j| format!("R{j}")))
            .collect();
        let mut pairs = Vec::with_capacity(edges.len());
        for &(i, j) in edges {
            if i >= left_count {
                return Err(Error::IndexOutOfRange {
                    index: i,
                    count: left_count,
                });
            }
            if j >= right_count {
                return Err(Error::IndexOutOfRange {
                    index: j,
                    count: right_count,
                });
            }
            pairs.push((VertexId(i), VertexId(left_count + j)));
        }
        Self::from_parts(sides, labels, &pairs)
    }

    /// Builds a graph from labelled sides and labelled edges. Each edge may
    /// list its endpoints in either order.
    pub fn from_labels<S: AsRef<str>>(left: &[S], right: &[S], edges: &[(S, S)]) -> Result<Self> {
        let mut sides = Vec::with_capacity(left.len() + right.len());
        let mut labels = Vec::with_capacity(left.len() + right.len());
        for l in left {
            sides.push(Side::Left);
            labels.push(l.as_ref().to_string());
        }
        for r in right {
            sides.push(Side::Right);
            labels.push(r.as_ref().to_string());
        }
        let index = index_labels(&labels)?;
        let mut pairs = Vec::with_capacity(edges.len());
        for (a, b) in edges {
            let a = *index
                .get(a.as_ref())
                .ok_or_else(|| Error::UnknownLabel(a.as_ref().to_string()))?;
            let b = *index
                .get(b.as_ref())
                .ok_or_else(|| Error::UnknownLabel(b.as_ref().to_string()))?;
            pairs.push((a, b));
        }
        Self::from_parts(sides, labels, &pairs)
    }

    /// General constructor over explicit per-vertex sides.
    pub fn from_parts(
        sides: Vec<Side>,
        labels: Vec<String>,
        edges: &[(VertexId, VertexId)],
    ) -> Result<Self> {
        Self::assemble(sides, labels, edges, true)
    }

    /// Same as [`from_parts`](Self::from_parts) but never flips sides. Used
    /// for subgraphs, which must keep their parent's side assignment.
    pub(crate) fn assemble(
        mut sides: Vec<Side>,
        labels: Vec<String>,
        edges: &[(VertexId, VertexId)],
        normalize: bool,
    ) -> Result<Self> {
        assert_eq!(sides.len(), labels.len(), "one label per vertex");
        let n = sides.len();
        let label_index = index_labels(&labels)?;
        let mut edge_set = BTreeSet::new();
        for &(a, b) in edges {
            for v in [a, b] {
                if v.index() >= n {
                    return Err(Error::IndexOutOfRange {
                        index: v.index(),
                        count: n,
                    });
                }
            }
            if a == b {
                return Err(Error::SelfLoop(labels[a.index()].clone()));
            }
            let edge = match (sides[a.index()], sides[b.index()]) {
                (Side::Left, Side::Right) => Edge { left: a, right: b },
                (Side::Right, Side::Left) => Edge { left: b, right: a },
                _ => {
                    return Err(Error::SameSideEdge(
                        labels[a.index()].clone(),
                        labels[b.index()].clone(),
                    ))
                }
            };
            edge_set.insert(edge);
        }

        let left_count = sides.iter().filter(|s| **s == Side::Left).count();
        let swapped = normalize && left_count > n - left_count;
        let edges: Vec<Edge> = if swapped {
            for s in sides.iter_mut() {
                *s = s.opposite();
            }
            let mut flipped: Vec<Edge> = edge_set
                .into_iter()
                .map(|e| Edge {
                    left: e.right,
                    right: e.left,
                })
                .collect();
            flipped.sort();
            flipped
        } else {
            edge_set.into_iter().collect()
        };

        let mut adj = vec![Vec::new(); n];
        for e in &edges {
            adj[e.left.index()].push(e.right);
            adj[e.right.index()].push(e.left);
        }
        for list in adj.iter_mut() {
            list.sort();
        }

        let mut hasher = DefaultHasher::new();
        sides.hash(&mut hasher);
        edges.hash(&mut hasher);
        let fingerprint = hasher.finish();

        let mut g = BipartiteGraph {
            sides,
            labels,
            label_index,
            adj,
            edges,
            source: Vec::new(),
            swapped,
            fingerprint,
        };
        g.source = g.compute_source_sides();
        Ok(g)
    }

    fn compute_source_sides(&self) -> Vec<bool> {
        let mut source = vec![false; self.vertex_count()];
        for component in self.component_vertex_lists() {
            let left = component
                .iter()
                .filter(|v| self.sides[v.index()] == Side::Left)
                .count();
            let source_side = if left <= component.len() - left {
                Side::Left
            } else {
                Side::Right
            };
            for v in component {
                source[v.index()] = self.sides[v.index()] == source_side;
            }
        }
        source
    }

    pub fn vertex_count(&self) -> usize {
        self.sides.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.vertex_count()).map(VertexId)
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        v.index() < self.vertex_count()
    }

    pub fn side(&self, v: VertexId) -> Side {
        self.sides[v.index()]
    }

    pub fn sides(&self) -> &[Side] {
        &self.sides
    }

    pub fn label(&self, v: VertexId) -> &str {
        &self.labels[v.index()]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn vertex_by_label(&self, label: &str) -> Option<VertexId> {
        self.label_index.get(label).copied()
    }

    pub fn left_vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.vertices().filter(|v| self.side(*v) == Side::Left)
    }

    pub fn right_vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.vertices().filter(|v| self.side(*v) == Side::Right)
    }

    pub fn left_count(&self) -> usize {
        self.left_vertices().count()
    }

    pub fn right_count(&self) -> usize {
        self.vertex_count() - self.left_count()
    }

    /// `|LEFT| <= |RIGHT|`. Always true for graphs from public constructors.
    pub fn left_is_smaller(&self) -> bool {
        self.left_count() <= self.right_count()
    }

    /// Whether the constructor flipped the input's sides.
    pub fn swapped(&self) -> bool {
        self.swapped
    }

    /// Identity used to reject matchings built against a different graph.
    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }

    /// Whether `v` lies on the side Konig's procedure starts from within its
    /// component (the role the set `U` plays). This is the component's smaller
    /// side, with ties going to LEFT.
    pub fn is_source(&self, v: VertexId) -> bool {
        self.source[v.index()]
    }

    pub fn source_vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.vertices().filter(|v| self.is_source(*v))
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Sorted adjacency list. Panics if `v` is out of range.
    #[inline]
    pub fn adj(&self, v: VertexId) -> &[VertexId] {
        &self.adj[v.index()]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v.index()].len()
    }

    pub fn neighbors(&self, v: VertexId) -> Result<VertexSet> {
        if !self.contains_vertex(v) {
            return Err(Error::UnknownVertex(v));
        }
        Ok(self.adj(v).iter().copied().collect())
    }

    pub fn has_edge(&self, a: VertexId, b: VertexId) -> bool {
        self.contains_vertex(a) && self.adj(a).binary_search(&b).is_ok()
    }

    /// The edge joining `a` and `b` in canonical orientation, if present.
    pub fn edge_between(&self, a: VertexId, b: VertexId) -> Option<Edge> {
        if !self.has_edge(a, b) {
            return None;
        }
        Some(if self.side(a) == Side::Left {
            Edge { left: a, right: b }
        } else {
            Edge { left: b, right: a }
        })
    }

    fn component_vertex_lists(&self) -> Vec<Vec<VertexId>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut queue = VecDeque::from([VertexId(start)]);
            let mut members = Vec::new();
            while let Some(v) = queue.pop_front() {
                members.push(v);
                for &w in self.adj(v) {
                    if !seen[w.index()] {
                        seen[w.index()] = true;
                        queue.push_back(w);
                    }
                }
            }
            members.sort();
            out.push(members);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count() > 0 && self.component_vertex_lists().len() == 1
    }

    pub fn connected_components(&self) -> ComponentDecomposition {
        let components = self
            .component_vertex_lists()
            .into_iter()
            .map(|members| Subgraph::induced(self, members).materialize(self))
            .collect();
        ComponentDecomposition { components }
    }
}

fn index_labels(labels: &[String]) -> Result<HashMap<String, VertexId>> {
    let mut index = HashMap::with_capacity(labels.len());
    for (i, l) in labels.iter().enumerate() {
        if index.insert(l.clone(), VertexId(i)).is_some() {
            return Err(Error::DuplicateVertex(l.clone()));
        }
    }
    Ok(index)
}

/// A standalone graph together with the parent id of each of its vertices.
#[derive(Clone, Debug)]
pub struct Relabeled {
    pub graph: BipartiteGraph,
    pub to_parent: Vec<VertexId>,
}

impl Relabeled {
    pub fn parent_of(&self, v: VertexId) -> VertexId {
        self.to_parent[v.index()]
    }

    pub fn child_of(&self, parent: VertexId) -> Option<VertexId> {
        self.to_parent.binary_search(&parent).ok().map(VertexId)
    }
}

#[derive(Clone, Debug)]
pub struct ComponentDecomposition {
    pub components: Vec<Relabeled>,
}

impl ComponentDecomposition {
    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    /// Edges of all components, mapped back to parent ids.
    pub fn reunited_edges(&self) -> BTreeSet<Edge> {
        self.components
            .iter()
            .flat_map(|c| {
                c.graph.edges().iter().map(move |e| Edge {
                    left: c.parent_of(e.left),
                    right: c.parent_of(e.right),
                })
            })
            .collect()
    }
}

/// A subgraph expressed in its parent's vertex ids.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Subgraph {
    pub vertices: VertexSet,
    pub edges: BTreeSet<Edge>,
}

impl Subgraph {
    pub fn induced(g: &BipartiteGraph, vertices: impl IntoIterator<Item = VertexId>) -> Self {
        let vertices: VertexSet = vertices.into_iter().collect();
        let edges = g
            .edges()
            .iter()
            .copied()
            .filter(|e| vertices.contains(&e.left) && vertices.contains(&e.right))
            .collect();
        Subgraph { vertices, edges }
    }

    /// The subgraph of `self` induced by `keep`.
    pub fn restrict(&self, keep: &VertexSet) -> Subgraph {
        Subgraph {
            vertices: self.vertices.intersection(keep).copied().collect(),
            edges: self
                .edges
                .iter()
                .copied()
                .filter(|e| keep.contains(&e.left) && keep.contains(&e.right))
                .collect(),
        }
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.vertices.contains(&v)
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Builds a standalone graph with dense ids in ascending parent order.
    /// Sides are inherited from the parent unchanged.
    pub fn materialize(&self, parent: &BipartiteGraph) -> Relabeled {
        let to_parent: Vec<VertexId> = self.vertices.iter().copied().collect();
        let local =
            |p: VertexId| VertexId(to_parent.binary_search(&p).expect("edge inside subgraph"));
        let sides = to_parent.iter().map(|&p| parent.side(p)).collect();
        let labels = to_parent
            .iter()
            .map(|&p| parent.label(p).to_string())
            .collect();
        let edges: Vec<(VertexId, VertexId)> = self
            .edges
            .iter()
            .map(|e| (local(e.left), local(e.right)))
            .collect();
        let graph = BipartiteGraph::assemble(sides, labels, &edges, false)
            .expect("subgraph of a valid graph is valid");
        Relabeled { graph, to_parent }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p4() -> BipartiteGraph {
        BipartiteGraph::from_labels(
            &["1", "3"],
            &["2", "4"],
            &[("1", "2"), ("2", "3"), ("3", "4")],
        )
        .unwrap()
    }

    #[test]
    fn build_from_indices_gives_p4() {
        let g = BipartiteGraph::build(2, 2, &[(0, 0), (1, 0), (1, 1)]).unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 3);
        assert!(g.is_connected());
        let degrees: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
        assert_eq!(degrees, vec![1, 2, 2, 1]);
        assert!(!g.swapped());
    }

    #[test]
    fn single_edge() {
        let g = BipartiteGraph::build(1, 1, &[(0, 0)]).unwrap();
        assert_eq!(
            g.neighbors(VertexId(0)).unwrap(),
            VertexSet::from([VertexId(1)])
        );
    }

    #[test]
    fn neighbors_by_label() {
        let g = p4();
        let two = g.vertex_by_label("2").unwrap();
        let got: Vec<&str> = g
            .neighbors(two)
            .unwrap()
            .into_iter()
            .map(|v| g.label(v))
            .collect();
        assert_eq!(got, vec!["1", "3"]);
        assert!(matches!(
            g.neighbors(VertexId(9)),
            Err(Error::UnknownVertex(_))
        ));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            BipartiteGraph::build(1, 1, &[(1, 0)]),
            Err(Error::IndexOutOfRange { .. })
        ));
        assert!(matches!(
            BipartiteGraph::from_labels(&["a", "b"], &["c"], &[("a", "b")]),
            Err(Error::SameSideEdge(..))
        ));
        assert!(matches!(
            BipartiteGraph::from_labels(&["a", "a"], &["c"], &[]),
            Err(Error::DuplicateVertex(_))
        ));
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = BipartiteGraph::build(1, 1, &[(0, 0), (0, 0)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn larger_left_side_is_swapped() {
        let g = BipartiteGraph::build(3, 1, &[(0, 0), (1, 0), (2, 0)]).unwrap();
        assert!(g.swapped());
        assert!(g.left_is_smaller());
        assert_eq!(g.left_count(), 1);
        assert_eq!(g.label(g.left_vertices().next().unwrap()), "R0");
    }

    #[test]
    fn tie_keeps_declared_left_as_source() {
        let g = p4();
        let sources: Vec<&str> = g.source_vertices().map(|v| g.label(v)).collect();
        assert_eq!(sources, vec!["1", "3"]);
    }

    #[test]
    fn source_side_is_decided_per_component() {
        // Component A: one LEFT, two RIGHT. Component B: two LEFT, one RIGHT.
        let g = BipartiteGraph::build(3, 3, &[(0, 0), (0, 1), (1, 2), (2, 2)]).unwrap();
        let sources: Vec<&str> = g.source_vertices().map(|v| g.label(v)).collect();
        assert_eq!(sources, vec!["L0", "R2"]);
    }

    #[test]
    fn components_of_two_k2() {
        let g = BipartiteGraph::build(2, 2, &[(0, 0), (1, 1)]).unwrap();
        let d = g.connected_components();
        assert_eq!(d.len(), 2);
        assert!(d.components.iter().all(|c| c.graph.is_connected()));
        assert_eq!(d.reunited_edges(), g.edges().iter().copied().collect());
    }

    #[test]
    fn materialized_subgraph_keeps_sides() {
        let g = p4();
        let keep: Vec<VertexId> = ["3", "4"]
            .iter()
            .map(|l| g.vertex_by_label(l).unwrap())
            .collect();
        let sub = Subgraph::induced(&g, keep).materialize(&g);
        assert_eq!(sub.graph.edge_count(), 1);
        let three = sub.graph.vertex_by_label("3").unwrap();
        assert_eq!(sub.graph.side(three), Side::Left);
        assert_eq!(sub.parent_of(three), g.vertex_by_label("3").unwrap());
    }
}
