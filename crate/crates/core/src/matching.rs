//! Matchings, alternating paths and the augmenting-path machinery.

use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, Edge, VertexId};

/// A set of pairwise vertex-disjoint edges of one host graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matching {
    mate: Vec<Option<VertexId>>,
    size: usize,
    host: u64,
}

impl Matching {
    pub fn empty(g: &BipartiteGraph) -> Self {
        Matching {
            mate: vec![None; g.vertex_count()],
            size: 0,
            host: g.fingerprint(),
        }
    }

    /// Validates that every edge is in `g` and that no two edges share an
    /// endpoint.
    pub fn from_edges(g: &BipartiteGraph, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        let mut m = Matching::empty(g);
        for e in edges {
            if !g.has_edge(e.left, e.right) {
                return Err(Error::InvalidMatching(format!(
                    "({}, {}) is not an edge",
                    label_or_id(g, e.left),
                    label_or_id(g, e.right)
                )));
            }
            if m.mate[e.left.index()] == Some(e.right) {
                continue;
            }
            for v in [e.left, e.right] {
                if m.is_saturated(v) {
                    return Err(Error::InvalidMatching(format!(
                        "vertex {} is covered twice",
                        g.label(v)
                    )));
                }
            }
            m.link(e.left, e.right);
        }
        Ok(m)
    }

    /// Like [`from_edges`](Self::from_edges) with endpoints in either order.
    pub fn from_pairs(g: &BipartiteGraph, pairs: &[(VertexId, VertexId)]) -> Result<Self> {
        let mut edges = Vec::with_capacity(pairs.len());
        for &(a, b) in pairs {
            let e = g.edge_between(a, b).ok_or_else(|| {
                Error::InvalidMatching(format!(
                    "({}, {}) is not an edge",
                    label_or_id(g, a),
                    label_or_id(g, b)
                ))
            })?;
            edges.push(e);
        }
        Matching::from_edges(g, edges)
    }

    pub(crate) fn link(&mut self, a: VertexId, b: VertexId) {
        debug_assert!(self.mate[a.index()].is_none() && self.mate[b.index()].is_none());
        self.mate[a.index()] = Some(b);
        self.mate[b.index()] = Some(a);
        self.size += 1;
    }

    pub(crate) fn unlink(&mut self, a: VertexId) {
        if let Some(b) = self.mate[a.index()].take() {
            self.mate[b.index()] = None;
            self.size -= 1;
        }
    }

    pub fn len(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    pub fn mate(&self, v: VertexId) -> Option<VertexId> {
        self.mate[v.index()]
    }

    pub fn is_saturated(&self, v: VertexId) -> bool {
        self.mate[v.index()].is_some()
    }

    pub fn contains(&self, e: Edge) -> bool {
        self.mate[e.left.index()] == Some(e.right)
    }

    pub fn contains_pair(&self, a: VertexId, b: VertexId) -> bool {
        self.mate[a.index()] == Some(b)
    }

    /// Edges sorted by LEFT endpoint.
    pub fn edges(&self, g: &BipartiteGraph) -> Vec<Edge> {
        g.left_vertices()
            .filter_map(|l| self.mate(l).map(|r| Edge { left: l, right: r }))
            .collect()
    }

    pub fn edge_set(&self, g: &BipartiteGraph) -> BTreeSet<Edge> {
        self.edges(g).into_iter().collect()
    }

    pub fn belongs_to(&self, g: &BipartiteGraph) -> bool {
        self.host == g.fingerprint() && self.mate.len() == g.vertex_count()
    }

    pub(crate) fn check_host(&self, g: &BipartiteGraph) -> Result<()> {
        if self.belongs_to(g) {
            Ok(())
        } else {
            Err(Error::ForeignMatching)
        }
    }

    /// `M` symmetric-difference the edges of `path`. The path must alternate
    /// against `self`; the result is a matching whenever the path is
    /// augmenting.
    pub fn augment(&self, g: &BipartiteGraph, path: &AlternatingPath) -> Result<Matching> {
        self.check_host(g)?;
        if !path.is_augmenting_for(self) {
            return Err(Error::NotAugmenting);
        }
        let mut out = self.clone();
        let vs = path.vertices();
        for pair in vs.windows(2) {
            if out.contains_pair(pair[0], pair[1]) {
                out.unlink(pair[0]);
            }
        }
        for pair in vs.chunks(2) {
            out.link(pair[0], pair[1]);
        }
        Ok(out)
    }
}

fn label_or_id(g: &BipartiteGraph, v: VertexId) -> String {
    if g.contains_vertex(v) {
        g.label(v).to_string()
    } else {
        v.to_string()
    }
}

/// A simple path whose edges alternate in and out of a matching.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AlternatingPath {
    vertices: Vec<VertexId>,
    augmenting: bool,
}

impl AlternatingPath {
    pub fn new(g: &BipartiteGraph, m: &Matching, vertices: Vec<VertexId>) -> Result<Self> {
        m.check_host(g)?;
        if vertices.is_empty() {
            return Err(Error::InvalidPath("empty path".into()));
        }
        let mut seen = BTreeSet::new();
        for &v in &vertices {
            if !g.contains_vertex(v) {
                return Err(Error::UnknownVertex(v));
            }
            if !seen.insert(v) {
                return Err(Error::InvalidPath(format!("vertex {} repeats", g.label(v))));
            }
        }
        let mut previous: Option<bool> = None;
        for pair in vertices.windows(2) {
            if !g.has_edge(pair[0], pair[1]) {
                return Err(Error::InvalidPath(format!(
                    "{} and {} are not adjacent",
                    g.label(pair[0]),
                    g.label(pair[1])
                )));
            }
            let matched = m.contains_pair(pair[0], pair[1]);
            if previous == Some(matched) {
                return Err(Error::InvalidPath("edges do not alternate".into()));
            }
            previous = Some(matched);
        }
        Ok(Self::unchecked(m, vertices))
    }

    pub(crate) fn unchecked(m: &Matching, vertices: Vec<VertexId>) -> Self {
        let augmenting = vertices.len().is_multiple_of(2)
            && !m.is_saturated(vertices[0])
            && !m.is_saturated(*vertices.last().unwrap());
        AlternatingPath {
            vertices,
            augmenting,
        }
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn first(&self) -> VertexId {
        self.vertices[0]
    }

    pub fn last(&self) -> VertexId {
        *self.vertices.last().unwrap()
    }

    /// Augmenting with respect to the matching the path was built against.
    pub fn is_augmenting(&self) -> bool {
        self.augmenting
    }

    /// Re-checks the augmenting condition against `m`.
    pub fn is_augmenting_for(&self, m: &Matching) -> bool {
        let vs = &self.vertices;
        if !vs.len().is_multiple_of(2) || m.is_saturated(vs[0]) || m.is_saturated(*vs.last().unwrap()) {
            return false;
        }
        vs.windows(2)
            .enumerate()
            .all(|(i, pair)| m.contains_pair(pair[0], pair[1]) == (i % 2 == 1))
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.vertices.contains(&v)
    }

    pub fn position(&self, v: VertexId) -> Option<usize> {
        self.vertices.iter().position(|&x| x == v)
    }

    pub fn edges(&self, g: &BipartiteGraph) -> Vec<Edge> {
        self.vertices
            .windows(2)
            .map(|p| g.edge_between(p[0], p[1]).expect("path edges exist"))
            .collect()
    }
}

/// Adds edges in the given order whenever both endpoints are still free.
pub fn greedy_maximal_matching(g: &BipartiteGraph, edge_order: &[Edge]) -> Result<Matching> {
    if edge_order.len() != g.edge_count() {
        return Err(Error::NotAPermutation);
    }
    let ordered: BTreeSet<Edge> = edge_order.iter().copied().collect();
    if ordered.len() != edge_order.len() || ordered.iter().ne(g.edges().iter()) {
        return Err(Error::NotAPermutation);
    }
    let mut m = Matching::empty(g);
    for e in edge_order {
        if !m.is_saturated(e.left) && !m.is_saturated(e.right) {
            m.link(e.left, e.right);
        }
    }
    Ok(m)
}

pub fn is_maximal(g: &BipartiteGraph, m: &Matching) -> Result<bool> {
    m.check_host(g)?;
    Ok(g.edges()
        .iter()
        .all(|e| m.is_saturated(e.left) || m.is_saturated(e.right)))
}

/// Breadth-first search for an augmenting path that starts at the unsaturated
/// vertex `from`: non-matching edges leave `from`'s side, matching edges
/// return to it. Stops at the first unsaturated vertex reached on the other
/// side; neighbours are scanned in ascending id order.
pub fn find_augmenting_path(
    g: &BipartiteGraph,
    m: &Matching,
    from: VertexId,
) -> Result<Option<AlternatingPath>> {
    m.check_host(g)?;
    if !g.contains_vertex(from) {
        return Err(Error::UnknownVertex(from));
    }
    if m.is_saturated(from) {
        return Err(Error::SaturatedStart(from));
    }
    let mut parent: HashMap<VertexId, VertexId> = HashMap::new();
    let mut visited = vec![false; g.vertex_count()];
    visited[from.index()] = true;
    let mut queue = VecDeque::from([from]);
    while let Some(x) = queue.pop_front() {
        for &y in g.adj(x) {
            if visited[y.index()] || m.contains_pair(x, y) {
                continue;
            }
            visited[y.index()] = true;
            parent.insert(y, x);
            match m.mate(y) {
                None => {
                    let mut path = vec![y];
                    let mut cur = y;
                    while let Some(&p) = parent.get(&cur) {
                        path.push(p);
                        cur = p;
                    }
                    path.reverse();
                    return Ok(Some(AlternatingPath::unchecked(m, path)));
                }
                Some(z) => {
                    if !visited[z.index()] {
                        visited[z.index()] = true;
                        parent.insert(z, y);
                        queue.push_back(z);
                    }
                }
            }
        }
    }
    Ok(None)
}

/// Grows `seed` to maximum cardinality by repeatedly augmenting from
/// unsaturated LEFT vertices in ascending id order.
pub fn maximum_matching(g: &BipartiteGraph, seed: &Matching) -> Result<Matching> {
    seed.check_host(g)?;
    let mut m = seed.clone();
    loop {
        let mut grew = false;
        for u in g.left_vertices().collect::<Vec<_>>() {
            if m.is_saturated(u) {
                continue;
            }
            if let Some(path) = find_augmenting_path(g, &m, u)? {
                m = m.augment(g, &path)?;
                grew = true;
            }
        }
        if !grew {
            return Ok(m);
        }
    }
}

/// Cardinality of a maximum matching.
pub fn matching_number(g: &BipartiteGraph) -> usize {
    maximum_matching(g, &Matching::empty(g))
        .expect("empty matching belongs to its graph")
        .len()
}

pub fn symmetric_difference(
    g: &BipartiteGraph,
    m1: &Matching,
    m2: &Matching,
) -> Result<BTreeSet<Edge>> {
    m1.check_host(g)?;
    m2.check_host(g)?;
    let a = m1.edge_set(g);
    let b = m2.edge_set(g);
    Ok(a.symmetric_difference(&b).copied().collect())
}

/// True when every vertex touched by `edges` has degree exactly two in it.
pub fn is_disjoint_cycle_union(g: &BipartiteGraph, edges: &BTreeSet<Edge>) -> bool {
    let mut degree = vec![0usize; g.vertex_count()];
    for e in edges {
        degree[e.left.index()] += 1;
        degree[e.right.index()] += 1;
    }
    degree.iter().all(|&d| d == 0 || d == 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    fn v(g: &BipartiteGraph, label: &str) -> VertexId {
        g.vertex_by_label(label).unwrap()
    }

    fn e(g: &BipartiteGraph, a: &str, b: &str) -> Edge {
        g.edge_between(v(g, a), v(g, b)).unwrap()
    }

    fn labels(g: &BipartiteGraph, p: &AlternatingPath) -> Vec<String> {
        p.vertices()
            .iter()
            .map(|&x| g.label(x).to_string())
            .collect()
    }

    #[test]
    fn greedy_respects_order() {
        let g = named::p4();
        let perfect =
            greedy_maximal_matching(&g, &[e(&g, "1", "2"), e(&g, "3", "4"), e(&g, "2", "3")])
                .unwrap();
        assert_eq!(
            perfect.edge_set(&g),
            BTreeSet::from([e(&g, "1", "2"), e(&g, "3", "4")])
        );
        let middle =
            greedy_maximal_matching(&g, &[e(&g, "2", "3"), e(&g, "1", "2"), e(&g, "3", "4")])
                .unwrap();
        assert_eq!(middle.edge_set(&g), BTreeSet::from([e(&g, "2", "3")]));
        let k2 = named::k2();
        assert_eq!(greedy_maximal_matching(&k2, k2.edges()).unwrap().len(), 1);
    }

    #[test]
    fn greedy_rejects_non_permutations() {
        let g = named::p4();
        let bad = [e(&g, "1", "2"), e(&g, "1", "2"), e(&g, "2", "3")];
        assert!(matches!(
            greedy_maximal_matching(&g, &bad),
            Err(Error::NotAPermutation)
        ));
    }

    #[test]
    fn maximality() {
        let g = named::p4();
        let m34 = Matching::from_edges(&g, [e(&g, "3", "4")]).unwrap();
        assert!(!is_maximal(&g, &m34).unwrap());
        let m23 = Matching::from_edges(&g, [e(&g, "2", "3")]).unwrap();
        assert!(is_maximal(&g, &m23).unwrap());
        let other = named::k2();
        assert!(matches!(
            is_maximal(&other, &m23),
            Err(Error::ForeignMatching)
        ));
    }

    #[test]
    fn invalid_matchings_are_rejected() {
        let g = named::p4();
        assert!(Matching::from_edges(&g, [e(&g, "1", "2"), e(&g, "2", "3")]).is_err());
        assert!(Matching::from_pairs(&g, &[(v(&g, "1"), v(&g, "4"))]).is_err());
    }

    #[test]
    fn augmenting_path_on_p4() {
        let g = named::p4();
        let m23 = Matching::from_edges(&g, [e(&g, "2", "3")]).unwrap();
        let p = find_augmenting_path(&g, &m23, v(&g, "1")).unwrap().unwrap();
        assert_eq!(labels(&g, &p), ["1", "2", "3", "4"]);
        assert!(p.is_augmenting());
        let bigger = m23.augment(&g, &p).unwrap();
        assert_eq!(bigger.len(), 2);
    }

    #[test]
    fn saturated_start_is_an_error() {
        let g = named::p4();
        let perfect = Matching::from_edges(&g, [e(&g, "1", "2"), e(&g, "3", "4")]).unwrap();
        for x in g.vertices() {
            assert!(matches!(
                find_augmenting_path(&g, &perfect, x),
                Err(Error::SaturatedStart(_))
            ));
        }
    }

    #[test]
    fn augmenting_path_on_fork() {
        let g = named::fork();
        let m = Matching::from_edges(&g, [e(&g, "b1", "c1")]).unwrap();
        let p = find_augmenting_path(&g, &m, v(&g, "a1")).unwrap().unwrap();
        let l = labels(&g, &p);
        assert_eq!(&l[..3], ["a1", "b1", "c1"]);
        assert!(["d1", "d2", "d3"].contains(&l[3].as_str()));
        assert!(AlternatingPath::new(&g, &m, p.vertices().to_vec())
            .unwrap()
            .is_augmenting());
    }

    #[test]
    fn maximum_sizes() {
        let cases = [(named::p4(), 2), (named::fork(), 2), (named::k2(), 1)];
        for (g, expected) in cases {
            let m = maximum_matching(&g, &Matching::empty(&g)).unwrap();
            assert_eq!(m.len(), expected);
            for x in g.vertices().filter(|x| !m.is_saturated(*x)) {
                assert!(find_augmenting_path(&g, &m, x).unwrap().is_none());
            }
        }
    }

    #[test]
    fn symmetric_differences() {
        let g = named::p4();
        let perfect = Matching::from_edges(&g, [e(&g, "1", "2"), e(&g, "3", "4")]).unwrap();
        let m23 = Matching::from_edges(&g, [e(&g, "2", "3")]).unwrap();
        assert!(symmetric_difference(&g, &perfect, &perfect)
            .unwrap()
            .is_empty());
        assert_eq!(
            symmetric_difference(&g, &perfect, &m23).unwrap(),
            g.edges().iter().copied().collect()
        );
        let m12 = Matching::from_edges(&g, [e(&g, "1", "2")]).unwrap();
        let m34 = Matching::from_edges(&g, [e(&g, "3", "4")]).unwrap();
        assert_eq!(
            symmetric_difference(&g, &m12, &m34).unwrap(),
            BTreeSet::from([e(&g, "1", "2"), e(&g, "3", "4")])
        );
    }

    #[test]
    fn cycle_unions() {
        let p4 = named::p4();
        assert!(is_disjoint_cycle_union(&p4, &BTreeSet::new()));
        assert!(!is_disjoint_cycle_union(
            &p4,
            &p4.edges().iter().copied().collect()
        ));
        let c4 = BipartiteGraph::build(2, 2, &[(0, 0), (0, 1), (1, 0), (1, 1)]).unwrap();
        assert!(is_disjoint_cycle_union(
            &c4,
            &c4.edges().iter().copied().collect()
        ));
    }

    #[test]
    fn path_validation() {
        let g = named::p4();
        let m = Matching::empty(&g);
        assert!(AlternatingPath::new(&g, &m, vec![v(&g, "1"), v(&g, "3")]).is_err());
        // Two consecutive non-matching edges.
        assert!(AlternatingPath::new(&g, &m, vec![v(&g, "1"), v(&g, "2"), v(&g, "3")]).is_err());
        let single = AlternatingPath::new(&g, &m, vec![v(&g, "2"), v(&g, "3")]).unwrap();
        assert!(single.is_augmenting());
    }
}
