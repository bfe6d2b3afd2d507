//! Konig's procedure: the alternating-reachability set `Z` and the cover
//! `(U \ Z) ∪ (V ∩ Z)`, plus cover predicates.
//!
//! `U` is taken per connected component (see [`BipartiteGraph::is_source`]),
//! so disconnected graphs are handled componentwise.

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, VertexId, VertexSet};
use crate::matching::{matching_number, Matching};

/// Vertices reachable by alternating paths from unsaturated `U` vertices,
/// those vertices included.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZSet {
    member: Vec<bool>,
}

impl ZSet {
    pub fn contains(&self, v: VertexId) -> bool {
        self.member[v.index()]
    }

    pub fn vertices(&self) -> VertexSet {
        self.member
            .iter()
            .enumerate()
            .filter(|(_, &m)| m)
            .map(|(i, _)| VertexId(i))
            .collect()
    }

    pub fn len(&self) -> usize {
        self.member.iter().filter(|m| **m).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// One more closure step adds nothing.
    pub fn is_closed(&self, g: &BipartiteGraph, m: &Matching) -> bool {
        g.vertices().filter(|&v| self.contains(v)).all(|v| {
            if g.is_source(v) {
                g.adj(v)
                    .iter()
                    .all(|&w| m.contains_pair(v, w) || self.contains(w))
            } else {
                m.mate(v).is_none_or(|w| self.contains(w))
            }
        }) && g
            .source_vertices()
            .all(|u| m.is_saturated(u) || self.contains(u))
    }
}

pub fn z_set(g: &BipartiteGraph, m: &Matching) -> Result<ZSet> {
    m.check_host(g)?;
    let mut member = vec![false; g.vertex_count()];
    let mut queue = VecDeque::new();
    for u in g.source_vertices() {
        if !m.is_saturated(u) {
            member[u.index()] = true;
            queue.push_back(u);
        }
    }
    while let Some(x) = queue.pop_front() {
        if g.is_source(x) {
            for &y in g.adj(x) {
                if !member[y.index()] && !m.contains_pair(x, y) {
                    member[y.index()] = true;
                    queue.push_back(y);
                }
            }
        } else if let Some(y) = m.mate(x) {
            if !member[y.index()] {
                member[y.index()] = true;
                queue.push_back(y);
            }
        }
    }
    Ok(ZSet { member })
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoverVerdict {
    pub is_cover: bool,
    pub is_minimal: bool,
    pub is_minimum: bool,
}

/// A vertex set together with whether it covers every edge. Minimality and
/// minimum status are computed on demand by [`VertexCover::verdict`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexCover {
    vertices: VertexSet,
    is_cover: bool,
}

impl VertexCover {
    pub fn new(g: &BipartiteGraph, vertices: VertexSet) -> Self {
        let is_cover = is_vertex_cover(g, &vertices);
        VertexCover { vertices, is_cover }
    }

    pub fn vertices(&self) -> &VertexSet {
        &self.vertices
    }

    pub fn into_vertices(self) -> VertexSet {
        self.vertices
    }

    pub fn is_cover(&self) -> bool {
        self.is_cover
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.vertices.contains(&v)
    }

    pub fn verdict(&self, g: &BipartiteGraph) -> CoverVerdict {
        let is_minimal = self.is_cover && is_minimal_cover(g, &self.vertices).unwrap_or(false);
        CoverVerdict {
            is_cover: self.is_cover,
            is_minimal,
            is_minimum: is_minimal && is_minimum_cover(g, &self.vertices),
        }
    }
}

/// `K_M(G) = (U \ Z) ∪ (V ∩ Z)`. Works for any matching; whether the result
/// covers the graph is measured, not assumed.
pub fn konig_cover(g: &BipartiteGraph, m: &Matching) -> Result<VertexCover> {
    let z = z_set(g, m)?;
    let vertices = g
        .vertices()
        .filter(|&v| g.is_source(v) != z.contains(v))
        .collect();
    Ok(VertexCover::new(g, vertices))
}

pub fn is_vertex_cover(g: &BipartiteGraph, s: &VertexSet) -> bool {
    g.edges()
        .iter()
        .all(|e| s.contains(&e.left) || s.contains(&e.right))
}

/// No vertex can be dropped: there is no `r` in `s` with `N(r) ⊆ s`.
pub fn is_minimal_cover(g: &BipartiteGraph, s: &VertexSet) -> Result<bool> {
    if !is_vertex_cover(g, s) {
        return Err(Error::NotACover);
    }
    Ok(s.iter()
        .all(|&r| g.contains_vertex(r) && !g.adj(r).iter().all(|w| s.contains(w))))
}

/// A cover whose size equals the matching number.
pub fn is_minimum_cover(g: &BipartiteGraph, s: &VertexSet) -> bool {
    is_vertex_cover(g, s) && s.len() == matching_number(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matching::maximum_matching;
    use crate::named;

    fn set(g: &BipartiteGraph, labels: &[&str]) -> VertexSet {
        labels
            .iter()
            .map(|l| g.vertex_by_label(l).unwrap())
            .collect()
    }

    fn matching(g: &BipartiteGraph, pairs: &[(&str, &str)]) -> Matching {
        let pairs: Vec<_> = pairs
            .iter()
            .map(|(a, b)| (g.vertex_by_label(a).unwrap(), g.vertex_by_label(b).unwrap()))
            .collect();
        Matching::from_pairs(g, &pairs).unwrap()
    }

    #[test]
    fn z_sets_on_p4() {
        let g = named::p4();
        assert_eq!(
            z_set(&g, &matching(&g, &[("3", "4")])).unwrap().vertices(),
            set(&g, &["1", "2"])
        );
        assert!(z_set(&g, &matching(&g, &[("1", "2"), ("3", "4")]))
            .unwrap()
            .is_empty());
        assert_eq!(z_set(&g, &Matching::empty(&g)).unwrap().len(), 4);
    }

    #[test]
    fn covers_on_p4() {
        let g = named::p4();
        type Case<'a> = (&'a [(&'a str, &'a str)], &'a [&'a str]);
        let cases: [Case; 3] = [
            (&[("1", "2"), ("3", "4")], &["1", "3"]),
            (&[("2", "3")], &["2", "4"]),
            (&[("3", "4")], &["2", "3"]),
        ];
        for (pairs, expected) in cases {
            let k = konig_cover(&g, &matching(&g, pairs)).unwrap();
            assert_eq!(k.vertices(), &set(&g, expected));
            assert!(k.verdict(&g).is_minimum);
        }
    }

    #[test]
    fn empty_matching_on_p4_gives_right_side() {
        let g = named::p4();
        let k = konig_cover(&g, &Matching::empty(&g)).unwrap();
        assert_eq!(k.vertices(), &set(&g, &["2", "4"]));
    }

    #[test]
    fn fork_cover_is_minimal_not_minimum() {
        let g = named::fork();
        let k = konig_cover(&g, &matching(&g, &[("b1", "c1")])).unwrap();
        assert_eq!(k.vertices(), &set(&g, &["b1", "d1", "d2", "d3"]));
        assert_eq!(
            k.verdict(&g),
            CoverVerdict {
                is_cover: true,
                is_minimal: true,
                is_minimum: false
            }
        );
        assert!(is_minimum_cover(&g, &set(&g, &["b1", "c1"])));
    }

    #[test]
    fn cover_predicates() {
        let g = named::p4();
        assert!(is_vertex_cover(&g, &set(&g, &["2", "3"])));
        assert!(!is_vertex_cover(&g, &set(&g, &["1", "4"])));
        assert!(is_vertex_cover(&g, &g.vertices().collect()));
        assert!(!is_minimal_cover(&g, &set(&g, &["1", "2", "3"])).unwrap());
        assert!(matches!(
            is_minimal_cover(&g, &set(&g, &["1"])),
            Err(Error::NotACover)
        ));
        assert!(is_minimum_cover(&g, &set(&g, &["2", "4"])));
        let k2 = named::k2();
        for v in k2.vertices() {
            assert!(is_minimal_cover(&k2, &VertexSet::from([v])).unwrap());
        }
    }

    #[test]
    fn maximum_matching_gives_minimum_cover() {
        for g in [
            named::p4(),
            named::fork(),
            named::complete(3, 4),
            named::path(7),
        ] {
            let m = maximum_matching(&g, &Matching::empty(&g)).unwrap();
            let k = konig_cover(&g, &m).unwrap();
            assert_eq!(k.len(), m.len());
            assert!(k.verdict(&g).is_minimum);
        }
    }

    #[test]
    fn disconnected_graph_is_handled_per_component() {
        // A star with its centre on the LEFT plus a star with its centre on the RIGHT.
        let g = BipartiteGraph::build(3, 3, &[(0, 0), (0, 1), (1, 2), (2, 2)]).unwrap();
        let m = maximum_matching(&g, &Matching::empty(&g)).unwrap();
        let k = konig_cover(&g, &m).unwrap();
        assert_eq!(k.vertices(), &set(&g, &["L0", "R2"]));
        assert!(k.verdict(&g).is_minimum);
    }

    #[test]
    fn z_set_is_closed() {
        let g = named::fork();
        let m = matching(&g, &[("b1", "c1")]);
        assert!(z_set(&g, &m).unwrap().is_closed(&g, &m));
    }
}
