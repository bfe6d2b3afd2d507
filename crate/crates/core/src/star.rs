//! Star-studded graphs: a three-leaf star hung from every vertex.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, VertexId, VertexSet};
use crate::konig::{is_minimum_cover, konig_cover};
use crate::oracle::{maximal_matchings_by_branching, minimum_covers_by_branching};

/// The star attached to one base vertex. The centre sits on the opposite
/// side to the base vertex, the leaves on the same side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Star {
    pub base_vertex: VertexId,
    pub center: VertexId,
    pub leaves: [VertexId; 3],
}

#[derive(Clone, Debug)]
pub struct StarStuddedGraph {
    pub base: BipartiteGraph,
    /// Base vertices keep their ids; each star follows as centre then
    /// leaves, in base vertex order.
    pub full: BipartiteGraph,
    pub attachment: Vec<Star>,
}

pub fn star_stud(h: &BipartiteGraph) -> Result<StarStuddedGraph> {
    if h.left_count() == 0 || h.right_count() == 0 {
        return Err(Error::EmptyGraph);
    }
    let n = h.vertex_count();
    let mut sides = h.sides().to_vec();
    let mut labels = h.labels().to_vec();
    let mut edges: Vec<(VertexId, VertexId)> =
        h.edges().iter().map(|e| (e.left, e.right)).collect();
    let mut attachment = Vec::with_capacity(n);
    for v in h.vertices() {
        let side = h.side(v);
        let center = VertexId(sides.len());
        sides.push(side.opposite());
        labels.push(format!("{}*c", h.label(v)));
        edges.push((v, center));
        let mut leaves = [center; 3];
        for (k, leaf) in leaves.iter_mut().enumerate() {
            *leaf = VertexId(sides.len());
            sides.push(side);
            labels.push(format!("{}*{}", h.label(v), k + 1));
            edges.push((center, *leaf));
        }
        attachment.push(Star {
            base_vertex: v,
            center,
            leaves,
        });
    }
    let full = BipartiteGraph::assemble(sides, labels, &edges, false)?;
    Ok(StarStuddedGraph {
        base: h.clone(),
        full,
        attachment,
    })
}

impl StarStuddedGraph {
    pub fn centers(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.attachment.iter().map(|s| s.center)
    }

    /// A minimum cover of the base plus every centre.
    pub fn lift_cover(&self, c: &VertexSet) -> Result<VertexSet> {
        if !is_minimum_cover(&self.base, c) {
            return Err(Error::NotMinimumCover);
        }
        Ok(c.iter().copied().chain(self.centers()).collect())
    }

    /// The base vertices of a minimum cover of the full graph.
    pub fn restrict_cover(&self, c: &VertexSet) -> Result<VertexSet> {
        if !is_minimum_cover(&self.full, c) {
            return Err(Error::NotMinimumCover);
        }
        Ok(self.restrict_unchecked(c))
    }

    fn restrict_unchecked(&self, c: &VertexSet) -> VertexSet {
        c.iter()
            .copied()
            .filter(|v| v.index() < self.base.vertex_count())
            .collect()
    }
}

/// Which minimum covers Konig's procedure reaches from maximal matchings.
#[derive(Clone, Debug)]
pub struct EkeReport {
    pub minimum_covers: BTreeSet<VertexSet>,
    pub reached: BTreeSet<VertexSet>,
    pub maximal_matchings: usize,
}

impl EkeReport {
    pub fn missing(&self) -> impl Iterator<Item = &VertexSet> {
        self.minimum_covers.difference(&self.reached)
    }

    pub fn is_eke(&self) -> bool {
        self.minimum_covers.is_subset(&self.reached)
    }
}

/// Enumerates minimum covers and maximal matchings by branching search;
/// `budget` caps the search nodes of each.
pub fn eke_report(g: &BipartiteGraph, budget: u64) -> Result<EkeReport> {
    let minimum_covers = minimum_covers_by_branching(g, budget)?;
    let matchings = maximal_matchings_by_branching(g, budget)?;
    let mut reached = BTreeSet::new();
    for m in &matchings {
        let k = konig_cover(g, m)?;
        if minimum_covers.contains(k.vertices()) {
            reached.insert(k.into_vertices());
        }
    }
    Ok(EkeReport {
        minimum_covers,
        reached,
        maximal_matchings: matchings.len(),
    })
}

/// Whether every minimum cover of `g` is Konig's cover of some maximal
/// matching.
pub fn is_enumeratively_konig_egervary(g: &BipartiteGraph, budget: u64) -> Result<bool> {
    Ok(eke_report(g, budget)?.is_eke())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Side;
    use crate::named;
    use crate::oracle::{all_minimum_covers, OracleBudget};

    const BUDGET: u64 = 1 << 26;

    fn set(g: &BipartiteGraph, labels: &[&str]) -> VertexSet {
        labels
            .iter()
            .map(|l| g.vertex_by_label(l).unwrap())
            .collect()
    }

    #[test]
    fn sizes() {
        let s = star_stud(&named::k2()).unwrap();
        assert_eq!((s.full.vertex_count(), s.full.edge_count()), (10, 9));
        let s = star_stud(&named::p4()).unwrap();
        assert_eq!((s.full.vertex_count(), s.full.edge_count()), (20, 19));
    }

    #[test]
    fn layout() {
        let h = named::p4();
        let s = star_stud(&h).unwrap();
        assert_eq!(s.attachment.len(), 4);
        for (i, star) in s.attachment.iter().enumerate() {
            let v = star.base_vertex;
            assert_eq!(star.center, VertexId(4 + 4 * i));
            assert_eq!(s.full.side(star.center), h.side(v).opposite());
            assert_eq!(s.full.degree(star.center), 4);
            for leaf in star.leaves {
                assert_eq!(s.full.side(leaf), h.side(v));
                assert_eq!(s.full.adj(leaf), &[star.center]);
            }
        }
        for v in h.vertices() {
            assert_eq!(s.full.side(v), h.side(v));
            assert_eq!(s.full.label(v), h.label(v));
        }
        assert_eq!(s.full.label(VertexId(4)), "1*c");
        assert!(!s.full.swapped());
    }

    #[test]
    fn empty_side_rejected() {
        let h = BipartiteGraph::from_parts(vec![Side::Left], vec!["x".into()], &[]).unwrap();
        assert!(matches!(star_stud(&h), Err(Error::EmptyGraph)));
    }

    #[test]
    fn lift_and_restrict() {
        let h = named::p4();
        let s = star_stud(&h).unwrap();
        let c = set(&h, &["2", "3"]);
        let lifted = s.lift_cover(&c).unwrap();
        assert_eq!(lifted.len(), 6);
        assert!(is_minimum_cover(&s.full, &lifted));
        assert_eq!(s.restrict_cover(&lifted).unwrap(), c);
        assert!(matches!(
            s.lift_cover(&set(&h, &["1", "2", "3"])),
            Err(Error::NotMinimumCover)
        ));
        let all: VertexSet = s.full.vertices().collect();
        assert!(matches!(
            s.restrict_cover(&all),
            Err(Error::NotMinimumCover)
        ));

        let k = named::k2();
        let s = star_stud(&k).unwrap();
        let lifted = s.lift_cover(&set(&k, &["L0"])).unwrap();
        assert_eq!(lifted.len(), 3);
        for c in all_minimum_covers(&s.full, &OracleBudget::default()).unwrap() {
            assert_eq!(s.restrict_cover(&c).unwrap().len(), 1);
        }
    }

    #[test]
    fn eke() {
        assert!(!is_enumeratively_konig_egervary(&named::p4(), BUDGET).unwrap());
        let r = eke_report(&named::p4(), BUDGET).unwrap();
        let g = named::p4();
        assert_eq!(
            r.missing().cloned().collect::<Vec<_>>(),
            vec![set(&g, &["2", "3"])]
        );

        let st = star_stud(&named::p4()).unwrap();
        assert!(is_enumeratively_konig_egervary(&st.full, BUDGET).unwrap());
    }

    /// K2 has one maximal matching, hence one Konig cover, but two minimum
    /// covers.
    #[test]
    fn k2_decided_by_enumeration() {
        let r = eke_report(&named::k2(), BUDGET).unwrap();
        assert_eq!(r.maximal_matchings, 1);
        assert_eq!(r.minimum_covers.len(), 2);
        assert!(!r.is_eke());
    }

    #[test]
    fn budget() {
        let st = star_stud(&named::p4()).unwrap();
        assert!(matches!(
            is_enumeratively_konig_egervary(&st.full, 10),
            Err(Error::BudgetExceeded(_))
        ));
    }
}
