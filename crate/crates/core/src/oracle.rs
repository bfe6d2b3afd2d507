//! Exponential-time ground truth for small graphs.
//!
//! Nothing here calls into Konig's procedure or the augmenting-path code, so
//! these results can be used to check them.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, Side, VertexId, VertexSet};
use crate::matching::Matching;

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct OracleBudget {
    pub max_vertices: usize,
    /// Cap on subsets scanned, or on search nodes for the backtracking
    /// enumerations.
    pub max_subsets: u64,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget {
            max_vertices: 16,
            max_subsets: 1 << 20,
        }
    }
}

struct Counter {
    used: u64,
    limit: u64,
    what: &'static str,
}

impl Counter {
    fn new(limit: u64, what: &'static str) -> Self {
        Counter {
            used: 0,
            limit,
            what,
        }
    }

    fn tick(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.limit {
            Err(Error::BudgetExceeded(format!(
                "{} beyond {} steps",
                self.what, self.limit
            )))
        } else {
            Ok(())
        }
    }
}

fn check_vertices(g: &BipartiteGraph, b: &OracleBudget) -> Result<()> {
    let n = g.vertex_count();
    if n > b.max_vertices || n > 63 {
        return Err(Error::BudgetExceeded(format!(
            "{n} vertices, budget allows {}",
            b.max_vertices.min(63)
        )));
    }
    Ok(())
}

fn edge_masks(g: &BipartiteGraph) -> Vec<u64> {
    g.edges()
        .iter()
        .map(|e| (1u64 << e.left.index()) | (1u64 << e.right.index()))
        .collect()
}

fn mask_to_set(mask: u64) -> VertexSet {
    (0..64)
        .filter(|i| mask >> i & 1 == 1)
        .map(VertexId)
        .collect()
}

/// Next bit pattern with the same popcount (Gosper's hack).
fn next_combination(x: u64) -> u64 {
    let c = x & x.wrapping_neg();
    let r = x + c;
    (((r ^ x) >> 2) / c) | r
}

/// Calls `f` on every `k`-subset of `n` bits in increasing numeric order.
fn for_each_subset(
    n: usize,
    k: usize,
    counter: &mut Counter,
    mut f: impl FnMut(u64),
) -> Result<()> {
    if k == 0 {
        counter.tick()?;
        f(0);
        return Ok(());
    }
    if k > n {
        return Ok(());
    }
    let limit = 1u64 << n;
    let mut x = (1u64 << k) - 1;
    while x < limit {
        counter.tick()?;
        f(x);
        x = next_combination(x);
    }
    Ok(())
}

/// Every cover of minimum cardinality, found by scanning subsets in
/// increasing size and stopping at the first size that has a cover.
pub fn all_minimum_covers(g: &BipartiteGraph, b: &OracleBudget) -> Result<BTreeSet<VertexSet>> {
    check_vertices(g, b)?;
    let masks = edge_masks(g);
    let n = g.vertex_count();
    let mut counter = Counter::new(b.max_subsets, "subset scan");
    for k in 0..=n {
        let mut found = BTreeSet::new();
        for_each_subset(n, k, &mut counter, |s| {
            if masks.iter().all(|e| s & e != 0) {
                found.insert(mask_to_set(s));
            }
        })?;
        if !found.is_empty() {
            return Ok(found);
        }
    }
    unreachable!("the full vertex set is a cover")
}

/// Size of a minimum cover by subset scan.
pub fn minimum_cover_size(g: &BipartiteGraph, b: &OracleBudget) -> Result<usize> {
    Ok(all_minimum_covers(g, b)?
        .into_iter()
        .next()
        .map_or(0, |c| c.len()))
}

/// Every matching of `g`, the empty one included, by include/exclude
/// recursion over the edge list.
pub fn all_matchings(g: &BipartiteGraph, b: &OracleBudget) -> Result<Vec<Matching>> {
    check_vertices(g, b)?;
    let mut counter = Counter::new(b.max_subsets, "matching enumeration");
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    let edges = g.edges();

    fn recurse(
        g: &BipartiteGraph,
        edges: &[crate::graph::Edge],
        i: usize,
        used: u64,
        chosen: &mut Vec<crate::graph::Edge>,
        out: &mut Vec<Matching>,
        counter: &mut Counter,
    ) -> Result<()> {
        counter.tick()?;
        if i == edges.len() {
            out.push(Matching::from_edges(g, chosen.iter().copied())?);
            return Ok(());
        }
        recurse(g, edges, i + 1, used, chosen, out, counter)?;
        let e = edges[i];
        let mask = (1u64 << e.left.index()) | (1u64 << e.right.index());
        if used & mask == 0 {
            chosen.push(e);
            recurse(g, edges, i + 1, used | mask, chosen, out, counter)?;
            chosen.pop();
        }
        Ok(())
    }

    recurse(g, edges, 0, 0, &mut chosen, &mut out, &mut counter)?;
    Ok(out)
}

/// The matchings of [`all_matchings`] to which no edge can be added.
pub fn all_maximal_matchings(g: &BipartiteGraph, b: &OracleBudget) -> Result<Vec<Matching>> {
    let all = all_matchings(g, b)?;
    Ok(all
        .into_iter()
        .filter(|m| {
            g.edges()
                .iter()
                .all(|e| m.is_saturated(e.left) || m.is_saturated(e.right))
        })
        .collect())
}

/// Largest matching size by exhaustive enumeration.
pub fn brute_force_matching_number(g: &BipartiteGraph, b: &OracleBudget) -> Result<usize> {
    Ok(all_matchings(g, b)?
        .iter()
        .map(Matching::len)
        .max()
        .unwrap_or(0))
}

/// Hall's condition for `side`: every subset `W` has `|W| <= |N(W)|`.
pub fn hall_condition(g: &BipartiteGraph, side: Side, b: &OracleBudget) -> Result<bool> {
    let members: Vec<VertexId> = g.vertices().filter(|v| g.side(*v) == side).collect();
    hall_condition_for(g, &members, b)
}

/// Hall's condition for an explicit vertex set, neighbourhoods taken in `g`.
pub fn hall_condition_for(
    g: &BipartiteGraph,
    members: &[VertexId],
    b: &OracleBudget,
) -> Result<bool> {
    if members.len() > b.max_vertices || members.len() > 63 {
        return Err(Error::BudgetExceeded(format!(
            "{} vertices on one side, budget allows {}",
            members.len(),
            b.max_vertices
        )));
    }
    let neighbourhoods: Vec<VertexSet> = members
        .iter()
        .map(|&v| g.adj(v).iter().copied().collect())
        .collect();
    let mut counter = Counter::new(b.max_subsets, "Hall subset scan");
    let total = 1u64 << members.len();
    for w in 1..total {
        counter.tick()?;
        let mut union = VertexSet::new();
        for (i, nb) in neighbourhoods.iter().enumerate() {
            if w >> i & 1 == 1 {
                union.extend(nb.iter().copied());
            }
        }
        if (w.count_ones() as usize) > union.len() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Minimum covers of graphs too large for the subset scan. Decides each
/// vertex in turn (in the cover, or out with all its neighbours in), pruning
/// at the size bound; the bound is raised from zero until a cover exists.
/// `max_nodes` caps the search nodes over all rounds.
pub fn minimum_covers_by_branching(
    g: &BipartiteGraph,
    max_nodes: u64,
) -> Result<BTreeSet<VertexSet>> {
    let n = g.vertex_count();
    let mut order: Vec<VertexId> = g.vertices().collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let mut counter = Counter::new(max_nodes, "cover branching");

    #[derive(Clone, Copy, PartialEq)]
    enum State {
        Open,
        In,
        Out,
    }

    struct Search<'a> {
        g: &'a BipartiteGraph,
        order: &'a [VertexId],
        bound: usize,
        state: Vec<State>,
        size: usize,
        found: BTreeSet<VertexSet>,
    }

    impl Search<'_> {
        fn run(&mut self, i: usize, counter: &mut Counter) -> Result<()> {
            counter.tick()?;
            if self.size > self.bound {
                return Ok(());
            }
            if i == self.order.len() {
                let cover: VertexSet = (0..self.state.len())
                    .filter(|&j| self.state[j] == State::In)
                    .map(VertexId)
                    .collect();
                self.found.insert(cover);
                return Ok(());
            }
            let v = self.order[i];
            match self.state[v.index()] {
                State::In => return self.run(i + 1, counter),
                State::Out => unreachable!("vertices are left out only when visited"),
                State::Open => {}
            }
            // Leave v out: every neighbour must join.
            let nbrs = self.g.adj(v);
            if nbrs.iter().all(|w| self.state[w.index()] != State::Out) {
                let added: Vec<VertexId> = nbrs
                    .iter()
                    .copied()
                    .filter(|w| self.state[w.index()] == State::Open)
                    .collect();
                self.state[v.index()] = State::Out;
                for w in &added {
                    self.state[w.index()] = State::In;
                }
                self.size += added.len();
                self.run(i + 1, counter)?;
                self.size -= added.len();
                for w in &added {
                    self.state[w.index()] = State::Open;
                }
                self.state[v.index()] = State::Open;
            }
            // A minimum cover is minimal, so it never holds a vertex whose
            // neighbours are all in already.
            if nbrs.iter().all(|w| self.state[w.index()] == State::In) {
                return Ok(());
            }
            self.state[v.index()] = State::In;
            self.size += 1;
            self.run(i + 1, counter)?;
            self.size -= 1;
            self.state[v.index()] = State::Open;
            Ok(())
        }
    }

    for bound in 0..=n {
        let mut search = Search {
            g,
            order: &order,
            bound,
            state: vec![State::Open; n],
            size: 0,
            found: BTreeSet::new(),
        };
        search.run(0, &mut counter)?;
        if !search.found.is_empty() {
            return Ok(search.found);
        }
    }
    unreachable!("the full vertex set is a cover")
}

/// Maximal matchings of graphs too large for [`all_matchings`]. Each vertex
/// in id order is either left free or matched to a later free neighbour;
/// maximality is checked at the leaves.
pub fn maximal_matchings_by_branching(g: &BipartiteGraph, max_nodes: u64) -> Result<Vec<Matching>> {
    let mut counter = Counter::new(max_nodes, "maximal matching branching");
    let mut out = Vec::new();
    let mut m = Matching::empty(g);

    fn recurse(
        g: &BipartiteGraph,
        i: usize,
        m: &mut Matching,
        out: &mut Vec<Matching>,
        counter: &mut Counter,
    ) -> Result<()> {
        counter.tick()?;
        if i == g.vertex_count() {
            if g.edges()
                .iter()
                .all(|e| m.is_saturated(e.left) || m.is_saturated(e.right))
            {
                out.push(m.clone());
            }
            return Ok(());
        }
        let v = VertexId(i);
        if m.is_saturated(v) {
            return recurse(g, i + 1, m, out, counter);
        }
        // Leaving v free forces every neighbour to be matched; an earlier
        // neighbour that is still free can no longer be, so prune.
        if g.adj(v).iter().all(|w| w.index() > i || m.is_saturated(*w)) {
            recurse(g, i + 1, m, out, counter)?;
        }
        for &w in g.adj(v) {
            if w.index() > i && !m.is_saturated(w) {
                m.link(v, w);
                recurse(g, i + 1, m, out, counter)?;
                m.unlink(v);
            }
        }
        Ok(())
    }

    recurse(g, 0, &mut m, &mut out, &mut counter)?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    fn labelled(g: &BipartiteGraph, sets: &BTreeSet<VertexSet>) -> BTreeSet<Vec<String>> {
        sets.iter()
            .map(|s| {
                let mut v: Vec<String> = s.iter().map(|&x| g.label(x).to_string()).collect();
                v.sort();
                v
            })
            .collect()
    }

    fn strings(sets: &[&[&str]]) -> BTreeSet<Vec<String>> {
        sets.iter()
            .map(|s| s.iter().map(|x| x.to_string()).collect())
            .collect()
    }

    #[test]
    fn minimum_covers_of_p4() {
        let g = named::p4();
        let covers = all_minimum_covers(&g, &OracleBudget::default()).unwrap();
        assert_eq!(
            labelled(&g, &covers),
            strings(&[&["1", "3"], &["2", "3"], &["2", "4"]])
        );
    }

    #[test]
    fn minimum_covers_of_fork() {
        let g = named::fork();
        let covers = all_minimum_covers(&g, &OracleBudget::default()).unwrap();
        assert!(covers.iter().all(|c| c.len() == 2));
        assert!(labelled(&g, &covers).contains(&vec!["b1".to_string(), "c1".to_string()]));
    }

    #[test]
    fn minimum_covers_of_k2() {
        let g = named::k2();
        let covers = all_minimum_covers(&g, &OracleBudget::default()).unwrap();
        assert_eq!(labelled(&g, &covers), strings(&[&["L0"], &["R0"]]));
    }

    #[test]
    fn branching_agrees_with_subset_scan() {
        for g in [
            named::p4(),
            named::fork(),
            named::complete(3, 3),
            named::path(9),
        ] {
            assert_eq!(
                minimum_covers_by_branching(&g, 1 << 24).unwrap(),
                all_minimum_covers(&g, &OracleBudget::default()).unwrap()
            );
        }
    }

    #[test]
    fn matching_counts() {
        let b = OracleBudget::default();
        assert_eq!(all_matchings(&named::k2(), &b).unwrap().len(), 2);
        // Empty, three single edges, and {12, 34}.
        assert_eq!(all_matchings(&named::p4(), &b).unwrap().len(), 5);
    }

    /// Independent count of fork matchings: the edge b1-c1, or any choice of
    /// at most one a-edge times at most one d-edge.
    #[test]
    fn fork_matching_count_by_formula() {
        let formula = 1 + (1 + 2) * (1 + 3);
        let got = all_matchings(&named::fork(), &OracleBudget::default()).unwrap();
        assert_eq!(got.len(), formula);
    }

    #[test]
    fn maximal_matchings() {
        let b = OracleBudget::default();
        let g = named::p4();
        let mut sizes: Vec<usize> = all_maximal_matchings(&g, &b)
            .unwrap()
            .iter()
            .map(Matching::len)
            .collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 2]);
        assert_eq!(all_maximal_matchings(&named::k2(), &b).unwrap().len(), 1);
        // {b1c1} plus the 2 x 3 pairs {a?b1, c1d?}.
        let fork = named::fork();
        assert_eq!(all_maximal_matchings(&fork, &b).unwrap().len(), 7);
    }

    #[test]
    fn maximal_branching_agrees_with_filter() {
        let b = OracleBudget::default();
        for g in [
            named::p4(),
            named::fork(),
            named::complete(3, 4),
            named::path(8),
        ] {
            let mut x = all_maximal_matchings(&g, &b).unwrap();
            let mut y = maximal_matchings_by_branching(&g, 1 << 24).unwrap();
            let key = |m: &Matching| m.edges(&g);
            x.sort_by_key(key);
            y.sort_by_key(key);
            assert_eq!(x, y);
        }
    }

    #[test]
    fn hall() {
        let b = OracleBudget::default();
        let k2 = named::k2();
        assert!(hall_condition(&k2, Side::Left, &b).unwrap());
        assert!(hall_condition(&k2, Side::Right, &b).unwrap());
        assert!(!hall_condition(&named::fork(), Side::Left, &b).unwrap());
        assert!(hall_condition(&named::p4(), Side::Left, &b).unwrap());
    }

    #[test]
    fn budgets_are_enforced() {
        let tight = OracleBudget {
            max_vertices: 3,
            max_subsets: 1 << 20,
        };
        assert!(matches!(
            all_minimum_covers(&named::p4(), &tight),
            Err(Error::BudgetExceeded(_))
        ));
        let few = OracleBudget {
            max_vertices: 16,
            max_subsets: 3,
        };
        assert!(matches!(
            all_matchings(&named::p4(), &few),
            Err(Error::BudgetExceeded(_))
        ));
        assert!(matches!(
            minimum_covers_by_branching(&named::complete(4, 4), 5),
            Err(Error::BudgetExceeded(_))
        ));
    }
}
