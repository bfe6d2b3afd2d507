//! Property sweeps over the exhaustive corpus. Asserted suites must report
//! zero violations; observational suites only count them.

use std::collections::{BTreeMap, BTreeSet};
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::corpus::connected_bipartite_graphs;
use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, Side, VertexId, VertexSet};
use crate::konig::{is_minimal_cover, is_minimum_cover, is_vertex_cover, konig_cover, z_set};
use crate::matching::{
    find_augmenting_path, is_disjoint_cycle_union, is_maximal, matching_number, maximum_matching,
    symmetric_difference, AlternatingPath, Matching,
};
use crate::oracle::{
    all_matchings, all_minimum_covers, hall_condition, hall_condition_for, OracleBudget,
};
use crate::reverse::{
    default_visit_order, lone_soldier_exceptions, reverse_konig, saturating_matching_down,
    split_by_cover,
};
use crate::star::{eke_report, star_stud};
use crate::structure::{
    classify_matching, enumerate_augmenting_paths, meet_join, non_endpoint_contacts,
    path_structure_among, PathStructure, DEFAULT_PATH_LIMIT,
};

/// Largest base graph for the star-studded sweep.
pub const STAR_STUDDED_MAX_BASE: usize = 6;
/// Search-node cap for each enumeration on a star-studded graph.
pub const STAR_STUDDED_BUDGET: u64 = 1 << 28;
/// Sampled visit orders per cover, on top of the default order.
pub const SAMPLED_VISIT_ORDERS: usize = 5;

/// A corpus graph with everything the suites share.
pub struct CorpusCase {
    pub index: usize,
    pub graph: BipartiteGraph,
    pub matchings: Vec<Matching>,
    pub covers: Vec<VertexSet>,
    pub maximal: Vec<usize>,
    pub minimum_covers: BTreeSet<VertexSet>,
    pub matching_number: usize,
}

impl CorpusCase {
    pub fn new(index: usize, graph: BipartiteGraph) -> Result<Self> {
        let budget = OracleBudget::default();
        let matchings = all_matchings(&graph, &budget)?;
        let covers = matchings
            .iter()
            .map(|m| konig_cover(&graph, m).map(|k| k.into_vertices()))
            .collect::<Result<Vec<_>>>()?;
        let maximal = (0..matchings.len())
            .filter(|&i| is_maximal(&graph, &matchings[i]).expect("own matching"))
            .collect();
        let minimum_covers = all_minimum_covers(&graph, &budget)?;
        let matching_number = matchings.iter().map(Matching::len).max().unwrap_or(0);
        Ok(CorpusCase {
            index,
            graph,
            matchings,
            covers,
            maximal,
            minimum_covers,
            matching_number,
        })
    }

    fn maximal_matchings(&self) -> impl Iterator<Item = (usize, &Matching)> {
        self.maximal.iter().map(|&i| (i, &self.matchings[i]))
    }
}

fn labels(g: &BipartiteGraph, vs: impl IntoIterator<Item = VertexId>) -> String {
    let mut out: Vec<&str> = vs.into_iter().map(|v| g.label(v)).collect();
    out.sort();
    format!("{{{}}}", out.join(","))
}

fn describe_graph(g: &BipartiteGraph) -> String {
    let edges: Vec<String> = g
        .edges()
        .iter()
        .map(|e| format!("{}-{}", g.label(e.left), g.label(e.right)))
        .collect();
    format!("graph [{}]", edges.join(" "))
}

fn describe_matching(g: &BipartiteGraph, m: &Matching) -> String {
    let edges: Vec<String> = m
        .edges(g)
        .iter()
        .map(|e| format!("{}{}", g.label(e.left), g.label(e.right)))
        .collect();
    format!("M = {{{}}}", edges.join(","))
}

fn describe_path(g: &BipartiteGraph, p: &AlternatingPath) -> String {
    let vs: Vec<&str> = p.vertices().iter().map(|&v| g.label(v)).collect();
    format!("P = {}", vs.join("-"))
}

/// Running count for one suite over one graph.
#[derive(Default)]
struct Tally {
    cases: u64,
    violations: u64,
    first: Option<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.violations += 1;
            if self.first.is_none() {
                self.first = Some(describe());
            }
        }
    }

    fn merge(&mut self, other: Tally) {
        self.cases += other.cases;
        self.violations += other.violations;
        if self.first.is_none() {
            self.first = other.first;
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub name: &'static str,
    pub asserted: bool,
    pub cases: u64,
    pub violations: u64,
    pub first_counterexample: Option<String>,
    #[serde(serialize_with = "as_seconds")]
    pub elapsed: Duration,
}

fn as_seconds<S: serde::Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64())
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.violations == 0
    }

    pub fn line(&self) -> String {
        let status = match (self.asserted, self.passed()) {
            (_, true) => "PASS",
            (true, false) => "FAIL",
            (false, false) => "NOTE",
        };
        let mut s = format!(
            "{status} {} ({} cases, {} violations, {:.2}s)",
            self.name,
            self.cases,
            self.violations,
            self.elapsed.as_secs_f64()
        );
        if let Some(c) = &self.first_counterexample {
            s.push_str(&format!(": {c}"));
        }
        s
    }
}

type SuiteFn = fn(&CorpusCase, &mut Tally);

pub struct Suite {
    pub name: &'static str,
    pub asserted: bool,
    run: SuiteFn,
}

macro_rules! suite {
    ($name:literal, $asserted:expr, $f:path) => {
        Suite {
            name: $name,
            asserted: $asserted,
            run: $f,
        }
    };
}

pub fn suites() -> Vec<Suite> {
    vec![
        suite!("konig-equality", true, konig_equality),
        suite!("maximum-matching", true, maximum_matching_vs_oracle),
        suite!("z-closure", true, z_closure),
        suite!("arbitrary-matching-cover", true, arbitrary_matching_cover),
        suite!("exactly-one-endpoint", true, exactly_one_endpoint),
        suite!("maximal-cover-minimal", true, maximal_cover_minimal),
        suite!("cycle-fibers", true, cycle_fibers),
        suite!("reverse-round-trip", true, reverse_round_trip),
        suite!("hall-consistency", true, hall_consistency),
        suite!("surjectivity", true, surjectivity),
        suite!("classification", true, classification),
        suite!("localization", true, localization),
        suite!("unique-root-equality", true, unique_root_equality),
        suite!("strict-decrease", true, strict_decrease),
        suite!("endpoint-intersection", true, endpoint_intersection),
        suite!("lone-soldier", false, lone_soldier),
        suite!("visit-order-independence", false, visit_order_independence),
        suite!("unique-root-cardinality", false, unique_root_cardinality),
        suite!("hat-reduction", false, hat_reduction),
        suite!("meet-join-commutativity", false, commutativity),
        suite!("cover-delta-nonnegative", false, cover_delta_nonnegative),
        suite!("hat-cut-side", false, hat_cut_side),
    ]
}

pub fn suite_by_name(name: &str) -> Option<Suite> {
    suites().into_iter().find(|s| s.name == name)
}

pub fn build_cases(max_vertices: usize) -> Result<Vec<CorpusCase>> {
    let graphs = connected_bipartite_graphs(max_vertices)?;
    graphs
        .into_par_iter()
        .enumerate()
        .map(|(i, g)| CorpusCase::new(i, g))
        .collect()
}

pub fn run_suite(suite: &Suite, cases: &[CorpusCase]) -> SuiteReport {
    let start = Instant::now();
    let tallies: Vec<Tally> = cases
        .par_iter()
        .map(|case| {
            let mut t = Tally::default();
            (suite.run)(case, &mut t);
            t
        })
        .collect();
    let mut total = Tally::default();
    for t in tallies {
        total.merge(t);
    }
    SuiteReport {
        name: suite.name,
        asserted: suite.asserted,
        cases: total.cases,
        violations: total.violations,
        first_counterexample: total.first,
        elapsed: start.elapsed(),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CorpusSummary {
    pub max_vertices: usize,
    pub graphs: usize,
    pub matchings: usize,
    pub maximal_matchings: usize,
    pub minimum_covers: usize,
    pub suites: Vec<SuiteReport>,
}

impl CorpusSummary {
    /// No violations in any asserted suite.
    pub fn passed(&self) -> bool {
        self.suites.iter().all(|s| !s.asserted || s.passed())
    }
}

/// Every suite over every corpus graph with at most `max_vertices`
/// vertices, followed by the star-studded sweep on base graphs up to
/// [`STAR_STUDDED_MAX_BASE`] vertices.
pub fn corpus_verify(max_vertices: usize) -> Result<CorpusSummary> {
    let cases = build_cases(max_vertices)?;
    let mut reports: Vec<SuiteReport> = suites().iter().map(|s| run_suite(s, &cases)).collect();
    reports.push(star_studded_sweep(max_vertices.min(STAR_STUDDED_MAX_BASE))?);
    Ok(CorpusSummary {
        max_vertices,
        graphs: cases.len(),
        matchings: cases.iter().map(|c| c.matchings.len()).sum(),
        maximal_matchings: cases.iter().map(|c| c.maximal.len()).sum(),
        minimum_covers: cases.iter().map(|c| c.minimum_covers.len()).sum(),
        suites: reports,
    })
}

/// For every corpus graph `H`, `St(H)` must be enumeratively
/// Konig-Egervary, every minimum cover of `H` must be the restriction of a
/// Konig cover of a maximal matching of `St(H)`, and lifting must be a
/// bijection onto the minimum covers of `St(H)`.
pub fn star_studded_sweep(max_base_vertices: usize) -> Result<SuiteReport> {
    let start = Instant::now();
    let graphs = connected_bipartite_graphs(max_base_vertices)?;
    let tallies: Vec<Result<Tally>> = graphs
        .par_iter()
        .map(|h| {
            let mut t = Tally::default();
            let st = star_stud(h)?;
            let report = eke_report(&st.full, STAR_STUDDED_BUDGET)?;
            t.check(report.is_eke(), || {
                let missing: Vec<String> = report
                    .missing()
                    .map(|c| labels(&st.full, c.iter().copied()))
                    .collect();
                format!("St({}) misses {}", describe_graph(h), missing.join(" "))
            });
            let reached: BTreeSet<VertexSet> = report
                .reached
                .iter()
                .map(|c| st.restrict_cover(c))
                .collect::<Result<_>>()?;
            let base_covers = all_minimum_covers(h, &OracleBudget::default())?;
            t.check(reached == base_covers, || {
                format!(
                    "restrictions from St({}) differ from its minimum covers",
                    describe_graph(h)
                )
            });
            let lifted: BTreeSet<VertexSet> = base_covers
                .iter()
                .map(|c| st.lift_cover(c))
                .collect::<Result<_>>()?;
            t.check(lifted == report.minimum_covers, || {
                format!("lifting is not a bijection for {}", describe_graph(h))
            });
            Ok(t)
        })
        .collect();
    let mut total = Tally::default();
    for t in tallies {
        total.merge(t?);
    }
    Ok(SuiteReport {
        name: "star-studded",
        asserted: true,
        cases: total.cases,
        violations: total.violations,
        first_counterexample: total.first,
        elapsed: start.elapsed(),
    })
}

fn konig_equality(c: &CorpusCase, t: &mut Tally) {
    let g = &c.graph;
    let m = maximum_matching(g, &Matching::empty(g)).expect("own graph");
    let oracle = c.minimum_covers.iter().next().map_or(0, BTreeSet::len);
    let k = konig_cover(g, &m).expect("own graph");
    t.check(
        m.len() == oracle && is_minimum_cover(g, k.vertices()),
        || {
            format!(
                "{}: maximum matching {}, oracle cover size {oracle}, Konig cover {}",
                describe_graph(g),
                m.len(),
                labels(g, k.vertices().iter().copied())
            )
        },
    );
}

fn maximum_matching_vs_oracle(c: &CorpusCase, t: &mut Tally) {
    let g = &c.graph;
    let m = maximum_matching(g, &Matching::empty(g)).expect("own graph");
    let stuck = g.vertices().filter(|&v| !m.is_saturated(v)).all(|v| {
        find_augmenting_path(g, &m, v)
            .expect("unsaturated")
            .is_none()
    });
    t.check(m.len() == c.matching_number && stuck, || {
        format!(
            "{}: maximum matching size {} vs {}",
            describe_graph(g),
            m.len(),
            c.matching_number
        )
    });
    t.check(matching_number(g) == c.matching_number, || {
        describe_graph(g)
    });
}

fn z_closure(c: &CorpusCase, t: &mut Tally) {
    let g = &c.graph;
    for m in &c.matchings {
        let z = z_set(g, m).expect("own graph");
        let roots_in = g
            .source_vertices()
            .filter(|&u| !m.is_saturated(u))
            .all(|u| z.contains(u));
        t.check(roots_in && z.is_closed(g, m), || {
            format!("{}: {}", describe_graph(g), describe_matching(g, m))
        });
    }
}

fn arbitrary_matching_cover(c: &CorpusCase, t: &mut Tally) {
    let g = &c.graph;
    for (m, k) in c.matchings.iter().zip(&c.covers) {
        t.check(is_vertex_cover(g, k), || {
            format!("{}: {}", describe_graph(g), describe_matching(g, m))
        });
    }
}

fn exactly_one_endpoint(c: &CorpusCase, t: &mut Tally) {
    let g = &c.graph;
    for (m, k) in c.matchings.iter().zip(&c.covers) {
        let ok = m
            .edges(g)
            .iter()
            .all(|e| k.contains(&e.left) != k.contains(&e.right));
        t.check(ok, || {
            format!("{}: {}", describe_graph(g), describe_matching(g, m))
        });
    }
}

fn maximal_cover_minimal(c: &CorpusCase, t: &mut Tally) {
    let g = &c.graph;
    for (i, m) in c.maximal_matchings() {
        let k = &c.covers[i];
        let ok = is_vertex_cover(g, k) && is_minimal_cover(g, k).unwrap_or(false);
        t.check(ok, || {
            format!("{}: {}", describe_graph(g), describe_matching(g, m))
        });
    }
}

/// Two matchings differ by disjoint cycles exactly when they saturate the
/// same vertices, so only pairs within a saturation class are compared.
fn cycle_fibers(c: &CorpusCase, t: &mut Tally) {
    let g = &c.graph;
    let mut classes: BTreeMap<Vec<bool>, Vec<usize>> = BTreeMap::new();
    for (i, m) in c.matchings.iter().enumerate() {
        let key = g.vertices().map(|v| m.is_saturated(v)).collect();
        classes.entry(key).or_default().push(i);
    }
    for members in classes.values() {
        for (a, &i) in members.iter().enumerate() {
            for &j in &members[a + 1..] {
                let (m1, m2) = (&c.matchings[i], &c.matchings[j]);
                let diff = symmetric_difference(g, m1, m2).expect("own graph");
                if !is_disjoint_cycle_union(g, &diff) {
                    t.check(false, || {
                        format!(
                            "{}: equally saturating matchings not cycle-related",
                            describe_graph(g)
                        )
                    });
                    continue;
                }
                let same_z = z_set(g, m1).unwrap().vertices() == z_set(g, m2).unwrap().vertices();
                t.check(c.covers[i] == c.covers[j] && same_z, || {
                    format!(
                        "{}: {} and {}",
                        describe_graph(g),
                        describe_matching(g, m1),
                        describe_matching(g, m2)
                    )
                });
            }
        }
    }
}

fn visit_orders(c: &CorpusCase, cover: &VertexSet) -> Vec<Vec<VertexId>> {
    let base = default_visit_order(&c.graph, cover);
    let mut rng = ChaCha8Rng::seed_from_u64(c.index as u64);
    let mut orders = vec![base.clone()];
    for _ in 0..SAMPLED_VISIT_ORDERS {
        let mut o = base.clone();
        o.shuffle(&mut rng);
        orders.push(o);
    }
    orders
}

fn reverse_round_trip(c: &CorpusCase, t: &mut Tally) {
    let g = &c.graph;
    for cover in &c.minimum_covers {
        for order in visit_orders(c, cover) {
            let outcome = reverse_konig(g, cover, Some(&order));
            t.check(outcome.is_ok(), || {
                format!(
                    "{}: C = {}, order {}: {}",
                    describe_graph(g),
                    labels(g, cover.iter().copied()),
                    labels(g, order.iter().copied()),
                    outcome.err().map(|e| e.to_string()).unwrap_or_default()
                )
            });
        }
    }
}

fn hall_consistency(c: &CorpusCase, t: &mut Tally) {
    let g = &c.graph;
    let budget = OracleBudget::default();
    let m = maximum_matching(g, &Matching::empty(g)).expect("own graph");
    for side in [Side::Left, Side::Right] {
        let saturates = g
            .vertices()
            .filter(|&v| g.side(v) == side)
            .all(|v| m.is_saturated(v));
        let hall = hall_condition(g, side, &budget).expect("small graph");
        t.check(hall == saturates, || {
            format!("{}: side {side:?}", describe_graph(g))
        });
    }
    for cover in &c.minimum_covers {
        let split = split_by_cover(g, cover).expect("oracle cover is minimum");
        let local = split.down.materialize(g);
        let members: Vec<VertexId> = cover
            .iter()
            .filter(|&&v| g.is_source(v))
            .map(|&v| local.child_of(v).expect("U & C lies in the lower part"))
            .collect();
        let hall = hall_condition_for(&local.graph, &members, &budget).expect("small graph");
        let saturated = saturating_matching_down(g, &split, cover).is_ok();
        t.check(hall == saturated, || {
            format!(
                "{}: C = {}",
                describe_graph(g),
                labels(g, cover.iter().copied())
            )
        });
    }
}

fn surjectivity(c: &CorpusCase, t: &mut Tally) {
    let g = &c.graph;
    let reached: BTreeSet<VertexSet> = c
        .covers
        .iter()
        .filter(|k| is_minimum_cover(g, k))
        .cloned()
        .collect();
    t.check(reached == c.minimum_covers, || {
        let missing: Vec<String> = c
            .minimum_covers
            .difference(&reached)
            .map(|k| labels(g, k.iter().copied()))
            .collect();
        format!("{}: unreached {}", describe_graph(g), missing.join(" "))
    });
}

fn classification(c: &CorpusCase, t: &mut Tally) {
    let g = &c.graph;
    for (i, m) in c.maximal_matchings() {
        let truth = is_minimum_cover(g, &c.covers[i]);
        let verdict = classify_matching(g, m, DEFAULT_PATH_LIMIT);
        let ok = matches!(&verdict, Ok(v) if v.is_minimum == truth);
        t.check(ok, || {
            let got = match &verdict {
                Ok(v) => format!(
                    "classified {}",
                    if v.is_minimum {
                        "minimum"
                    } else {
                        "not minimum"
                    }
                ),
                Err(e) => e.to_string(),
            };
            format!(
                "{}: {}, Konig cover {} has size {} vs minimum {}; {got}",
                describe_graph(g),
                describe_matching(g, m),
                labels(g, c.covers[i].iter().copied()),
                c.covers[i].len(),
                c.matching_number
            )
        });
    }
}

/// Calls `f` for every (maximal matching, augmenting path) pair with the
/// structure of the path and both Konig covers.
fn for_each_triple(
    c: &CorpusCase,
    mut f: impl FnMut(&Matching, &PathStructure, &VertexSet, &VertexSet, &[AlternatingPath]),
) {
    let g = &c.graph;
    for (i, m) in c.maximal_matchings() {
        let paths = enumerate_augmenting_paths(g, m, DEFAULT_PATH_LIMIT).expect("small graph");
        for p in &paths {
            let ps = path_structure_among(g, m, p, &paths).expect("augmenting");
            let after = konig_cover(g, &m.augment(g, p).expect("augmenting"))
                .expect("own graph")
                .into_vertices();
            f(m, &ps, &c.covers[i], &after, &paths);
        }
    }
}

fn describe_triple(g: &BipartiteGraph, m: &Matching, ps: &PathStructure) -> String {
    format!(
        "{}: {}, {}",
        describe_graph(g),
        describe_matching(g, m),
        describe_path(g, &ps.base_path)
    )
}

fn localization(c: &CorpusCase, t: &mut Tally) {
    let g = &c.graph;
    for_each_triple(c, |m, ps, before, after, _| {
        let outside = g.vertices().filter(|&r| !ps.subgraph.contains(r));
        let bad: Vec<VertexId> = outside
            .filter(|&r| {
                let partner = m.mate(r).is_some_and(|w| after.contains(&w));
                before.contains(&r) != (after.contains(&r) || partner)
            })
            .collect();
        t.check(bad.is_empty(), || {
            format!(
                "{}; fails at {}",
                describe_triple(g, m, ps),
                labels(g, bad.iter().copied())
            )
        });
    });
}

fn unique_root_equality(c: &CorpusCase, t: &mut Tally) {
    let g = &c.graph;
    for_each_triple(c, |m, ps, before, after, _| {
        if ps.roots().len() == 1 {
            t.check(before == after, || {
                format!(
                    "{}; K_M = {}, K_M^P = {}",
                    describe_triple(g, m, ps),
                    labels(g, before.iter().copied()),
                    labels(g, after.iter().copied())
                )
            });
        }
    });
}

fn unique_root_cardinality(c: &CorpusCase, t: &mut Tally) {
    let g = &c.graph;
    for_each_triple(c, |m, ps, before, after, _| {
        if ps.roots().len() == 1 {
            t.check(before.len() == after.len(), || {
                format!(
                    "{}; sizes {} and {}",
                    describe_triple(g, m, ps),
                    before.len(),
                    after.len()
                )
            });
        }
    });
}

fn strict_decrease(c: &CorpusCase, t: &mut Tally) {
    let g = &c.graph;
    for_each_triple(c, |m, ps, before, after, _| {
        let free = ps.unsaturated_outside_check(g).expect("well formed");
        if free.len() >= 2 {
            t.check(before.len() > after.len(), || {
                format!(
                    "{}; unsaturated {} outside the check subgraph, sizes {} and {}",
                    describe_triple(g, m, ps),
                    labels(g, free.iter().copied()),
                    before.len(),
                    after.len()
                )
            });
        }
    });
}

fn hat_reduction(c: &CorpusCase, t: &mut Tally) {
    let g = &c.graph;
    for_each_triple(c, |m, ps, before, after, _| {
        let hat = ps.hat_subgraph().expect("well formed");
        let count = |k: &VertexSet, s: &VertexSet| k.intersection(s).count();
        let whole = count(before, &ps.subgraph.vertices) == count(after, &ps.subgraph.vertices);
        let local = count(before, &hat.vertices) == count(after, &hat.vertices);
        t.check(whole == local, || describe_triple(g, m, ps));
    });
}

fn endpoint_intersection(c: &CorpusCase, t: &mut Tally) {
    let g = &c.graph;
    for_each_triple(c, |m, ps, _, _, paths| {
        for q in paths {
            let contacts = non_endpoint_contacts(g, &ps.base_path, q);
            t.check(contacts.is_empty(), || {
                format!("{} and {}", describe_triple(g, m, ps), describe_path(g, q))
            });
        }
    });
}

fn commutativity(c: &CorpusCase, t: &mut Tally) {
    let g = &c.graph;
    for_each_triple(c, |m, ps, _, _, paths| {
        for q in paths {
            let pq = meet_join(&ps.base_path, q);
            if pq.0.is_some() {
                t.check(pq == meet_join(q, &ps.base_path), || {
                    format!("{} and {}", describe_triple(g, m, ps), describe_path(g, q))
                });
            }
        }
    });
}

fn cover_delta_nonnegative(c: &CorpusCase, t: &mut Tally) {
    let g = &c.graph;
    for_each_triple(c, |m, ps, before, after, _| {
        t.check(before.len() >= after.len(), || describe_triple(g, m, ps));
    });
}

fn hat_cut_side(c: &CorpusCase, t: &mut Tally) {
    let g = &c.graph;
    for_each_triple(c, |m, ps, _, _, _| {
        if let Some(v) = ps.hat_cut_vertex {
            t.check(!g.is_source(v), || describe_triple(g, m, ps));
        }
    });
}

fn lone_soldier(c: &CorpusCase, t: &mut Tally) {
    let g = &c.graph;
    for cover in &c.minimum_covers {
        for order in visit_orders(c, cover) {
            if let Ok(r) = reverse_konig(g, cover, Some(&order)) {
                let bad = lone_soldier_exceptions(g, &r.split, &r.m_up);
                t.check(bad.is_empty(), || {
                    format!(
                        "{}: C = {}",
                        describe_graph(g),
                        labels(g, cover.iter().copied())
                    )
                });
            }
        }
    }
}

fn visit_order_independence(c: &CorpusCase, t: &mut Tally) {
    let g = &c.graph;
    for cover in &c.minimum_covers {
        let results: Vec<BTreeSet<_>> = visit_orders(c, cover)
            .iter()
            .filter_map(|o| reverse_konig(g, cover, Some(o)).ok())
            .map(|r| r.combined.edge_set(g))
            .collect();
        let same = results.windows(2).all(|w| w[0] == w[1]);
        t.check(same, || {
            format!(
                "{}: C = {}",
                describe_graph(g),
                labels(g, cover.iter().copied())
            )
        });
    }
}

/// Runs one named suite; mainly for tests and the CLI.
pub fn run_named(name: &str, max_vertices: usize) -> Result<SuiteReport> {
    if name == "star-studded" {
        return star_studded_sweep(max_vertices);
    }
    let suite =
        suite_by_name(name).ok_or_else(|| Error::InvalidConfig(format!("no suite `{name}`")))?;
    let cases = build_cases(max_vertices)?;
    Ok(run_suite(&suite, &cases))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_unique() {
        let names: BTreeSet<&str> = suites().iter().map(|s| s.name).collect();
        assert_eq!(names.len(), suites().len());
    }

    #[test]
    fn small_corpus_counts() {
        let cases = build_cases(4).unwrap();
        assert_eq!(cases.len(), 5);
        // K2: the empty matching and the edge.
        assert_eq!(cases[0].matchings.len(), 2);
        assert_eq!(cases[0].maximal, vec![1]);
    }

    #[test]
    fn always_true_suites_pass_on_small_corpus() {
        let cases = build_cases(5).unwrap();
        for name in [
            "konig-equality",
            "reverse-round-trip",
            "surjectivity",
            "cycle-fibers",
            "exactly-one-endpoint",
        ] {
            let r = run_suite(&suite_by_name(name).unwrap(), &cases);
            assert!(r.cases > 0 && r.passed(), "{}", r.line());
        }
    }

    /// Augmenting the single-edge matching of P4 swaps its cover from the
    /// RIGHT side to the LEFT side, so set equality cannot hold there.
    #[test]
    fn unique_root_equality_fails_on_p4() {
        let cases = build_cases(4).unwrap();
        let r = run_suite(&suite_by_name("unique-root-equality").unwrap(), &cases);
        assert!(r.violations > 0);
    }

    #[test]
    fn unknown_suite() {
        assert!(matches!(run_named("nope", 3), Err(Error::InvalidConfig(_))));
    }
}
