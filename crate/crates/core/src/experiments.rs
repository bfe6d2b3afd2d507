//! Random trials: how often does a random maximal matching of a random
//! bipartite graph give a minimum cover under Konig's procedure?
//!
//! Each trial draws from its own ChaCha stream, numbered by trial index
//! under the configured seed, so results do not depend on thread count.

use std::collections::BTreeMap;
use std::io::Write;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, Edge};
use crate::konig::{is_vertex_cover, konig_cover};
use crate::matching::{greedy_maximal_matching, matching_number, Matching};
use crate::oracle::{minimum_cover_size, OracleBudget};

/// Trials on graphs up to this size are also checked by subset scan.
pub const ORACLE_CHECK_VERTICES: usize = 12;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TrialConfig {
    pub n_left: usize,
    pub n_right: usize,
    pub edge_probability: f64,
    pub trials: usize,
    pub rng_seed: u64,
}

impl TrialConfig {
    pub fn validate(&self) -> Result<()> {
        if self.trials == 0 {
            return Err(Error::InvalidConfig("trials must be positive".into()));
        }
        if !(0.0..=1.0).contains(&self.edge_probability) {
            return Err(Error::InvalidConfig(format!(
                "edge probability {} outside [0, 1]",
                self.edge_probability
            )));
        }
        if self.n_left == 0 || self.n_right == 0 {
            return Err(Error::InvalidConfig("both sides need a vertex".into()));
        }
        Ok(())
    }

    /// The random source for trial `index`.
    pub fn trial_rng(&self, index: usize) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.rng_seed);
        rng.set_stream(index as u64);
        rng
    }
}

/// Includes each LEFT-RIGHT pair independently with the configured
/// probability.
pub fn random_bipartite<R: Rng>(cfg: &TrialConfig, rng: &mut R) -> BipartiteGraph {
    let mut edges = Vec::new();
    for i in 0..cfg.n_left {
        for j in 0..cfg.n_right {
            if rng.random_bool(cfg.edge_probability) {
                edges.push((i, j));
            }
        }
    }
    BipartiteGraph::build(cfg.n_left, cfg.n_right, &edges).expect("indices in range")
}

/// Greedy matching over a uniformly shuffled edge order.
pub fn random_maximal_matching<R: Rng>(g: &BipartiteGraph, rng: &mut R) -> Matching {
    let mut order: Vec<Edge> = g.edges().to_vec();
    order.shuffle(rng);
    greedy_maximal_matching(g, &order).expect("shuffle is a permutation")
}

/// [`random_maximal_matching`] driven by a fresh generator.
pub fn seeded_maximal_matching(g: &BipartiteGraph, seed: u64) -> Matching {
    random_maximal_matching(g, &mut ChaCha8Rng::seed_from_u64(seed))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TrialRow {
    pub trial_index: usize,
    pub matching_size: usize,
    pub cover_size: usize,
    pub min_cover_size: usize,
    pub is_minimum: bool,
    /// Whether the subset scan agrees with `is_minimum`; `None` above
    /// [`ORACLE_CHECK_VERTICES`].
    pub oracle_agrees: Option<bool>,
}

/// Trials grouped by minimum cover size.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SizeRow {
    pub min_cover_size: usize,
    pub trials: usize,
    pub minimum_hits: usize,
    pub mean_cover_excess: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TrialReport {
    pub config: TrialConfig,
    pub trials_run: usize,
    pub minimum_hits: usize,
    pub hit_rate: f64,
    pub mean_cover_excess: f64,
    pub oracle_checked: usize,
    pub oracle_disagreements: usize,
    pub per_size: Vec<SizeRow>,
    #[serde(skip)]
    pub rows: Vec<TrialRow>,
}

fn run_trial(cfg: &TrialConfig, index: usize) -> Result<TrialRow> {
    let mut rng = cfg.trial_rng(index);
    let g = random_bipartite(cfg, &mut rng);
    let m = random_maximal_matching(&g, &mut rng);
    let k = konig_cover(&g, &m)?;
    let min_cover_size = matching_number(&g);
    let is_minimum = k.is_cover() && k.len() == min_cover_size;
    let oracle_agrees = if g.vertex_count() <= ORACLE_CHECK_VERTICES {
        let truth = minimum_cover_size(&g, &OracleBudget::default())?;
        let oracle_verdict = is_vertex_cover(&g, k.vertices()) && k.len() == truth;
        Some(oracle_verdict == is_minimum && truth == min_cover_size)
    } else {
        None
    };
    Ok(TrialRow {
        trial_index: index,
        matching_size: m.len(),
        cover_size: k.len(),
        min_cover_size,
        is_minimum,
        oracle_agrees,
    })
}

fn mean_excess<'a>(rows: impl Iterator<Item = &'a TrialRow>) -> f64 {
    let (sum, count) = rows.fold((0usize, 0usize), |(s, c), r| {
        (s + r.cover_size.saturating_sub(r.min_cover_size), c + 1)
    });
    if count == 0 {
        0.0
    } else {
        sum as f64 / count as f64
    }
}

pub fn run_trials(cfg: &TrialConfig) -> Result<TrialReport> {
    cfg.validate()?;
    let rows: Vec<TrialRow> = (0..cfg.trials)
        .into_par_iter()
        .map(|i| run_trial(cfg, i))
        .collect::<Result<_>>()?;

    let minimum_hits = rows.iter().filter(|r| r.is_minimum).count();
    let mut groups: BTreeMap<usize, Vec<&TrialRow>> = BTreeMap::new();
    for r in &rows {
        groups.entry(r.min_cover_size).or_default().push(r);
    }
    let per_size = groups
        .into_iter()
        .map(|(size, rs)| SizeRow {
            min_cover_size: size,
            trials: rs.len(),
            minimum_hits: rs.iter().filter(|r| r.is_minimum).count(),
            mean_cover_excess: mean_excess(rs.into_iter()),
        })
        .collect();
    let checked: Vec<bool> = rows.iter().filter_map(|r| r.oracle_agrees).collect();

    Ok(TrialReport {
        config: cfg.clone(),
        trials_run: rows.len(),
        minimum_hits,
        hit_rate: minimum_hits as f64 / rows.len() as f64,
        mean_cover_excess: mean_excess(rows.iter()),
        oracle_checked: checked.len(),
        oracle_disagreements: checked.iter().filter(|ok| !**ok).count(),
        per_size,
        rows,
    })
}

pub const CSV_HEADER: [&str; 9] = [
    "seed",
    "n_left",
    "n_right",
    "p",
    "trial_index",
    "matching_size",
    "cover_size",
    "min_cover_size",
    "is_minimum",
];

#[derive(Serialize)]
struct CsvRow {
    seed: u64,
    n_left: usize,
    n_right: usize,
    p: f64,
    trial_index: usize,
    matching_size: usize,
    cover_size: usize,
    min_cover_size: usize,
    is_minimum: bool,
}

/// One CSV line per trial, with a header.
pub fn write_csv<W: Write>(report: &TrialReport, out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    let c = &report.config;
    for r in &report.rows {
        w.serialize(CsvRow {
            seed: c.rng_seed,
            n_left: c.n_left,
            n_right: c.n_right,
            p: c.edge_probability,
            trial_index: r.trial_index,
            matching_size: r.matching_size,
            cover_size: r.cover_size,
            min_cover_size: r.min_cover_size,
            is_minimum: r.is_minimum,
        })
        .map_err(|e| Error::Io(e.into()))?;
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    fn cfg(n_left: usize, n_right: usize, p: f64, trials: usize) -> TrialConfig {
        TrialConfig {
            n_left,
            n_right,
            edge_probability: p,
            trials,
            rng_seed: 7,
        }
    }

    #[test]
    fn extreme_probabilities() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let g = random_bipartite(&cfg(3, 4, 1.0, 1), &mut rng);
        assert_eq!(g.edge_count(), 12);
        let g = random_bipartite(&cfg(3, 4, 0.0, 1), &mut rng);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn deterministic() {
        let c = cfg(5, 6, 0.4, 1);
        let a = random_bipartite(&c, &mut c.trial_rng(3));
        let b = random_bipartite(&c, &mut c.trial_rng(3));
        assert_eq!(a, b);
        let c = cfg(4, 4, 0.5, 200);
        assert_eq!(run_trials(&c).unwrap(), run_trials(&c).unwrap());
    }

    #[test]
    fn k2_matching() {
        let g = named::k2();
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        for _ in 0..5 {
            assert_eq!(random_maximal_matching(&g, &mut rng).len(), 1);
        }
    }

    /// Of the six edge orders of P4, the two starting with the middle edge
    /// give the single-edge matching.
    #[test]
    fn p4_matching_distribution() {
        let g = named::p4();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let n = 6000;
        let perfect = (0..n)
            .filter(|_| random_maximal_matching(&g, &mut rng).len() == 2)
            .count();
        let rate = perfect as f64 / n as f64;
        assert!((rate - 2.0 / 3.0).abs() < 0.03, "rate {rate}");
    }

    #[test]
    fn hit_rate_one_cases() {
        let r = run_trials(&cfg(1, 1, 1.0, 20)).unwrap();
        assert_eq!(r.minimum_hits, 20);
        assert_eq!(r.mean_cover_excess, 0.0);
        let r = run_trials(&cfg(2, 2, 1.0, 50)).unwrap();
        assert_eq!(r.hit_rate, 1.0);
    }

    #[test]
    fn report_invariants() {
        let r = run_trials(&cfg(4, 5, 0.4, 300)).unwrap();
        assert_eq!(r.trials_run, 300);
        assert!(r.minimum_hits <= r.trials_run);
        assert!(r.mean_cover_excess >= 0.0);
        assert_eq!(r.mean_cover_excess == 0.0, r.minimum_hits == r.trials_run);
        assert_eq!(r.oracle_checked, 300);
        assert_eq!(r.oracle_disagreements, 0);
        assert_eq!(r.per_size.iter().map(|s| s.trials).sum::<usize>(), 300);
    }

    #[test]
    fn invalid_configs() {
        assert!(matches!(
            run_trials(&cfg(2, 2, 1.5, 1)),
            Err(Error::InvalidConfig(_))
        ));
        assert!(matches!(
            run_trials(&cfg(2, 2, 0.5, 0)),
            Err(Error::InvalidConfig(_))
        ));
    }

    #[test]
    fn csv_output() {
        let r = run_trials(&cfg(3, 3, 0.5, 4)).unwrap();
        let mut buf = Vec::new();
        write_csv(&r, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], CSV_HEADER.join(","));
        assert_eq!(lines.len(), 5);
        assert!(lines[1].starts_with("7,3,3,0.5,0,"));
    }
}
