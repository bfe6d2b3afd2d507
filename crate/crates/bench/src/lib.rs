//! Inputs shared by the benchmarks under benches/.

use konig_core::experiments::{random_bipartite, random_maximal_matching, TrialConfig};
use konig_core::{BipartiteGraph, Matching};

/// A reproducible random graph with `n` vertices per side.
pub fn sample_graph(n: usize, p: f64, seed: u64) -> BipartiteGraph {
    let cfg = TrialConfig {
        n_left: n,
        n_right: n,
        edge_probability: p,
        trials: 1,
        rng_seed: seed,
    };
    random_bipartite(&cfg, &mut cfg.trial_rng(0))
}

/// A reproducible random maximal matching of `g`.
pub fn sample_maximal(g: &BipartiteGraph, seed: u64) -> Matching {
    let cfg = TrialConfig {
        n_left: 1,
        n_right: 1,
        edge_probability: 0.0,
        trials: 1,
        rng_seed: seed,
    };
    random_maximal_matching(g, &mut cfg.trial_rng(1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reproducible() {
        assert_eq!(sample_graph(8, 0.3, 1), sample_graph(8, 0.3, 1));
        let g = sample_graph(8, 0.3, 1);
        assert_eq!(sample_maximal(&g, 4), sample_maximal(&g, 4));
    }
}
