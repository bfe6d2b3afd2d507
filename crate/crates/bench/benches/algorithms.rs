use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use konig_bench::{sample_graph, sample_maximal};
use konig_core::corpus::connected_bipartite_graphs;
use konig_core::experiments::{run_trials, TrialConfig};
use konig_core::oracle::{all_minimum_covers, OracleBudget};
use konig_core::structure::DEFAULT_PATH_LIMIT;
use konig_core::{classify_matching, konig_cover, maximum_matching, reverse_konig, Matching};

fn matching(c: &mut Criterion) {
    let mut group = c.benchmark_group("maximum_matching");
    for n in [20, 100, 400] {
        let g = sample_graph(n, 4.0 / n as f64, 1);
        group.bench_with_input(BenchmarkId::from_parameter(n), &g, |b, g| {
            b.iter(|| maximum_matching(g, &Matching::empty(g)).unwrap())
        });
    }
    group.finish();
}

fn cover(c: &mut Criterion) {
    let mut group = c.benchmark_group("konig_cover");
    for n in [20, 100, 400] {
        let g = sample_graph(n, 4.0 / n as f64, 2);
        let m = sample_maximal(&g, 2);
        group.bench_with_input(BenchmarkId::from_parameter(n), &(g, m), |b, (g, m)| {
            b.iter(|| konig_cover(g, m).unwrap())
        });
    }
    group.finish();
}

fn classify(c: &mut Criterion) {
    let mut group = c.benchmark_group("classify_matching");
    for n in [6, 10, 14] {
        let g = sample_graph(n, 0.3, 3);
        let m = sample_maximal(&g, 3);
        group.bench_with_input(BenchmarkId::from_parameter(n), &(g, m), |b, (g, m)| {
            b.iter(|| classify_matching(g, m, DEFAULT_PATH_LIMIT).unwrap())
        });
    }
    group.finish();
}

fn reverse(c: &mut Criterion) {
    let g = sample_graph(6, 0.4, 4);
    let covers = all_minimum_covers(&g, &OracleBudget::default()).unwrap();
    c.bench_function("reverse_konig/6x6", |b| {
        b.iter(|| {
            for cover in &covers {
                black_box(reverse_konig(&g, cover, None).unwrap());
            }
        })
    });
}

fn corpus(c: &mut Criterion) {
    let mut group = c.benchmark_group("corpus");
    group.sample_size(10);
    for n in [6, 8] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| connected_bipartite_graphs(n).unwrap())
        });
    }
    group.finish();
}

fn trials(c: &mut Criterion) {
    let mut group = c.benchmark_group("run_trials");
    group.sample_size(10);
    let cfg = TrialConfig {
        n_left: 20,
        n_right: 20,
        edge_probability: 0.3,
        trials: 1000,
        rng_seed: 5,
    };
    group.bench_function("20x20_1000", |b| b.iter(|| run_trials(&cfg).unwrap()));
    group.finish();
}

criterion_group!(benches, matching, cover, classify, reverse, corpus, trials);
criterion_main!(benches);
