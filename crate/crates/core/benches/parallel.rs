//! Parallel vs sequential timings for the three hot loops: single-document
//! feature extraction (the 20-shuffle ensemble), batch extraction over a
//! small corpus, and the exhaustive subset sweep.
//!
//! `cargo bench -p gibnet` runs with rayon; pass `--no-default-features` to
//! time the purely sequential build.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use gibnet::corpus::{generate_gibberish, GibberishGrammar, Lexicon};
use gibnet::learn::{feature_relevance, ClassifierSpec, Dataset, Label, RelevanceConfig};
use gibnet::metrics::{extract_features, ExtractOptions};
use gibnet::corpus::preprocess;
use gibnet::TokenStream;

fn sample_stream(seed: u64, words: usize) -> TokenStream {
    let grammar = GibberishGrammar::bundled();
    let lexicon = Lexicon::bundled();
    let doc = generate_gibberish(&grammar, seed, words).unwrap();
    preprocess(&doc, &lexicon).unwrap().0
}

fn bench_extract_features(c: &mut Criterion) {
    let stream = sample_stream(1, 1200);
    let mut group = c.benchmark_group("extract_features");
    group.sample_size(10);
    for &parallel in &[false, true] {
        let name = if parallel { "parallel" } else { "sequential" };
        group.bench_with_input(BenchmarkId::from_parameter(name), &parallel, |b, &par| {
            let opts = ExtractOptions {
                master_seed: 7,
                parallel: par,
                ..ExtractOptions::default()
            };
            b.iter(|| extract_features(&stream, Some(Label::Fake), &opts).unwrap());
        });
    }
    group.finish();
}

fn bench_corpus_batch(c: &mut Criterion) {
    let streams: Vec<TokenStream> = (0..8).map(|s| sample_stream(s, 1000)).collect();
    let mut group = c.benchmark_group("corpus_batch");
    group.sample_size(10);
    for &parallel in &[false, true] {
        let name = if parallel { "parallel" } else { "sequential" };
        group.bench_with_input(BenchmarkId::from_parameter(name), &parallel, |b, &par| {
            let opts = ExtractOptions {
                master_seed: 11,
                parallel: par,
                ..ExtractOptions::default()
            };
            b.iter(|| gibnet::metrics::extract_corpus(&streams, &opts));
        });
    }
    group.finish();
}

fn bench_relevance_sweep(c: &mut Criterion) {
    // 8 features -> 255 subsets; enough work to show scaling without taking
    // minutes per sample.
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
    let mut rows = Vec::new();
    let mut labels = Vec::new();
    for i in 0..80 {
        let label = if i % 2 == 0 { Label::Real } else { Label::Fake };
        let shift = if label == Label::Real { 0.0 } else { 1.5 };
        let mut row: Vec<f64> = (0..8).map(|_| rng.gen_range(-1.0..1.0)).collect();
        row[0] += shift;
        row[3] += shift * 0.5;
        rows.push(row);
        labels.push(label);
    }
    let names = (0..8).map(|j| format!("f{j}")).collect();
    let data = Dataset::new(names, rows, labels).unwrap();

    let mut group = c.benchmark_group("relevance_sweep");
    group.sample_size(10);
    for &parallel in &[false, true] {
        let name = if parallel { "parallel" } else { "sequential" };
        group.bench_with_input(BenchmarkId::from_parameter(name), &parallel, |b, &par| {
            let config = RelevanceConfig {
                folds: 5,
                seed: 3,
                parallel: par,
            };
            b.iter(|| feature_relevance(&data, &ClassifierSpec::Knn { k: 1 }, &config).unwrap());
        });
    }
    group.finish();
}

criterion_group!(
    benches,
    bench_extract_features,
    bench_corpus_batch,
    bench_relevance_sweep
);
criterion_main!(benches);
