//! The 13-dimensional feature vector of a document: two accessibility scales,
//! average neighbor degree, betweenness, clustering and mean shortest path
//! (each as mean and deviation over nodes), plus assortativity, all divided
//! by their averages over shuffled-stream baselines.

use std::io::{self, BufRead, Write};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use super::{
    accessibility, assortativity, avg_neighbor_degree, betweenness, clustering_local,
    mean_and_population_dev, shortest_path_lengths, summarize, MetricsError,
};
use crate::exec;
use crate::learn::Label;
use crate::network::{shuffle_stream, NetworkError, WordNetwork};
use crate::corpus::TokenStream;

pub const N_FEATURES: usize = 13;

/// Feature order is fixed; it defines the feature indices used everywhere
/// downstream (CSV columns, relevance ranks, subset bitmasks).
pub const FEATURE_NAMES: [&str; N_FEATURES] = [
    "alpha2_mean",
    "alpha2_dev",
    "alpha3_mean",
    "alpha3_dev",
    "kn_mean",
    "kn_dev",
    "b_mean",
    "b_dev",
    "c_mean",
    "c_dev",
    "r",
    "l_mean",
    "l_dev",
];

#[derive(Debug, Clone, PartialEq)]
pub struct FeatureVector {
    pub doc_id: String,
    pub label: Option<Label>,
    pub values: [f64; N_FEATURES],
}

#[derive(Debug, Clone)]
pub struct ExtractOptions {
    /// Number of shuffled baselines averaged into the normalizer.
    pub n_shuffles: usize,
    /// Seed for the shuffle-seed sequence; derive it per document.
    pub master_seed: u64,
    /// Reject networks smaller than this many nodes.
    pub min_nodes: usize,
    /// Run the shuffle ensemble on rayon (when compiled in).
    pub parallel: bool,
}

impl Default for ExtractOptions {
    fn default() -> Self {
        ExtractOptions {
            n_shuffles: 20,
            master_seed: 0,
            min_nodes: 10,
            parallel: true,
        }
    }
}

#[derive(Debug, Error)]
pub enum ExtractError {
    #[error(transparent)]
    Network(#[from] NetworkError),
    #[error("document '{doc_id}': network too small ({nodes} nodes, need {min})")]
    NetworkTooSmall {
        doc_id: String,
        nodes: usize,
        min: usize,
    },
    #[error("document '{doc_id}': measurement {feature} undefined on the real network")]
    UndefinedMetric {
        doc_id: String,
        feature: &'static str,
    },
    #[error("document '{doc_id}': shuffled baseline for {feature} is degenerate (mean ~ 0)")]
    DegenerateBaseline {
        doc_id: String,
        feature: &'static str,
    },
    #[error(transparent)]
    Metrics(#[from] MetricsError),
}

/// Raw (un-normalized) summaries of one network in feature order, with a
/// defined flag per slot (assortativity can be undefined).
#[derive(Debug, Clone, Copy)]
struct RawSummary {
    values: [f64; N_FEATURES],
    defined: [bool; N_FEATURES],
}

fn raw_summaries(net: &WordNetwork) -> Result<RawSummary, MetricsError> {
    let mut values = [0.0f64; N_FEATURES];
    let mut defined = [true; N_FEATURES];

    let pairs = [
        (0, summarize(&accessibility(net, 2)?)?),
        (2, summarize(&accessibility(net, 3)?)?),
        (4, summarize(&avg_neighbor_degree(net))?),
        (6, summarize(&betweenness(net))?),
        (8, summarize(&clustering_local(net))?),
        (11, summarize(&shortest_path_lengths(net).0)?),
    ];
    for (slot, (mean, dev)) in pairs {
        values[slot] = mean;
        values[slot + 1] = dev;
    }
    match assortativity(net) {
        Some(r) => values[10] = r,
        None => defined[10] = false,
    }
    Ok(RawSummary { values, defined })
}

/// Everything extraction produces: the normalized features plus the raw
/// summaries and the shuffle-ensemble statistics behind them.
#[derive(Debug, Clone)]
pub struct DetailedFeatures {
    pub features: FeatureVector,
    pub raw: [f64; N_FEATURES],
    pub baseline_mean: [f64; N_FEATURES],
    pub baseline_dev: [f64; N_FEATURES],
}

/// Extract the 13 normalized features of one lemma stream.
///
/// The real network's raw summaries are divided by their averages over
/// `n_shuffles` shuffled copies of the stream (seeds drawn from a generator
/// seeded with `master_seed`). Documents whose network is too small, whose
/// raw assortativity is undefined, or whose baseline mean vanishes are
/// rejected with a diagnostic instead of producing non-finite features.
pub fn extract_features(
    stream: &TokenStream,
    label: Option<Label>,
    opts: &ExtractOptions,
) -> Result<DetailedFeatures, ExtractError> {
    let doc_id = stream.doc_id.clone();
    let net = WordNetwork::build(stream)?;
    if net.n() < opts.min_nodes {
        return Err(ExtractError::NetworkTooSmall {
            doc_id,
            nodes: net.n(),
            min: opts.min_nodes,
        });
    }

    let real = raw_summaries(&net)?;
    if let Some(j) = (0..N_FEATURES).find(|&j| !real.defined[j]) {
        return Err(ExtractError::UndefinedMetric {
            doc_id,
            feature: FEATURE_NAMES[j],
        });
    }

    let mut seed_rng = ChaCha8Rng::seed_from_u64(opts.master_seed);
    let seeds: Vec<u64> = (0..opts.n_shuffles).map(|_| seed_rng.gen()).collect();

    let ensemble = exec::map_indexed(opts.parallel, opts.n_shuffles, |k| {
        let shuffled = shuffle_stream(stream, seeds[k]);
        let net = WordNetwork::build(&shuffled).expect("shuffle preserves stream length");
        raw_summaries(&net)
    });

    let mut baseline_mean = [0.0f64; N_FEATURES];
    let mut baseline_dev = [0.0f64; N_FEATURES];
    for j in 0..N_FEATURES {
        let mut samples = Vec::with_capacity(opts.n_shuffles);
        for r in &ensemble {
            let r = r.as_ref().map_err(|e| ExtractError::Metrics(e.clone()))?;
            if r.defined[j] {
                samples.push(r.values[j]);
            }
        }
        if samples.is_empty() {
            return Err(ExtractError::DegenerateBaseline {
                doc_id,
                feature: FEATURE_NAMES[j],
            });
        }
        let (mean, dev) = mean_and_population_dev(&samples);
        if mean.abs() < 1e-9 {
            return Err(ExtractError::DegenerateBaseline {
                doc_id,
                feature: FEATURE_NAMES[j],
            });
        }
        baseline_mean[j] = mean;
        baseline_dev[j] = dev;
    }

    let mut values = [0.0f64; N_FEATURES];
    for j in 0..N_FEATURES {
        values[j] = real.values[j] / baseline_mean[j];
        if !values[j].is_finite() {
            return Err(ExtractError::DegenerateBaseline {
                doc_id,
                feature: FEATURE_NAMES[j],
            });
        }
    }

    Ok(DetailedFeatures {
        features: FeatureVector {
            doc_id,
            label,
            values,
        },
        raw: real.values,
        baseline_mean,
        baseline_dev,
    })
}

/// Extract features for a whole corpus, one result per stream in input
/// order. Documents run in parallel when `opts.parallel` is set; each
/// document's shuffle ensemble then runs sequentially inside its worker.
/// Per-document seeds derive from `opts.master_seed` and the document id, so
/// the output is identical however the work is scheduled.
pub fn extract_corpus(
    streams: &[TokenStream],
    opts: &ExtractOptions,
) -> Vec<Result<DetailedFeatures, ExtractError>> {
    exec::map_indexed(opts.parallel, streams.len(), |i| {
        let stream = &streams[i];
        let doc_opts = ExtractOptions {
            master_seed: crate::seed::doc_seed(opts.master_seed, &stream.doc_id),
            parallel: false,
            ..opts.clone()
        };
        extract_features(stream, None, &doc_opts)
    })
}

#[derive(Debug, Error)]
pub enum FeatureCsvError {
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error("feature csv line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// Write the feature matrix as CSV: optional `# key = value` comment lines,
/// a header row, then one row per document. Floats are printed in shortest
/// round-trip form, so identical inputs give identical bytes.
pub fn write_feature_csv<W: Write>(
    mut w: W,
    rows: &[FeatureVector],
    comments: &[(&str, String)],
) -> io::Result<()> {
    for (key, value) in comments {
        writeln!(w, "# {key} = {value}")?;
    }
    writeln!(w, "doc_id,class,{}", FEATURE_NAMES.join(","))?;
    for row in rows {
        let class = match row.label {
            Some(Label::Real) => "real",
            Some(Label::Fake) => "fake",
            None => "",
        };
        write!(w, "{},{class}", row.doc_id)?;
        for v in row.values {
            write!(w, ",{v}")?;
        }
        writeln!(w)?;
    }
    Ok(())
}

/// Read a feature matrix written by [`write_feature_csv`]. Leading `#`
/// comment lines are skipped.
pub fn read_feature_csv<R: BufRead>(r: R) -> Result<Vec<FeatureVector>, FeatureCsvError> {
    let mut rows = Vec::new();
    let mut saw_header = false;
    for (idx, line) in r.lines().enumerate() {
        let line = line?;
        let line = line.trim_end();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if !saw_header {
            let expected = format!("doc_id,class,{}", FEATURE_NAMES.join(","));
            if line != expected {
                return Err(FeatureCsvError::Parse {
                    line: idx + 1,
                    msg: format!("unexpected header '{line}'"),
                });
            }
            saw_header = true;
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != N_FEATURES + 2 {
            return Err(FeatureCsvError::Parse {
                line: idx + 1,
                msg: format!("expected {} fields, got {}", N_FEATURES + 2, fields.len()),
            });
        }
        let label = match fields[1] {
            "real" => Some(Label::Real),
            "fake" => Some(Label::Fake),
            "" => None,
            other => {
                return Err(FeatureCsvError::Parse {
                    line: idx + 1,
                    msg: format!("unknown class '{other}'"),
                })
            }
        };
        let mut values = [0.0f64; N_FEATURES];
        for (j, field) in fields[2..].iter().enumerate() {
            values[j] = field.parse::<f64>().map_err(|_| FeatureCsvError::Parse {
                line: idx + 1,
                msg: format!("bad float '{field}'"),
            })?;
        }
        rows.push(FeatureVector {
            doc_id: fields[0].to_string(),
            label,
            values,
        });
    }
    Ok(rows)
}
