//! `ingest`: manifests in, feature matrix out.

use std::fs;

use serde::Serialize;

use gibnet::corpus::{preprocess, RawDocument};
use gibnet::metrics::{extract_corpus, write_feature_csv, ExtractOptions, FeatureVector};
use gibnet::TokenStream;

use super::{load_lexicon, read_manifests};
use crate::artifacts::{csv_with_comments, write_atomic, write_json_atomic, Meta};
use crate::config::RunConfig;
use crate::error::CliError;

#[derive(Debug, Clone, Serialize)]
pub struct RejectedDoc {
    pub id: String,
    pub reason: String,
}

#[derive(Debug, Serialize)]
pub struct IngestSummary {
    pub meta: Meta,
    pub manifest_count: usize,
    pub accepted: usize,
    pub rejected: Vec<RejectedDoc>,
    /// SHA-256 of the stopword list actually used.
    pub stopwords_sha256: String,
}

/// Run the corpus through preprocessing and feature extraction, writing
/// `features.csv`, `rejected.tsv` and `ingest_summary.json`. Per-document
/// failures become rejections, never aborts; accepted plus rejected always
/// equals the manifest count.
pub fn run(config: &RunConfig) -> Result<IngestSummary, CliError> {
    let lexicon = load_lexicon(config)?;
    let entries = read_manifests(config)?;
    let stopword_bytes = fs::read(config.resolve(&config.lexicon.stopwords))?;

    // Preprocess sequentially (cheap), collecting streams for the heavy
    // extraction stage.
    let mut streams: Vec<TokenStream> = Vec::new();
    let mut stream_meta: Vec<usize> = Vec::new(); // index into entries
    let mut rejected: Vec<RejectedDoc> = Vec::new();
    for (idx, entry) in entries.iter().enumerate() {
        let body = match fs::read_to_string(&entry.path) {
            Ok(body) => body,
            Err(e) => {
                rejected.push(RejectedDoc {
                    id: entry.id.clone(),
                    reason: format!("unreadable: {e}"),
                });
                continue;
            }
        };
        let mut doc = RawDocument::new(entry.id.clone(), body);
        doc.source_path = Some(entry.path.clone());
        doc.declared_class = Some(entry.class);
        match preprocess(&doc, &lexicon) {
            Ok((stream, _lint)) => {
                streams.push(stream);
                stream_meta.push(idx);
            }
            Err(e) => rejected.push(RejectedDoc {
                id: entry.id.clone(),
                reason: e.to_string(),
            }),
        }
    }

    let opts = ExtractOptions {
        n_shuffles: config.n_shuffles,
        master_seed: config.seed,
        min_nodes: config.min_nodes,
        parallel: config.parallel,
    };
    let results = extract_corpus(&streams, &opts);

    let mut accepted_rows: Vec<FeatureVector> = Vec::new();
    for (result, &entry_idx) in results.into_iter().zip(&stream_meta) {
        let entry = &entries[entry_idx];
        match result {
            Ok(detailed) => {
                let mut features = detailed.features;
                features.label = Some(entry.class);
                accepted_rows.push(features);
            }
            Err(e) => rejected.push(RejectedDoc {
                id: entry.id.clone(),
                reason: e.to_string(),
            }),
        }
    }

    assert_eq!(
        accepted_rows.len() + rejected.len(),
        entries.len(),
        "every manifest entry must be accepted or rejected"
    );
    if accepted_rows.is_empty() {
        return Err(CliError::Data("every document was rejected".into()));
    }

    let comments = config.artifact_comments();
    let mut csv = Vec::new();
    for (key, value) in &comments {
        csv.extend_from_slice(format!("# {key} = {value}\n").as_bytes());
    }
    write_feature_csv(&mut csv, &accepted_rows, &[])
        .map_err(|e| CliError::Internal(e.to_string()))?;
    write_atomic(&config.output_path("features.csv"), &csv)?;

    rejected.sort_by(|a, b| a.id.cmp(&b.id));
    let rejected_tsv = csv_with_comments(
        &comments,
        "doc_id\treason",
        rejected.iter().map(|r| format!("{}\t{}", r.id, r.reason)),
    );
    write_atomic(&config.output_path("rejected.tsv"), &rejected_tsv)?;

    let summary = IngestSummary {
        meta: Meta::from_config(config),
        manifest_count: entries.len(),
        accepted: accepted_rows.len(),
        rejected,
        stopwords_sha256: crate::config::hex_digest(&stopword_bytes),
    };
    write_json_atomic(&config.output_path("ingest_summary.json"), &summary)?;
    Ok(summary)
}
