//! Telling real prose from machine-generated gibberish through the topology
//! of word adjacency networks.
//!
//! The pipeline: documents are stripped of markup, tokenized, stopword-filtered
//! and lemmatized ([`corpus`]); the lemma stream becomes an undirected network
//! with one node per distinct lemma and an edge between words that ever appear
//! adjacent ([`network`]); six node-level measurements are summarized and
//! normalized against shuffled-text baselines into a 13-dimensional feature
//! vector ([`metrics`]); and three classifiers plus an exhaustive
//! feature-relevance sweep operate on the resulting dataset ([`learn`]).
//!
//! Heavy loops (shuffle baselines, per-document extraction, subset sweeps) run
//! on rayon when the `parallel` feature is enabled (the default) and the
//! caller asks for it; results are merged in index order so outputs are
//! byte-identical regardless of thread count.

pub mod corpus;
pub mod learn;
pub mod metrics;
pub mod network;

mod exec;
mod seed;

pub use corpus::{
    strip_latex, tokenize, GibberishGrammar, Lexicon, RawDocument, StrippedText, TokenStream,
};
pub use learn::{ClassifierKind, ClassifierSpec, Dataset, EvaluationReport, Label};
pub use metrics::{ExtractOptions, FeatureVector, FEATURE_NAMES, N_FEATURES};
pub use network::WordNetwork;
pub use seed::doc_seed;
