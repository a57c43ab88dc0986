//! The pipeline verbs.

pub mod evaluate;
pub mod generate;
pub mod ingest;
pub mod pca;
pub mod relevance;
pub mod report;

use std::fs;
use std::io::BufReader;
use std::path::PathBuf;

use gibnet::corpus::Lexicon;
use gibnet::learn::{Dataset, Label};
use gibnet::metrics::{read_feature_csv, FeatureVector};

use crate::config::RunConfig;
use crate::error::CliError;

pub(crate) fn load_lexicon(config: &RunConfig) -> Result<Lexicon, CliError> {
    let stopwords = config.resolve_existing(&config.lexicon.stopwords, "stopword list")?;
    let exceptions = config.resolve_existing(&config.lexicon.exceptions, "lemma exceptions")?;
    let rules = config.resolve_existing(&config.lexicon.suffix_rules, "suffix rules")?;
    Ok(Lexicon::from_files(&stopwords, &exceptions, &rules)?)
}

#[derive(Debug, Clone)]
pub(crate) struct ManifestEntry {
    pub id: String,
    pub path: PathBuf,
    pub class: Label,
}

/// Read all manifests: one `id<TAB>path<TAB>class` record per line, paths
/// relative to the manifest file. Duplicate ids are a data error.
pub(crate) fn read_manifests(config: &RunConfig) -> Result<Vec<ManifestEntry>, CliError> {
    let mut entries = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for manifest in &config.corpus.manifests {
        let full = config.resolve_existing(manifest, "corpus manifest")?;
        let dir = full.parent().unwrap_or(std::path::Path::new(".")).to_path_buf();
        let text = fs::read_to_string(&full)
            .map_err(|e| CliError::Data(format!("{}: {e}", full.display())))?;
        for (n, line) in text.lines().enumerate() {
            let line = line.trim_end();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line.split('\t').collect();
            if fields.len() != 3 {
                return Err(CliError::Data(format!(
                    "{} line {}: expected id<TAB>path<TAB>class",
                    full.display(),
                    n + 1
                )));
            }
            let class = match fields[2] {
                "real" => Label::Real,
                "fake" => Label::Fake,
                other => {
                    return Err(CliError::Data(format!(
                        "{} line {}: unknown class '{other}'",
                        full.display(),
                        n + 1
                    )))
                }
            };
            if !seen.insert(fields[0].to_string()) {
                return Err(CliError::Data(format!(
                    "duplicate document id '{}' across manifests",
                    fields[0]
                )));
            }
            entries.push(ManifestEntry {
                id: fields[0].to_string(),
                path: dir.join(fields[1]),
                class,
            });
        }
    }
    if entries.is_empty() {
        return Err(CliError::Data("corpus manifests list no documents".into()));
    }
    Ok(entries)
}

pub(crate) fn load_feature_rows(config: &RunConfig) -> Result<Vec<FeatureVector>, CliError> {
    let path = config.output_path("features.csv");
    if !path.exists() {
        return Err(CliError::Config(format!(
            "{} not found; run `gibnet ingest` first",
            path.display()
        )));
    }
    let file = fs::File::open(&path)?;
    let rows = read_feature_csv(BufReader::new(file))?;
    if rows.is_empty() {
        return Err(CliError::Data("feature matrix is empty".into()));
    }
    Ok(rows)
}

pub(crate) fn load_dataset(config: &RunConfig) -> Result<(Dataset, Vec<FeatureVector>), CliError> {
    let rows = load_feature_rows(config)?;
    let dataset = Dataset::from_feature_vectors(&rows)?;
    if !dataset.has_both_classes() {
        return Err(CliError::Data(
            "feature matrix contains a single class; need both real and fake rows".into(),
        ));
    }
    Ok((dataset, rows))
}
