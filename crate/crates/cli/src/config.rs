//! Run configuration: one TOML file drives the whole pipeline.
//!
//! All paths in the file are resolved relative to the file's own directory,
//! so a run directory can be moved or archived wholesale.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use gibnet::learn::ClassifierSpec;

use crate::error::CliError;

/// A config template with every field spelled out at its default value.
pub const TEMPLATE: &str = r#"# gibnet run configuration. Paths are relative to this file.

# Master seed: recorded in every artifact; reruns with the same seed and
# config produce byte-identical outputs.
seed = 42
# Shuffled baselines per document for feature normalization.
n_shuffles = 20
# Cross-validation folds.
folds = 10
# Reject documents whose network has fewer nodes than this.
min_nodes = 10
# Where artifacts are written.
output_dir = "out"
# Run per-document extraction and subset sweeps on all cores.
parallel = true
# Include the exhaustive feature-relevance sweep in `report`.
relevance = false
# Classifiers to evaluate: any of "knn", "nbayes", "c45".
classifiers = ["knn", "nbayes", "c45"]

[corpus]
# Manifest files, typically one per class. Each line: id<TAB>path<TAB>class
# with class "real" or "fake"; paths relative to the manifest.
manifests = ["corpus/real/manifest.tsv", "out/fake/manifest.tsv"]

[lexicon]
stopwords = "lexicon/stopwords.txt"
exceptions = "lexicon/lemma_exceptions.tsv"
suffix_rules = "lexicon/suffix_rules.tsv"

[knn]
k = 1

[c45]
max_depth = 16
min_leaf = 1

[generate]
grammar = "grammar/scigen_like.grammar"
count = 60
target_words = 1200
out_dir = "out/fake"
"#;

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub seed: u64,
    #[serde(default = "default_n_shuffles")]
    pub n_shuffles: usize,
    #[serde(default = "default_folds")]
    pub folds: usize,
    #[serde(default = "default_min_nodes")]
    pub min_nodes: usize,
    pub output_dir: PathBuf,
    #[serde(default = "default_true")]
    pub parallel: bool,
    #[serde(default)]
    pub relevance: bool,
    #[serde(default = "default_classifiers")]
    pub classifiers: Vec<String>,
    pub corpus: CorpusConfig,
    pub lexicon: LexiconConfig,
    #[serde(default)]
    pub knn: KnnConfig,
    #[serde(default)]
    pub c45: C45Config,
    #[serde(default)]
    pub generate: Option<GenerateConfig>,

    /// Directory of the config file; set on load, not part of the file.
    #[serde(skip)]
    pub base_dir: PathBuf,
    /// SHA-256 of the config file bytes; set on load.
    #[serde(skip)]
    pub config_sha256: String,
}

fn default_n_shuffles() -> usize {
    20
}
fn default_folds() -> usize {
    10
}
fn default_min_nodes() -> usize {
    10
}
fn default_true() -> bool {
    true
}
fn default_classifiers() -> Vec<String> {
    vec!["knn".into(), "nbayes".into(), "c45".into()]
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CorpusConfig {
    pub manifests: Vec<PathBuf>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LexiconConfig {
    pub stopwords: PathBuf,
    pub exceptions: PathBuf,
    pub suffix_rules: PathBuf,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct KnnConfig {
    pub k: usize,
}

impl Default for KnnConfig {
    fn default() -> Self {
        KnnConfig { k: 1 }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct C45Config {
    pub max_depth: usize,
    pub min_leaf: usize,
}

impl Default for C45Config {
    fn default() -> Self {
        C45Config {
            max_depth: 16,
            min_leaf: 1,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GenerateConfig {
    pub grammar: PathBuf,
    pub count: usize,
    pub target_words: usize,
    pub out_dir: PathBuf,
}

impl RunConfig {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let bytes = fs::read(path)
            .map_err(|e| CliError::Config(format!("cannot read {}: {e}", path.display())))?;
        let text = String::from_utf8(bytes.clone())
            .map_err(|_| CliError::Config(format!("{} is not UTF-8", path.display())))?;
        let mut config: RunConfig = toml::from_str(&text)
            .map_err(|e| CliError::Config(format!("{}: {e}", path.display())))?;
        config.base_dir = path
            .parent()
            .map(Path::to_path_buf)
            .unwrap_or_else(|| PathBuf::from("."));
        config.config_sha256 = hex_digest(&bytes);
        config.validate()?;
        Ok(config)
    }

    fn validate(&self) -> Result<(), CliError> {
        if self.n_shuffles == 0 {
            return Err(CliError::Config("n_shuffles must be at least 1".into()));
        }
        if self.folds < 2 {
            return Err(CliError::Config("folds must be at least 2".into()));
        }
        if self.classifiers.is_empty() {
            return Err(CliError::Config("classifiers must not be empty".into()));
        }
        for name in &self.classifiers {
            if !matches!(name.as_str(), "knn" | "nbayes" | "c45") {
                return Err(CliError::Config(format!("unknown classifier '{name}'")));
            }
        }
        Ok(())
    }

    /// Resolve a config-relative path.
    pub fn resolve(&self, path: &Path) -> PathBuf {
        if path.is_absolute() {
            path.to_path_buf()
        } else {
            self.base_dir.join(path)
        }
    }

    /// Resolve and require existence; missing inputs are config errors.
    pub fn resolve_existing(&self, path: &Path, what: &str) -> Result<PathBuf, CliError> {
        let full = self.resolve(path);
        if !full.exists() {
            return Err(CliError::Config(format!(
                "{what} path does not exist: {}",
                full.display()
            )));
        }
        Ok(full)
    }

    pub fn classifier_specs(&self) -> Vec<ClassifierSpec> {
        self.classifiers
            .iter()
            .map(|name| match name.as_str() {
                "knn" => ClassifierSpec::Knn { k: self.knn.k },
                "nbayes" => ClassifierSpec::NaiveBayes,
                _ => ClassifierSpec::C45 {
                    max_depth: self.c45.max_depth,
                    min_leaf: self.c45.min_leaf,
                },
            })
            .collect()
    }

    pub fn output_path(&self, name: &str) -> PathBuf {
        self.resolve(&self.output_dir).join(name)
    }

    /// The comment header embedded in every CSV artifact.
    pub fn artifact_comments(&self) -> Vec<(&'static str, String)> {
        vec![
            ("tool", format!("gibnet {}", env!("CARGO_PKG_VERSION"))),
            ("seed", self.seed.to_string()),
            ("config_sha256", self.config_sha256.clone()),
        ]
    }
}

pub fn hex_digest(bytes: &[u8]) -> String {
    let mut hasher = Sha256::new();
    hasher.update(bytes);
    let digest = hasher.finalize();
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

/// Write the default template, refusing to overwrite.
pub fn write_template(path: &Path) -> Result<(), CliError> {
    if path.exists() {
        return Err(CliError::Config(format!(
            "{} already exists; not overwriting",
            path.display()
        )));
    }
    fs::write(path, TEMPLATE)?;
    Ok(())
}
