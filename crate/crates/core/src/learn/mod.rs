//! Supervised classification over feature vectors: kNN, Parzen-window naive
//! Bayes and an information-gain decision tree, plus cross-validation, PCA,
//! Spearman correlation and the exhaustive feature-relevance sweep.

mod bayes;
mod eval;
mod knn;
mod pca;
mod relevance;
mod stats;
mod tree;

pub use bayes::{parzen_density, silverman_bandwidth, ParzenNaiveBayes};
pub use eval::{cross_validate, stratified_folds, EvaluationReport};
pub use knn::KnnClassifier;
pub use pca::{pca_project, PcaProjection};
pub use relevance::{
    feature_relevance, prominence_from_sorted_masks, RelevanceConfig, RelevanceRanking,
};
pub use stats::spearman;
pub use tree::{DecisionTree, TreeNode};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::metrics::FeatureVector;

/// Document class. `Real` sorts and ties first by convention.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Label {
    Real,
    Fake,
}

impl Label {
    pub const ALL: [Label; 2] = [Label::Real, Label::Fake];

    pub fn as_str(self) -> &'static str {
        match self {
            Label::Real => "real",
            Label::Fake => "fake",
        }
    }

    pub fn index(self) -> usize {
        match self {
            Label::Real => 0,
            Label::Fake => 1,
        }
    }
}

#[derive(Debug, Error)]
pub enum LearnError {
    #[error("dataset is empty")]
    EmptyDataset,
    #[error("dataset rows have inconsistent widths")]
    RaggedRows,
    #[error("dataset contains a non-finite feature value (row {row}, column {col})")]
    NonFinite { row: usize, col: usize },
    #[error("training data must contain both classes")]
    SingleClass,
    #[error("a feature vector is missing its class label: {0}")]
    MissingLabel(String),
    #[error("k = {k} exceeds the {n} stored training rows")]
    KTooLarge { k: usize, n: usize },
    #[error("bandwidth must be positive, got {0}")]
    BadBandwidth(f64),
    #[error("need at least 2 samples for a density estimate, got {0}")]
    TooFewSamples(usize),
    #[error("class {label:?} has {rows} rows, fewer than {folds} folds")]
    ClassSmallerThanFolds {
        label: Label,
        rows: usize,
        folds: usize,
    },
    #[error("query has a non-finite value in feature {0}")]
    NonFiniteQuery(usize),
    #[error("cannot project {rows} rows onto {dims} dimensions")]
    TooFewRows { rows: usize, dims: usize },
    #[error("projection dimensions {dims} exceed feature count {features}")]
    TooManyDims { dims: usize, features: usize },
    #[error("rankings must have equal length >= 2 (got {0} and {1})")]
    BadRankings(usize, usize),
    #[error("{n_features} features would mean 2^{n_features} subsets; the exhaustive sweep is capped at 16")]
    TooManyFeatures { n_features: usize },
    #[error("empty feature subset")]
    EmptySubset,
}

/// Feature rows with class labels, all the same width.
#[derive(Debug, Clone)]
pub struct Dataset {
    pub feature_names: Vec<String>,
    pub rows: Vec<Vec<f64>>,
    pub labels: Vec<Label>,
}

impl Dataset {
    pub fn new(
        feature_names: Vec<String>,
        rows: Vec<Vec<f64>>,
        labels: Vec<Label>,
    ) -> Result<Self, LearnError> {
        if rows.is_empty() || rows.len() != labels.len() {
            return Err(LearnError::EmptyDataset);
        }
        let width = feature_names.len();
        for (i, row) in rows.iter().enumerate() {
            if row.len() != width {
                return Err(LearnError::RaggedRows);
            }
            if let Some(col) = row.iter().position(|v| !v.is_finite()) {
                return Err(LearnError::NonFinite { row: i, col });
            }
        }
        Ok(Dataset {
            feature_names,
            rows,
            labels,
        })
    }

    /// Assemble a dataset from extracted feature vectors; every vector must
    /// carry a label.
    pub fn from_feature_vectors(vectors: &[FeatureVector]) -> Result<Self, LearnError> {
        let names = crate::metrics::FEATURE_NAMES
            .iter()
            .map(|s| s.to_string())
            .collect();
        let mut rows = Vec::with_capacity(vectors.len());
        let mut labels = Vec::with_capacity(vectors.len());
        for v in vectors {
            let label = v
                .label
                .ok_or_else(|| LearnError::MissingLabel(v.doc_id.clone()))?;
            rows.push(v.values.to_vec());
            labels.push(label);
        }
        Dataset::new(names, rows, labels)
    }

    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn n_features(&self) -> usize {
        self.feature_names.len()
    }

    pub fn has_both_classes(&self) -> bool {
        self.labels.contains(&Label::Real) && self.labels.contains(&Label::Fake)
    }

    pub fn class_counts(&self) -> [usize; 2] {
        let mut counts = [0usize; 2];
        for l in &self.labels {
            counts[l.index()] += 1;
        }
        counts
    }
}

/// Which classifier to run, with its knobs.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum ClassifierSpec {
    Knn { k: usize },
    NaiveBayes,
    C45 { max_depth: usize, min_leaf: usize },
}

impl ClassifierSpec {
    pub fn kind(&self) -> ClassifierKind {
        match self {
            ClassifierSpec::Knn { .. } => ClassifierKind::Knn,
            ClassifierSpec::NaiveBayes => ClassifierKind::NaiveBayes,
            ClassifierSpec::C45 { .. } => ClassifierKind::C45,
        }
    }

    /// The defaults used throughout: 1-NN, Silverman-bandwidth naive Bayes,
    /// unpruned binary-split tree.
    pub fn defaults() -> [ClassifierSpec; 3] {
        [
            ClassifierSpec::Knn { k: 1 },
            ClassifierSpec::NaiveBayes,
            ClassifierSpec::C45 {
                max_depth: 16,
                min_leaf: 1,
            },
        ]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ClassifierKind {
    Knn,
    NaiveBayes,
    C45,
}

impl ClassifierKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ClassifierKind::Knn => "knn",
            ClassifierKind::NaiveBayes => "nbayes",
            ClassifierKind::C45 => "c45",
        }
    }
}

/// Per-feature z-scoring fitted on training rows only. Zero-variance features
/// are dropped (their z-score is pinned to 0 so they carry no signal).
#[derive(Debug, Clone)]
pub struct Standardizer {
    pub mean: Vec<f64>,
    pub std: Vec<f64>,
    /// Features with positive variance on the training rows.
    pub kept: Vec<bool>,
}

impl Standardizer {
    /// Fit on the given rows (typically one training fold).
    pub fn fit<'a, I>(rows: I, width: usize) -> Self
    where
        I: Iterator<Item = &'a Vec<f64>> + Clone,
    {
        let n = rows.clone().count().max(1) as f64;
        let mut mean = vec![0.0f64; width];
        for row in rows.clone() {
            for (j, v) in row.iter().enumerate() {
                mean[j] += v;
            }
        }
        for m in &mut mean {
            *m /= n;
        }
        let mut var = vec![0.0f64; width];
        for row in rows {
            for (j, v) in row.iter().enumerate() {
                var[j] += (v - mean[j]) * (v - mean[j]);
            }
        }
        let mut std = vec![0.0f64; width];
        let mut kept = vec![false; width];
        for j in 0..width {
            let s = (var[j] / n).sqrt();
            if s > 1e-12 {
                std[j] = s;
                kept[j] = true;
            } else {
                std[j] = 1.0;
            }
        }
        Standardizer { mean, std, kept }
    }

    /// Transform one row with the fitted statistics; dropped features map
    /// to exactly 0.
    pub fn transform(&self, row: &[f64]) -> Vec<f64> {
        row.iter()
            .enumerate()
            .map(|(j, v)| {
                if self.kept[j] {
                    (v - self.mean[j]) / self.std[j]
                } else {
                    0.0
                }
            })
            .collect()
    }

    pub fn dropped_features(&self) -> Vec<usize> {
        self.kept
            .iter()
            .enumerate()
            .filter(|(_, &k)| !k)
            .map(|(j, _)| j)
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn toy_rows() -> (Vec<Vec<f64>>, Vec<Label>) {
        let rows = vec![
            vec![1.0, 5.0, 7.0],
            vec![3.0, 5.0, 9.0],
            vec![5.0, 5.0, 11.0],
        ];
        let labels = vec![Label::Real, Label::Fake, Label::Real];
        (rows, labels)
    }

    #[test]
    fn constant_feature_is_dropped() {
        let (rows, _) = toy_rows();
        let st = Standardizer::fit(rows.iter(), 3);
        assert_eq!(st.dropped_features(), vec![1]);
        let z = st.transform(&rows[0]);
        assert_eq!(z[1], 0.0);
    }

    #[test]
    fn standardized_data_has_zero_mean_unit_std() {
        let (rows, _) = toy_rows();
        let st = Standardizer::fit(rows.iter(), 3);
        let z: Vec<Vec<f64>> = rows.iter().map(|r| st.transform(r)).collect();
        for j in [0usize, 2] {
            let mean: f64 = z.iter().map(|r| r[j]).sum::<f64>() / 3.0;
            let var: f64 = z.iter().map(|r| r[j] * r[j]).sum::<f64>() / 3.0;
            assert!(mean.abs() < 1e-12);
            assert!((var - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn standardizing_twice_changes_nothing() {
        let (rows, _) = toy_rows();
        let st = Standardizer::fit(rows.iter(), 3);
        let z: Vec<Vec<f64>> = rows.iter().map(|r| st.transform(r)).collect();
        let st2 = Standardizer::fit(z.iter(), 3);
        for j in [0usize, 2] {
            assert!(st2.mean[j].abs() < 1e-12);
            assert!((st2.std[j] - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn test_rows_use_training_statistics() {
        let (rows, _) = toy_rows();
        let st = Standardizer::fit(rows.iter(), 3);
        let unseen = vec![7.0, 5.0, 13.0];
        let z = st.transform(&unseen);
        // Recompute by hand from the training stats.
        assert!((z[0] - (7.0 - 3.0) / st.std[0]).abs() < 1e-12);
        assert!((z[2] - (13.0 - 9.0) / st.std[2]).abs() < 1e-12);
    }

    #[test]
    fn non_finite_rows_are_rejected() {
        let err = Dataset::new(
            vec!["a".into()],
            vec![vec![f64::NAN]],
            vec![Label::Real],
        );
        assert!(matches!(err, Err(LearnError::NonFinite { row: 0, col: 0 })));
    }
}
