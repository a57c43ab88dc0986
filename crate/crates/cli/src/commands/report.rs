//! `report`: run every analysis on the existing feature matrix and bundle
//! the headline numbers.

use serde::Serialize;

use crate::artifacts::{write_json_atomic, Meta};
use crate::config::RunConfig;
use crate::error::CliError;

use super::{evaluate, pca, relevance};

#[derive(Debug, Serialize)]
pub struct ReportSummary {
    pub meta: Meta,
    pub best_univariate_accuracy: f64,
    pub best_multivariate_accuracy: f64,
    pub multivariate_by_classifier: Vec<(String, f64)>,
    pub pca_explained: Vec<f64>,
    /// Present only when the config enables the relevance sweep.
    pub relevance_top_features: Option<Vec<(String, Vec<usize>)>>,
    pub artifacts: Vec<String>,
}

pub fn run(config: &RunConfig) -> Result<ReportSummary, CliError> {
    let evaluation = evaluate::run(config)?;
    let pca_output = pca::run(config)?;
    let mut artifacts = vec![
        "univariate.csv".to_string(),
        "multivariate.csv".to_string(),
        "evaluation.json".to_string(),
        "pca.csv".to_string(),
        "pca_summary.json".to_string(),
    ];

    let relevance_top_features = if config.relevance {
        let rel = relevance::run(config)?;
        artifacts.extend([
            "relevance.csv".to_string(),
            "relevance_rho.csv".to_string(),
            "spearman.csv".to_string(),
            "relevance.json".to_string(),
        ]);
        Some(
            rel.rankings
                .iter()
                .map(|r| (r.classifier.as_str().to_string(), r.rank.clone()))
                .collect(),
        )
    } else {
        None
    };

    let summary = ReportSummary {
        meta: Meta::from_config(config),
        best_univariate_accuracy: evaluation.best_univariate(),
        best_multivariate_accuracy: evaluation.best_multivariate(),
        multivariate_by_classifier: evaluation
            .classifiers
            .iter()
            .zip(&evaluation.multivariate)
            .map(|(k, a)| (k.as_str().to_string(), *a))
            .collect(),
        pca_explained: pca_output.explained.clone(),
        relevance_top_features,
        artifacts,
    };
    write_json_atomic(&config.output_path("report.json"), &summary)?;
    Ok(summary)
}
