//! `evaluate`: univariate (one feature at a time) and multivariate (all 13)
//! accuracy tables.

use serde::Serialize;

use gibnet::learn::{cross_validate, ClassifierKind, EvaluationReport};
use gibnet::metrics::{FEATURE_NAMES, N_FEATURES};

use super::load_dataset;
use crate::artifacts::{csv_with_comments, write_atomic, write_json_atomic, Meta};
use crate::config::RunConfig;
use crate::error::CliError;

#[derive(Debug, Serialize)]
pub struct EvaluateOutput {
    pub meta: Meta,
    pub classifiers: Vec<ClassifierKind>,
    /// `univariate[feature][classifier]` accuracy.
    pub univariate: Vec<Vec<f64>>,
    /// One accuracy per classifier with all features.
    pub multivariate: Vec<f64>,
    pub multivariate_reports: Vec<EvaluationReport>,
}

impl EvaluateOutput {
    pub fn best_univariate(&self) -> f64 {
        self.univariate
            .iter()
            .flatten()
            .cloned()
            .fold(f64::NEG_INFINITY, f64::max)
    }

    pub fn best_multivariate(&self) -> f64 {
        self.multivariate
            .iter()
            .cloned()
            .fold(f64::NEG_INFINITY, f64::max)
    }
}

pub fn run(config: &RunConfig) -> Result<EvaluateOutput, CliError> {
    let (dataset, _) = load_dataset(config)?;
    let specs = config.classifier_specs();

    let mut univariate = vec![vec![0.0f64; specs.len()]; N_FEATURES];
    for (feature, row) in univariate.iter_mut().enumerate() {
        for (c, spec) in specs.iter().enumerate() {
            let report = cross_validate(&dataset, spec, &[feature], config.folds, config.seed)?;
            row[c] = report.accuracy;
        }
    }

    let all: Vec<usize> = (0..N_FEATURES).collect();
    let mut multivariate = Vec::with_capacity(specs.len());
    let mut multivariate_reports = Vec::with_capacity(specs.len());
    for spec in &specs {
        let report = cross_validate(&dataset, spec, &all, config.folds, config.seed)?;
        multivariate.push(report.accuracy);
        multivariate_reports.push(report);
    }

    let comments = config.artifact_comments();
    let kinds: Vec<ClassifierKind> = specs.iter().map(|s| s.kind()).collect();
    let names: Vec<&str> = kinds.iter().map(|k| k.as_str()).collect();

    let univariate_csv = csv_with_comments(
        &comments,
        &format!("feature,{}", names.join(",")),
        FEATURE_NAMES.iter().enumerate().map(|(j, feature)| {
            let cells: Vec<String> = univariate[j].iter().map(f64::to_string).collect();
            format!("{feature},{}", cells.join(","))
        }),
    );
    write_atomic(&config.output_path("univariate.csv"), &univariate_csv)?;

    let multivariate_csv = csv_with_comments(
        &comments,
        "classifier,accuracy",
        kinds
            .iter()
            .zip(&multivariate)
            .map(|(kind, acc)| format!("{},{acc}", kind.as_str())),
    );
    write_atomic(&config.output_path("multivariate.csv"), &multivariate_csv)?;

    let output = EvaluateOutput {
        meta: Meta::from_config(config),
        classifiers: kinds,
        univariate,
        multivariate,
        multivariate_reports,
    };
    write_json_atomic(&config.output_path("evaluation.json"), &output)?;
    Ok(output)
}
