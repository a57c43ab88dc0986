//! `relevance`: exhaustive subset sweep per classifier, feature ranks shaped
//! like the rankings table, and the pairwise Spearman matrix.

use serde::Serialize;

use gibnet::learn::{feature_relevance, spearman, ClassifierKind, RelevanceConfig, RelevanceRanking};
use gibnet::metrics::FEATURE_NAMES;

use super::load_dataset;
use crate::artifacts::{csv_with_comments, write_atomic, write_json_atomic, Meta};
use crate::config::RunConfig;
use crate::error::CliError;

#[derive(Debug, Serialize)]
pub struct RelevanceOutput {
    pub meta: Meta,
    pub classifiers: Vec<ClassifierKind>,
    pub rankings: Vec<RelevanceRanking>,
    /// `spearman[a][b]` between the rank vectors of classifiers a and b.
    pub spearman: Vec<Vec<f64>>,
}

pub fn run(config: &RunConfig) -> Result<RelevanceOutput, CliError> {
    let (dataset, _) = load_dataset(config)?;
    let specs = config.classifier_specs();

    let sweep = RelevanceConfig {
        folds: config.folds,
        seed: config.seed,
        parallel: config.parallel,
    };
    let mut rankings = Vec::with_capacity(specs.len());
    for spec in &specs {
        rankings.push(feature_relevance(&dataset, spec, &sweep)?);
    }

    let n = rankings.len();
    let mut matrix = vec![vec![0.0f64; n]; n];
    for a in 0..n {
        for b in 0..n {
            let ra: Vec<f64> = rankings[a].rank.iter().map(|&r| r as f64).collect();
            let rb: Vec<f64> = rankings[b].rank.iter().map(|&r| r as f64).collect();
            matrix[a][b] = spearman(&ra, &rb)?;
        }
    }

    let comments = config.artifact_comments();
    let kinds: Vec<ClassifierKind> = specs.iter().map(|s| s.kind()).collect();
    let names: Vec<&str> = kinds.iter().map(|k| k.as_str()).collect();

    // Rankings table: one row per feature, rank per classifier (1 = best).
    let ranking_csv = csv_with_comments(
        &comments,
        &format!("feature,{}", names.join(",")),
        FEATURE_NAMES.iter().enumerate().map(|(j, feature)| {
            let cells: Vec<String> = rankings.iter().map(|r| r.rank[j].to_string()).collect();
            format!("{feature},{}", cells.join(","))
        }),
    );
    write_atomic(&config.output_path("relevance.csv"), &ranking_csv)?;

    // Prominence scores alongside, same shape.
    let rho_csv = csv_with_comments(
        &comments,
        &format!("feature,{}", names.join(",")),
        FEATURE_NAMES.iter().enumerate().map(|(j, feature)| {
            let cells: Vec<String> = rankings.iter().map(|r| r.rho[j].to_string()).collect();
            format!("{feature},{}", cells.join(","))
        }),
    );
    write_atomic(&config.output_path("relevance_rho.csv"), &rho_csv)?;

    let spearman_csv = csv_with_comments(
        &comments,
        &format!("classifier,{}", names.join(",")),
        names.iter().enumerate().map(|(a, name)| {
            let cells: Vec<String> = matrix[a].iter().map(f64::to_string).collect();
            format!("{name},{}", cells.join(","))
        }),
    );
    write_atomic(&config.output_path("spearman.csv"), &spearman_csv)?;

    let output = RelevanceOutput {
        meta: Meta::from_config(config),
        classifiers: kinds,
        rankings,
        spearman: matrix,
    };
    write_json_atomic(&config.output_path("relevance.json"), &output)?;
    Ok(output)
}
