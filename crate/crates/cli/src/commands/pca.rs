//! `pca`: two-dimensional projection of the feature matrix for plotting.

use serde::Serialize;

use gibnet::learn::{pca_project, Label, PcaProjection, Standardizer};

use super::load_dataset;
use crate::artifacts::{csv_with_comments, write_atomic, write_json_atomic, Meta};
use crate::config::RunConfig;
use crate::error::CliError;

#[derive(Debug, Serialize)]
pub struct PcaOutput {
    pub meta: Meta,
    pub explained: Vec<f64>,
    pub rows: usize,
    #[serde(skip)]
    pub projection: PcaProjection,
    #[serde(skip)]
    pub labels: Vec<Label>,
}

pub fn run(config: &RunConfig) -> Result<PcaOutput, CliError> {
    let (dataset, _) = load_dataset(config)?;
    let standardizer = Standardizer::fit(dataset.rows.iter(), dataset.n_features());
    let z: Vec<Vec<f64>> = dataset.rows.iter().map(|r| standardizer.transform(r)).collect();
    let projection = pca_project(&z, 2)?;

    let mut comments = config.artifact_comments();
    let explained = projection
        .explained
        .iter()
        .map(f64::to_string)
        .collect::<Vec<_>>()
        .join(",");
    comments.push(("explained_variance", explained));

    let csv = csv_with_comments(
        &comments,
        "x,y,class",
        projection
            .coords
            .iter()
            .zip(&dataset.labels)
            .map(|(c, label)| format!("{},{},{}", c[0], c[1], label.as_str())),
    );
    write_atomic(&config.output_path("pca.csv"), &csv)?;

    let output = PcaOutput {
        meta: Meta::from_config(config),
        explained: projection.explained.clone(),
        rows: projection.coords.len(),
        labels: dataset.labels.clone(),
        projection,
    };
    write_json_atomic(&config.output_path("pca_summary.json"), &output)?;
    Ok(output)
}
