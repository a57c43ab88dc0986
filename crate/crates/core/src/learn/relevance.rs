//! Exhaustive feature-relevance ranking: evaluate every nonempty feature
//! subset, sort subsets by accuracy, and score each feature by how early it
//! keeps appearing among the best subsets (the area under its cumulative
//! appearance curve).

use serde::Serialize;

use super::{cross_validate, ClassifierKind, ClassifierSpec, Dataset, LearnError};
use crate::exec;

const MAX_SWEEP_FEATURES: usize = 16;

#[derive(Debug, Clone)]
pub struct RelevanceConfig {
    pub folds: usize,
    pub seed: u64,
    pub parallel: bool,
}

impl Default for RelevanceConfig {
    fn default() -> Self {
        RelevanceConfig {
            folds: 10,
            seed: 0,
            parallel: true,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct RelevanceRanking {
    pub classifier: ClassifierKind,
    /// Prominence score per feature index.
    pub rho: Vec<f64>,
    /// 1-based rank per feature index (1 = most prominent).
    pub rank: Vec<usize>,
    /// Number of evaluated combinations (2^n_features - 1).
    pub n_combinations: usize,
    /// Subset bitmasks in evaluation order: best first.
    pub sorted_masks: Vec<u16>,
    /// Cross-validated accuracy per sorted subset.
    pub sorted_accuracies: Vec<f64>,
}

fn subset_indices(mask: u16, n_features: usize) -> Vec<usize> {
    (0..n_features).filter(|j| mask & (1 << j) != 0).collect()
}

/// Prominence of every feature from an already-sorted appearance table.
///
/// With `xi[i][j] = 1` when the i-th best subset used feature j, the score is
/// `sum_i sum_{k<i} xi[k][j] + 0.5 * sum_i xi[i][j]`, the exact area under
/// the cumulative appearance curve.
pub fn prominence_from_sorted_masks(masks: &[u16], n_features: usize) -> Vec<f64> {
    let mut rho = vec![0.0f64; n_features];
    let mut prefix = vec![0.0f64; n_features];
    for &mask in masks {
        for j in 0..n_features {
            let xi = f64::from(mask >> j & 1);
            rho[j] += prefix[j] + 0.5 * xi;
            prefix[j] += xi;
        }
    }
    rho
}

/// Exhaustively evaluate all nonempty feature subsets with one classifier and
/// rank features by prominence. Equal-accuracy subsets order by size (small
/// first), then lexicographically by feature indices; equal prominence ranks
/// by feature index. Both rules are arbitrary but fixed, so reruns agree.
pub fn feature_relevance(
    dataset: &Dataset,
    spec: &ClassifierSpec,
    config: &RelevanceConfig,
) -> Result<RelevanceRanking, LearnError> {
    let n_features = dataset.n_features();
    if n_features > MAX_SWEEP_FEATURES {
        return Err(LearnError::TooManyFeatures { n_features });
    }
    let n_combinations = (1usize << n_features) - 1;

    let results = exec::map_indexed(config.parallel, n_combinations, |i| {
        let mask = (i + 1) as u16;
        let subset = subset_indices(mask, n_features);
        cross_validate(dataset, spec, &subset, config.folds, config.seed)
            .map(|report| report.accuracy)
    });

    let mut accuracies = Vec::with_capacity(n_combinations);
    for r in results {
        accuracies.push(r?);
    }

    let mut order: Vec<u16> = (1..=n_combinations as u16).collect();
    order.sort_by(|&a, &b| {
        let acc_a = accuracies[a as usize - 1];
        let acc_b = accuracies[b as usize - 1];
        acc_b
            .partial_cmp(&acc_a)
            .expect("finite accuracies")
            .then_with(|| a.count_ones().cmp(&b.count_ones()))
            .then_with(|| {
                subset_indices(a, n_features).cmp(&subset_indices(b, n_features))
            })
    });
    let sorted_accuracies: Vec<f64> = order.iter().map(|&m| accuracies[m as usize - 1]).collect();

    let rho = prominence_from_sorted_masks(&order, n_features);
    let mut by_rho: Vec<usize> = (0..n_features).collect();
    by_rho.sort_by(|&a, &b| {
        rho[b]
            .partial_cmp(&rho[a])
            .expect("finite prominence")
            .then_with(|| a.cmp(&b))
    });
    let mut rank = vec![0usize; n_features];
    for (position, &feature) in by_rho.iter().enumerate() {
        rank[feature] = position + 1;
    }

    Ok(RelevanceRanking {
        classifier: spec.kind(),
        rho,
        rank,
        n_combinations,
        sorted_masks: order,
        sorted_accuracies,
    })
}
