//! k-nearest-neighbor voting in standardized feature space.

use super::{Label, LearnError};

/// Stores standardized training rows and votes among the k nearest by
/// Euclidean distance over a chosen feature subset.
#[derive(Debug, Clone)]
pub struct KnnClassifier {
    rows: Vec<Vec<f64>>,
    labels: Vec<Label>,
    subset: Vec<usize>,
    k: usize,
}

impl KnnClassifier {
    pub fn train(
        rows: Vec<Vec<f64>>,
        labels: Vec<Label>,
        subset: &[usize],
        k: usize,
    ) -> Result<Self, LearnError> {
        if rows.is_empty() {
            return Err(LearnError::EmptyDataset);
        }
        if k == 0 || k > rows.len() {
            return Err(LearnError::KTooLarge { k, n: rows.len() });
        }
        if subset.is_empty() {
            return Err(LearnError::EmptySubset);
        }
        Ok(KnnClassifier {
            rows,
            labels,
            subset: subset.to_vec(),
            k,
        })
    }

    fn distance_sq(&self, a: &[f64], b: &[f64]) -> f64 {
        self.subset
            .iter()
            .map(|&j| {
                let d = a[j] - b[j];
                d * d
            })
            .sum()
    }

    /// Majority class among the k nearest neighbors. Equal distances at the
    /// selection boundary resolve by training index; vote ties resolve by
    /// the smaller summed distance, then by class order (Real first).
    pub fn classify(&self, query: &[f64]) -> Result<Label, LearnError> {
        if let Some(j) = self.subset.iter().find(|&&j| !query[j].is_finite()) {
            return Err(LearnError::NonFiniteQuery(*j));
        }
        let mut scored: Vec<(f64, usize)> = self
            .rows
            .iter()
            .enumerate()
            .map(|(i, row)| (self.distance_sq(query, row), i))
            .collect();
        scored.sort_by(|a, b| a.partial_cmp(b).expect("finite distances"));

        let mut votes = [0usize; 2];
        let mut dist_sum = [0.0f64; 2];
        for &(d, i) in scored.iter().take(self.k) {
            let c = self.labels[i].index();
            votes[c] += 1;
            dist_sum[c] += d.sqrt();
        }
        Ok(if votes[0] > votes[1] {
            Label::Real
        } else if votes[1] > votes[0] {
            Label::Fake
        } else if dist_sum[0] <= dist_sum[1] {
            Label::Real
        } else {
            Label::Fake
        })
    }
}
