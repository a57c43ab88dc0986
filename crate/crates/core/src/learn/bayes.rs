//! Naive Bayes with Parzen-window (Gaussian kernel) class likelihoods.

use std::f64::consts::PI;

use super::{Label, LearnError};

/// Log of the density floor applied before taking logs: keeps far-out queries
/// finite without disturbing the argmax.
const LOG_DENSITY_FLOOR: f64 = -700.0;

/// Silverman's rule of thumb, computed per feature and class.
pub fn silverman_bandwidth(samples: &[f64]) -> f64 {
    let n = samples.len() as f64;
    let mean = samples.iter().sum::<f64>() / n;
    let var = samples.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / (n - 1.0).max(1.0);
    let h = 1.06 * var.sqrt() * n.powf(-0.2);
    h.max(1e-9)
}

/// Gaussian-kernel density estimate of `samples` at `x`.
pub fn parzen_density(samples: &[f64], x: f64, bandwidth: f64) -> Result<f64, LearnError> {
    if bandwidth <= 0.0 {
        return Err(LearnError::BadBandwidth(bandwidth));
    }
    if samples.len() < 2 {
        return Err(LearnError::TooFewSamples(samples.len()));
    }
    let norm = 1.0 / (samples.len() as f64 * bandwidth * (2.0 * PI).sqrt());
    let total: f64 = samples
        .iter()
        .map(|&s| {
            let z = (x - s) / bandwidth;
            (-0.5 * z * z).exp()
        })
        .sum();
    Ok(norm * total)
}

/// Naive Bayes over independent per-feature Parzen likelihoods:
/// argmax of log prior plus the sum of per-feature log densities.
#[derive(Debug, Clone)]
pub struct ParzenNaiveBayes {
    /// Per class, per subset feature: training samples.
    samples: [Vec<Vec<f64>>; 2],
    /// Per class, per subset feature: Silverman bandwidth.
    bandwidths: [Vec<f64>; 2],
    log_priors: [f64; 2],
    subset: Vec<usize>,
}

impl ParzenNaiveBayes {
    pub fn train(
        rows: &[Vec<f64>],
        labels: &[Label],
        subset: &[usize],
    ) -> Result<Self, LearnError> {
        if rows.is_empty() {
            return Err(LearnError::EmptyDataset);
        }
        if subset.is_empty() {
            return Err(LearnError::EmptySubset);
        }
        let mut samples: [Vec<Vec<f64>>; 2] = [
            vec![Vec::new(); subset.len()],
            vec![Vec::new(); subset.len()],
        ];
        for (row, label) in rows.iter().zip(labels) {
            for (s, &j) in subset.iter().enumerate() {
                samples[label.index()][s].push(row[j]);
            }
        }
        if samples[0][0].len() < 2 || samples[1][0].len() < 2 {
            return Err(LearnError::SingleClass);
        }
        let bandwidths = [
            samples[0].iter().map(|s| silverman_bandwidth(s)).collect(),
            samples[1].iter().map(|s| silverman_bandwidth(s)).collect(),
        ];
        let n = rows.len() as f64;
        let log_priors = [
            (samples[0][0].len() as f64 / n).ln(),
            (samples[1][0].len() as f64 / n).ln(),
        ];
        Ok(ParzenNaiveBayes {
            samples,
            bandwidths,
            log_priors,
            subset: subset.to_vec(),
        })
    }

    /// Override the class priors (weights need not be normalized; only their
    /// ratio matters for the decision).
    pub fn set_prior_weights(&mut self, weights: [f64; 2]) {
        self.log_priors = [weights[0].ln(), weights[1].ln()];
    }

    /// Log prior plus summed log likelihoods for both classes, in class order.
    pub fn log_posteriors(&self, query: &[f64]) -> Result<[f64; 2], LearnError> {
        if let Some(j) = self.subset.iter().find(|&&j| !query[j].is_finite()) {
            return Err(LearnError::NonFiniteQuery(*j));
        }
        let mut scores = [0.0f64; 2];
        for (c, score) in scores.iter_mut().enumerate() {
            let mut total = self.log_priors[c];
            for (s, &j) in self.subset.iter().enumerate() {
                let density =
                    parzen_density(&self.samples[c][s], query[j], self.bandwidths[c][s])?;
                total += density.ln().max(LOG_DENSITY_FLOOR);
            }
            *score = total;
        }
        Ok(scores)
    }

    /// Ties go to Real, the first class in class order.
    pub fn classify(&self, query: &[f64]) -> Result<Label, LearnError> {
        let scores = self.log_posteriors(query)?;
        Ok(if scores[0] >= scores[1] {
            Label::Real
        } else {
            Label::Fake
        })
    }
}
