//! The six node-level network measurements and their summary statistics.
//!
//! Per-node values live in [`NodeMetricVector`]; nodes where a measurement is
//! undefined (isolated nodes, singleton components, zero degree variance) are
//! flagged rather than silently zeroed, and summaries run over defined values
//! only.

mod features;
mod paths;
mod walks;

pub use features::{
    extract_corpus, extract_features, read_feature_csv, write_feature_csv, DetailedFeatures,
    ExtractError, ExtractOptions, FeatureCsvError, FeatureVector, FEATURE_NAMES, N_FEATURES,
};
pub use paths::{betweenness, shortest_path_lengths, PathDiagnostics};
pub use walks::{accessibility, walk_distribution};

use serde::Serialize;
use thiserror::Error;

use crate::network::WordNetwork;

#[derive(Debug, Clone, Error)]
pub enum MetricsError {
    #[error("node {0} is isolated; walk probabilities are undefined")]
    IsolatedNode(usize),
    #[error("walk length must be 2 or 3, got {0}")]
    BadWalkLength(usize),
    #[error("need at least 2 defined values to summarize, got {0}")]
    TooFewValues(usize),
}

/// Which measurement a [`NodeMetricVector`] holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum MetricId {
    AvgNeighborDegree,
    ClusteringLocal,
    AccessibilityH2,
    AccessibilityH3,
    AvgShortestPath,
    Betweenness,
}

/// One real value per node, with a per-node defined flag.
#[derive(Debug, Clone)]
pub struct NodeMetricVector {
    pub metric: MetricId,
    pub values: Vec<f64>,
    pub defined: Vec<bool>,
}

impl NodeMetricVector {
    pub(crate) fn new(metric: MetricId, values: Vec<f64>) -> Self {
        let defined = vec![true; values.len()];
        NodeMetricVector {
            metric,
            values,
            defined,
        }
    }

    pub fn defined_values(&self) -> impl Iterator<Item = f64> + '_ {
        self.values
            .iter()
            .zip(&self.defined)
            .filter(|(_, &d)| d)
            .map(|(&v, _)| v)
    }
}

/// Mean degree of each node's neighbors. Isolated nodes get a flagged 0.
pub fn avg_neighbor_degree(net: &WordNetwork) -> NodeMetricVector {
    let mut out = NodeMetricVector::new(MetricId::AvgNeighborDegree, vec![0.0; net.n()]);
    for i in 0..net.n() {
        let k = net.degree(i);
        if k == 0 {
            out.defined[i] = false;
            continue;
        }
        let total: usize = net.neighbors(i).iter().map(|&j| net.degree(j as usize)).sum();
        out.values[i] = total as f64 / k as f64;
    }
    out
}

/// Local clustering coefficient: the fraction of a node's neighbor pairs that
/// are themselves linked. Defined as 0 for degree < 2.
pub fn clustering_local(net: &WordNetwork) -> NodeMetricVector {
    let mut out = NodeMetricVector::new(MetricId::ClusteringLocal, vec![0.0; net.n()]);
    for i in 0..net.n() {
        let nbrs = net.neighbors(i);
        let k = nbrs.len();
        if k < 2 {
            continue;
        }
        let mut links = 0usize;
        for (a_pos, &a) in nbrs.iter().enumerate() {
            for &b in &nbrs[a_pos + 1..] {
                if net.has_edge(a as usize, b as usize) {
                    links += 1;
                }
            }
        }
        out.values[i] = links as f64 / (k * (k - 1) / 2) as f64;
    }
    out
}

/// Global (transitivity-style) clustering: 3 * triangles / connected triples.
/// Zero when the network has no connected triples.
pub fn clustering_global(net: &WordNetwork) -> f64 {
    let mut triangles = 0usize;
    for i in 0..net.n() {
        let nbrs = net.neighbors(i);
        for (a_pos, &a) in nbrs.iter().enumerate() {
            if (a as usize) < i {
                continue;
            }
            for &b in &nbrs[a_pos + 1..] {
                if (b as usize) > a as usize && net.has_edge(a as usize, b as usize) {
                    triangles += 1;
                }
            }
        }
    }
    let triples: usize = (0..net.n())
        .map(|i| {
            let k = net.degree(i);
            k * k.saturating_sub(1) / 2
        })
        .sum();
    if triples == 0 {
        0.0
    } else {
        3.0 * triangles as f64 / triples as f64
    }
}

/// Degree assortativity over edges; `None` when the endpoint degrees have no
/// variance (regular graphs), which callers should treat as a flagged
/// neutral value.
pub fn assortativity(net: &WordNetwork) -> Option<f64> {
    let m = net.m_edges();
    if m < 2 {
        return None;
    }
    let m_inv = 1.0 / m as f64;
    let (mut sum_prod, mut sum_half, mut sum_sq_half) = (0.0f64, 0.0f64, 0.0f64);
    for (a, b) in net.edges() {
        let ka = net.degree(a) as f64;
        let kb = net.degree(b) as f64;
        sum_prod += ka * kb;
        sum_half += (ka + kb) / 2.0;
        sum_sq_half += (ka * ka + kb * kb) / 2.0;
    }
    let mean = m_inv * sum_half;
    let numerator = m_inv * sum_prod - mean * mean;
    let denominator = m_inv * sum_sq_half - mean * mean;
    if denominator.abs() <= 1e-12 * (1.0 + mean * mean) {
        return None;
    }
    Some(numerator / denominator)
}

/// Arithmetic mean and population standard deviation of the defined values.
pub fn summarize(metric: &NodeMetricVector) -> Result<(f64, f64), MetricsError> {
    let values: Vec<f64> = metric.defined_values().collect();
    if values.len() < 2 {
        return Err(MetricsError::TooFewValues(values.len()));
    }
    Ok(mean_and_population_dev(&values))
}

pub(crate) fn mean_and_population_dev(values: &[f64]) -> (f64, f64) {
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    let var = values.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / n;
    (mean, var.sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use crate::network::WordNetwork;

    fn star(leaves: usize) -> WordNetwork {
        let edges: Vec<(usize, usize)> = (1..=leaves).map(|l| (0, l)).collect();
        WordNetwork::from_edges(leaves + 1, &edges)
    }

    fn triangle() -> WordNetwork {
        WordNetwork::from_edges(3, &[(0, 1), (1, 2), (2, 0)])
    }

    fn path3() -> WordNetwork {
        WordNetwork::from_edges(3, &[(0, 1), (1, 2)])
    }

    #[test]
    fn neighbor_degree_on_star() {
        let net = star(3);
        let kn = avg_neighbor_degree(&net);
        assert_eq!(kn.values[0], 1.0); // hub sees three degree-1 leaves
        for leaf in 1..=3 {
            assert_eq!(kn.values[leaf], 3.0);
        }
    }

    #[test]
    fn neighbor_degree_on_triangle_and_path() {
        assert!(avg_neighbor_degree(&triangle()).values.iter().all(|&v| v == 2.0));
        let kn = avg_neighbor_degree(&path3());
        assert_eq!(kn.values, vec![2.0, 1.0, 2.0]);
    }

    #[test]
    fn isolated_node_is_flagged() {
        let net = WordNetwork::from_edges(3, &[(0, 1)]);
        let kn = avg_neighbor_degree(&net);
        assert!(!kn.defined[2]);
        assert_eq!(kn.values[2], 0.0);
    }

    #[test]
    fn clustering_on_triangle_and_star() {
        assert_eq!(clustering_global(&triangle()), 1.0);
        assert!(clustering_local(&triangle()).values.iter().all(|&v| v == 1.0));
        assert_eq!(clustering_global(&star(3)), 0.0);
    }

    #[test]
    fn clustering_on_chorded_square() {
        // 4-cycle a-b-c-d-a plus chord a-c: 2 triangles, 8 connected triples.
        let net = WordNetwork::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]);
        assert_relative_eq!(clustering_global(&net), 0.75);
    }

    #[test]
    fn star_is_perfectly_disassortative() {
        for leaves in [2, 4, 7] {
            let r = assortativity(&star(leaves)).unwrap();
            assert_relative_eq!(r, -1.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn regular_graph_assortativity_is_flagged_undefined() {
        // A 4-cycle is 2-regular: zero degree variance across endpoints.
        let net = WordNetwork::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        assert!(assortativity(&net).is_none());
    }

    #[test]
    fn summarize_mean_and_population_deviation() {
        let v = NodeMetricVector::new(MetricId::Betweenness, vec![2.0, 2.0, 2.0]);
        assert_eq!(summarize(&v).unwrap(), (2.0, 0.0));
        let v = NodeMetricVector::new(MetricId::Betweenness, vec![1.0, 3.0]);
        assert_eq!(summarize(&v).unwrap(), (2.0, 1.0));
    }

    #[test]
    fn summarize_needs_two_defined_values() {
        let mut v = NodeMetricVector::new(MetricId::Betweenness, vec![1.0, 3.0]);
        v.defined[1] = false;
        assert!(matches!(summarize(&v), Err(MetricsError::TooFewValues(1))));
    }
}
