//! Random-walk distributions and the accessibility measurement.

use super::{MetricId, MetricsError, NodeMetricVector};
use crate::network::WordNetwork;

/// Probability of a uniform random walker standing at each node after `h`
/// steps from node `i`: row `i` of `T^h`, where `T_uv = a_uv / k(u)`.
///
/// Computed by exact row propagation, which is the matrix power evaluated one
/// row at a time. Sums to 1 within 1e-12.
pub fn walk_distribution(
    net: &WordNetwork,
    i: usize,
    h: usize,
) -> Result<Vec<f64>, MetricsError> {
    if !(2..=3).contains(&h) {
        return Err(MetricsError::BadWalkLength(h));
    }
    if net.degree(i) == 0 {
        return Err(MetricsError::IsolatedNode(i));
    }
    let n = net.n();
    let mut current = vec![0.0f64; n];
    current[i] = 1.0;
    for _ in 0..h {
        let mut next = vec![0.0f64; n];
        for (u, &p) in current.iter().enumerate() {
            if p == 0.0 {
                continue;
            }
            let k = net.degree(u);
            // Reachable from a non-isolated start, so k >= 1 here.
            let share = p / k as f64;
            for &v in net.neighbors(u) {
                next[v as usize] += share;
            }
        }
        current = next;
    }
    Ok(current)
}

/// Accessibility at scale `h`: the exponential of the Shannon entropy of the
/// h-step walk distribution, i.e. the effective number of nodes reached.
/// Lies in [1, n]; uses the 0·ln 0 = 0 convention.
pub fn accessibility(net: &WordNetwork, h: usize) -> Result<NodeMetricVector, MetricsError> {
    let metric = match h {
        2 => MetricId::AccessibilityH2,
        3 => MetricId::AccessibilityH3,
        _ => return Err(MetricsError::BadWalkLength(h)),
    };
    let mut values = vec![0.0f64; net.n()];
    for (i, value) in values.iter_mut().enumerate() {
        let probs = walk_distribution(net, i, h)?;
        let entropy: f64 = probs
            .iter()
            .filter(|&&p| p > 0.0)
            .map(|&p| -p * p.ln())
            .sum();
        *value = entropy.exp();
    }
    Ok(NodeMetricVector::new(metric, values))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::network::WordNetwork;
    use approx::assert_relative_eq;

    fn cycle(n: usize) -> WordNetwork {
        let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        WordNetwork::from_edges(n, &edges)
    }

    #[test]
    fn two_step_walk_on_a_cycle() {
        // From any node of C_n (n >= 5): back to self with 1/2, distance-2
        // nodes with 1/4 each.
        let net = cycle(6);
        let p = walk_distribution(&net, 0, 2).unwrap();
        assert_relative_eq!(p[0], 0.5);
        assert_relative_eq!(p[2], 0.25);
        assert_relative_eq!(p[4], 0.25);
        assert_eq!(p[1], 0.0);
    }

    #[test]
    fn two_step_walk_on_path3() {
        let net = WordNetwork::from_edges(3, &[(0, 1), (1, 2)]);
        let p = walk_distribution(&net, 0, 2).unwrap();
        assert_relative_eq!(p[0], 0.5);
        assert_relative_eq!(p[2], 0.5);
    }

    #[test]
    fn walk_rows_are_stochastic() {
        let net = cycle(9);
        for h in [2, 3] {
            for i in 0..net.n() {
                let total: f64 = walk_distribution(&net, i, h).unwrap().iter().sum();
                assert!((total - 1.0).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn isolated_node_errors() {
        let net = WordNetwork::from_edges(3, &[(0, 1)]);
        assert!(matches!(
            walk_distribution(&net, 2, 2),
            Err(MetricsError::IsolatedNode(2))
        ));
    }

    #[test]
    fn cycle_accessibility_is_two_root_two() {
        let alpha = accessibility(&cycle(8), 2).unwrap();
        for &a in &alpha.values {
            assert_relative_eq!(a, 2.0 * 2.0f64.sqrt(), epsilon = 1e-9);
        }
    }

    #[test]
    fn concentrated_distribution_gives_accessibility_one() {
        // Two nodes, one edge: after 2 steps the walker is back home.
        let net = WordNetwork::from_edges(2, &[(0, 1)]);
        let alpha = accessibility(&net, 2).unwrap();
        assert_relative_eq!(alpha.values[0], 1.0, epsilon = 1e-12);
    }

    #[test]
    fn complete_graph_accessibility_is_uniform_across_nodes() {
        let net = WordNetwork::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        let alpha = accessibility(&net, 2).unwrap();
        for &a in &alpha.values[1..] {
            assert_relative_eq!(a, alpha.values[0], epsilon = 1e-12);
        }
    }

    #[test]
    fn accessibility_stays_in_bounds() {
        let net = cycle(11);
        for h in [2, 3] {
            let alpha = accessibility(&net, h).unwrap();
            for &a in &alpha.values {
                assert!(a >= 1.0 - 1e-12 && a <= net.n() as f64 + 1e-12);
            }
        }
    }

    #[test]
    fn bad_walk_length_is_rejected() {
        let net = cycle(5);
        assert!(matches!(
            walk_distribution(&net, 0, 4),
            Err(MetricsError::BadWalkLength(4))
        ));
        assert!(accessibility(&net, 1).is_err());
    }
}
