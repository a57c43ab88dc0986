//! Shortest-path measurements: per-node mean distance and betweenness.

use std::collections::VecDeque;

use super::{MetricId, NodeMetricVector};
use crate::network::WordNetwork;

/// Side information from the all-pairs BFS sweep.
#[derive(Debug, Clone, Copy, Default)]
pub struct PathDiagnostics {
    /// Ordered (i, j) pairs with no connecting path, excluded from means.
    pub unreachable_pairs: usize,
}

/// BFS distances from `source`; -1 marks unreachable nodes.
fn bfs_distances(net: &WordNetwork, source: usize) -> Vec<i64> {
    let mut dist = vec![-1i64; net.n()];
    dist[source] = 0;
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        for &v in net.neighbors(u) {
            let v = v as usize;
            if dist[v] < 0 {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    dist
}

/// Mean shortest-path distance from each node to every other node it can
/// reach. Nodes alone in their component are flagged undefined; unreachable
/// pairs are excluded from the means and counted in the diagnostics.
pub fn shortest_path_lengths(net: &WordNetwork) -> (NodeMetricVector, PathDiagnostics) {
    let n = net.n();
    let mut out = NodeMetricVector::new(MetricId::AvgShortestPath, vec![0.0; n]);
    let mut diag = PathDiagnostics::default();
    for i in 0..n {
        let dist = bfs_distances(net, i);
        let mut total = 0i64;
        let mut reached = 0usize;
        for (j, &d) in dist.iter().enumerate() {
            if j == i {
                continue;
            }
            if d < 0 {
                diag.unreachable_pairs += 1;
            } else {
                total += d;
                reached += 1;
            }
        }
        if reached == 0 {
            out.defined[i] = false;
        } else {
            out.values[i] = total as f64 / reached as f64;
        }
    }
    (out, diag)
}

/// Betweenness centrality by Brandes' accumulation, counting ordered pairs
/// with endpoints excluded. Pairs in different components contribute nothing.
pub fn betweenness(net: &WordNetwork) -> NodeMetricVector {
    let n = net.n();
    let mut centrality = vec![0.0f64; n];

    for s in 0..n {
        let mut stack: Vec<usize> = Vec::with_capacity(n);
        let mut preds: Vec<Vec<usize>> = vec![Vec::new(); n];
        let mut sigma = vec![0.0f64; n];
        let mut dist = vec![-1i64; n];
        sigma[s] = 1.0;
        dist[s] = 0;

        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            stack.push(v);
            for &w in net.neighbors(v) {
                let w = w as usize;
                if dist[w] < 0 {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
                if dist[w] == dist[v] + 1 {
                    sigma[w] += sigma[v];
                    preds[w].push(v);
                }
            }
        }

        let mut delta = vec![0.0f64; n];
        while let Some(w) = stack.pop() {
            for &v in &preds[w] {
                delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
            }
            if w != s {
                centrality[w] += delta[w];
            }
        }
    }

    // Each unordered source pair was visited from both endpoints, which is
    // exactly the ordered-pair count the definition asks for.
    NodeMetricVector::new(MetricId::Betweenness, centrality)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::network::WordNetwork;
    use approx::assert_relative_eq;

    #[test]
    fn path3_distances() {
        let net = WordNetwork::from_edges(3, &[(0, 1), (1, 2)]);
        let (l, diag) = shortest_path_lengths(&net);
        assert_relative_eq!(l.values[0], 1.5);
        assert_relative_eq!(l.values[1], 1.0);
        assert_eq!(diag.unreachable_pairs, 0);
    }

    #[test]
    fn complete_graph_distances_are_all_one() {
        let net = WordNetwork::from_edges(5, &[
            (0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4),
        ]);
        let (l, _) = shortest_path_lengths(&net);
        for &v in &l.values {
            assert_relative_eq!(v, 1.0);
        }
    }

    #[test]
    fn singleton_component_is_flagged_and_counted() {
        let net = WordNetwork::from_edges(3, &[(0, 1)]);
        let (l, diag) = shortest_path_lengths(&net);
        assert!(!l.defined[2]);
        // (0,2), (1,2), (2,0), (2,1) are unreachable ordered pairs.
        assert_eq!(diag.unreachable_pairs, 4);
    }

    #[test]
    fn path3_betweenness_is_0_2_0() {
        let net = WordNetwork::from_edges(3, &[(0, 1), (1, 2)]);
        let b = betweenness(&net);
        assert_eq!(b.values, vec![0.0, 2.0, 0.0]);
    }

    #[test]
    fn star_hub_routes_all_ordered_leaf_pairs() {
        let net = WordNetwork::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]);
        let b = betweenness(&net);
        assert_eq!(b.values[0], 12.0); // 4 * 3 ordered leaf pairs
        for leaf in 1..=4 {
            assert_eq!(b.values[leaf], 0.0);
        }
    }

    #[test]
    fn degree_one_nodes_have_zero_betweenness() {
        let net = WordNetwork::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (2, 5)]);
        let b = betweenness(&net);
        for i in 0..net.n() {
            if net.degree(i) == 1 {
                assert_eq!(b.values[i], 0.0, "node {i}");
            }
        }
    }

    #[test]
    fn split_shortest_paths_share_credit() {
        // Square 0-1-2-3-0: two equal paths between opposite corners, so each
        // middle node carries half of each of the 2 ordered pairs.
        let net = WordNetwork::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        let b = betweenness(&net);
        for &v in &b.values {
            assert_relative_eq!(v, 1.0);
        }
    }
}
