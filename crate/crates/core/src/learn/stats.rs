//! Rank statistics.

use super::LearnError;

/// Spearman's rank correlation: Pearson correlation of the rank values, with
/// ties resolved by average ranks.
pub fn spearman(a: &[f64], b: &[f64]) -> Result<f64, LearnError> {
    if a.len() != b.len() || a.len() < 2 {
        return Err(LearnError::BadRankings(a.len(), b.len()));
    }
    let ra = average_ranks(a);
    let rb = average_ranks(b);
    Ok(pearson(&ra, &rb))
}

/// 1-based ranks in ascending value order; tied values share the average of
/// the positions they span.
fn average_ranks(values: &[f64]) -> Vec<f64> {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&i, &j| values[i].partial_cmp(&values[j]).expect("finite ranks"));
    let mut ranks = vec![0.0f64; values.len()];
    let mut pos = 0;
    while pos < order.len() {
        let mut end = pos;
        while end + 1 < order.len() && values[order[end + 1]] == values[order[pos]] {
            end += 1;
        }
        let avg = (pos + end) as f64 / 2.0 + 1.0;
        for &idx in &order[pos..=end] {
            ranks[idx] = avg;
        }
        pos = end + 1;
    }
    ranks
}

fn pearson(x: &[f64], y: &[f64]) -> f64 {
    let n = x.len() as f64;
    let mx = x.iter().sum::<f64>() / n;
    let my = y.iter().sum::<f64>() / n;
    let mut cov = 0.0;
    let mut vx = 0.0;
    let mut vy = 0.0;
    for (a, b) in x.iter().zip(y) {
        cov += (a - mx) * (b - my);
        vx += (a - mx) * (a - mx);
        vy += (b - my) * (b - my);
    }
    if vx == 0.0 || vy == 0.0 {
        return 0.0;
    }
    cov / (vx * vy).sqrt()
}
