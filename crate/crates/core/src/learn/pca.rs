//! Principal component analysis via a cyclic Jacobi eigensolver on the
//! feature covariance matrix. Feature counts here are tiny (13), so the
//! dense from-scratch route is both exact enough and dependency-free.

use serde::Serialize;

use super::LearnError;

#[derive(Debug, Clone, Serialize)]
pub struct PcaProjection {
    /// One projected coordinate row per input row.
    pub coords: Vec<Vec<f64>>,
    /// Fraction of total variance carried by each kept component,
    /// non-increasing.
    pub explained: Vec<f64>,
    /// All eigenvalues of the covariance matrix, descending.
    pub eigenvalues: Vec<f64>,
}

/// Eigendecomposition of a symmetric matrix by cyclic Jacobi rotations.
/// Returns (eigenvalues, eigenvectors as columns of `v`).
#[allow(clippy::needless_range_loop)] // rotations touch two rows/columns at once
fn jacobi_eigen(mut a: Vec<Vec<f64>>) -> (Vec<f64>, Vec<Vec<f64>>) {
    let n = a.len();
    let mut v = vec![vec![0.0f64; n]; n];
    for (i, row) in v.iter_mut().enumerate() {
        row[i] = 1.0;
    }
    for _sweep in 0..100 {
        let mut off = 0.0f64;
        for p in 0..n {
            for q in (p + 1)..n {
                off += a[p][q] * a[p][q];
            }
        }
        if off.sqrt() < 1e-14 {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                if a[p][q].abs() < 1e-300 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k][p];
                    let akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p][k];
                    let aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                for vk in v.iter_mut() {
                    let vp = vk[p];
                    let vq = vk[q];
                    vk[p] = c * vp - s * vq;
                    vk[q] = s * vp + c * vq;
                }
            }
        }
    }
    let eigenvalues: Vec<f64> = (0..n).map(|i| a[i][i]).collect();
    (eigenvalues, v)
}

/// Project rows onto the top `dims` principal axes of their covariance.
///
/// Columns are centered internally; callers usually standardize first.
/// Component signs are fixed (largest-magnitude loading positive) so the
/// projection does not depend on rotation details or row order.
pub fn pca_project(rows: &[Vec<f64>], dims: usize) -> Result<PcaProjection, LearnError> {
    let n = rows.len();
    let width = rows.first().map_or(0, |r| r.len());
    if dims > width {
        return Err(LearnError::TooManyDims {
            dims,
            features: width,
        });
    }
    if n < dims || n < 2 {
        return Err(LearnError::TooFewRows { rows: n, dims });
    }

    let mut mean = vec![0.0f64; width];
    for row in rows {
        for (j, v) in row.iter().enumerate() {
            mean[j] += v;
        }
    }
    for m in &mut mean {
        *m /= n as f64;
    }
    let centered: Vec<Vec<f64>> = rows
        .iter()
        .map(|r| r.iter().zip(&mean).map(|(v, m)| v - m).collect())
        .collect();

    let mut cov = vec![vec![0.0f64; width]; width];
    let denom = (n - 1) as f64;
    #[allow(clippy::needless_range_loop)] // upper triangle mirrored in place
    for j in 0..width {
        for k in j..width {
            let mut dot = 0.0;
            for row in &centered {
                dot += row[j] * row[k];
            }
            cov[j][k] = dot / denom;
            cov[k][j] = cov[j][k];
        }
    }

    let (raw_eigenvalues, vectors) = jacobi_eigen(cov);
    let mut order: Vec<usize> = (0..width).collect();
    order.sort_by(|&a, &b| raw_eigenvalues[b].partial_cmp(&raw_eigenvalues[a]).unwrap());

    let eigenvalues: Vec<f64> = order
        .iter()
        .map(|&i| raw_eigenvalues[i].max(0.0))
        .collect();
    let total: f64 = eigenvalues.iter().sum();

    // Kept axes with deterministic sign.
    let mut axes: Vec<Vec<f64>> = Vec::with_capacity(dims);
    for &col in order.iter().take(dims) {
        let mut axis: Vec<f64> = (0..width).map(|i| vectors[i][col]).collect();
        let lead = axis
            .iter()
            .cloned()
            .max_by(|a, b| a.abs().partial_cmp(&b.abs()).unwrap())
            .unwrap_or(1.0);
        if lead < 0.0 {
            for x in &mut axis {
                *x = -*x;
            }
        }
        axes.push(axis);
    }

    let coords = centered
        .iter()
        .map(|row| {
            axes.iter()
                .map(|axis| row.iter().zip(axis).map(|(r, a)| r * a).sum())
                .collect()
        })
        .collect();

    let explained = eigenvalues
        .iter()
        .take(dims)
        .map(|&l| if total > 0.0 { l / total } else { 0.0 })
        .collect();

    Ok(PcaProjection {
        coords,
        explained,
        eigenvalues,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn jacobi_solves_a_known_two_by_two() {
        // [[2,1],[1,2]] has eigenvalues 3 and 1.
        let (mut vals, _) = jacobi_eigen(vec![vec![2.0, 1.0], vec![1.0, 2.0]]);
        vals.sort_by(|a, b| b.partial_cmp(a).unwrap());
        assert_relative_eq!(vals[0], 3.0, epsilon = 1e-12);
        assert_relative_eq!(vals[1], 1.0, epsilon = 1e-12);
    }

    fn random_rows(n: usize, width: usize, seed: u64) -> Vec<Vec<f64>> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..n)
            .map(|_| (0..width).map(|_| rng.gen_range(-2.0..2.0)).collect())
            .collect()
    }

    #[test]
    fn collinear_data_is_explained_by_one_component() {
        let direction: Vec<f64> = (0..13).map(|j| 0.3 + 0.1 * j as f64).collect();
        let rows: Vec<Vec<f64>> = (0..40)
            .map(|i| {
                let t = (i as f64 - 20.0) * 0.17;
                direction.iter().map(|d| t * d).collect()
            })
            .collect();
        let p = pca_project(&rows, 2).unwrap();
        assert_relative_eq!(p.explained[0], 1.0, epsilon = 1e-9);
        assert!(p.explained[1].abs() < 1e-9);
    }

    #[test]
    fn explained_fractions_are_nonincreasing_and_bounded() {
        let rows = random_rows(50, 6, 3);
        let p = pca_project(&rows, 4).unwrap();
        let total: f64 = p.explained.iter().sum();
        assert!(total <= 1.0 + 1e-12);
        for pair in p.explained.windows(2) {
            assert!(pair[0] >= pair[1] - 1e-12);
        }
    }

    #[test]
    fn projection_ignores_row_order() {
        let rows = random_rows(30, 5, 8);
        let p1 = pca_project(&rows, 2).unwrap();
        let mut reversed = rows.clone();
        reversed.reverse();
        let p2 = pca_project(&reversed, 2).unwrap();
        for (a, b) in p1.coords.iter().zip(p2.coords.iter().rev()) {
            for (x, y) in a.iter().zip(b) {
                assert_relative_eq!(*x, *y, epsilon = 1e-9);
            }
        }
    }

    #[test]
    fn reconstruction_error_equals_residual_eigenvalue_mass() {
        // Total variance minus the top-2 eigenvalues must equal the variance
        // of the residual after projecting onto the top-2 axes.
        let rows = random_rows(60, 7, 5);
        let p = pca_project(&rows, 2).unwrap();
        let n = rows.len() as f64;
        let mut mean = vec![0.0f64; 7];
        for row in &rows {
            for (j, v) in row.iter().enumerate() {
                mean[j] += v / n;
            }
        }
        let total_var: f64 = rows
            .iter()
            .map(|r| {
                r.iter()
                    .zip(&mean)
                    .map(|(v, m)| (v - m) * (v - m))
                    .sum::<f64>()
            })
            .sum::<f64>()
            / (n - 1.0);
        let projected_var: f64 = p
            .coords
            .iter()
            .map(|c| c.iter().map(|x| x * x).sum::<f64>())
            .sum::<f64>()
            / (n - 1.0);
        let residual = total_var - projected_var;
        let expected: f64 = p.eigenvalues[2..].iter().sum();
        assert_relative_eq!(residual, expected, epsilon = 1e-9);
    }

    #[test]
    fn dims_beyond_feature_count_error() {
        let rows = random_rows(10, 3, 1);
        assert!(matches!(
            pca_project(&rows, 4),
            Err(LearnError::TooManyDims { .. })
        ));
    }
}
