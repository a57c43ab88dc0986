//! Binary decision tree trained by information gain (entropy reduction),
//! C4.5-style: continuous features, midpoint thresholds, no pruning.

use super::{Label, LearnError};

#[derive(Debug, Clone)]
pub enum TreeNode {
    Leaf(Label),
    Split {
        feature: usize,
        threshold: f64,
        /// Taken when `query[feature] <= threshold`.
        below: Box<TreeNode>,
        /// Taken when `query[feature] > threshold`.
        above: Box<TreeNode>,
    },
}

#[derive(Debug, Clone)]
pub struct DecisionTree {
    pub root: TreeNode,
}

fn entropy(counts: [usize; 2]) -> f64 {
    let total = (counts[0] + counts[1]) as f64;
    if total == 0.0 {
        return 0.0;
    }
    let mut h = 0.0;
    for c in counts {
        if c > 0 {
            let p = c as f64 / total;
            h -= p * p.log2();
        }
    }
    h
}

fn class_counts(labels: &[Label], indices: &[usize]) -> [usize; 2] {
    let mut counts = [0usize; 2];
    for &i in indices {
        counts[labels[i].index()] += 1;
    }
    counts
}

fn majority(counts: [usize; 2]) -> Label {
    // Ties go to Real, the first class in class order.
    if counts[1] > counts[0] {
        Label::Fake
    } else {
        Label::Real
    }
}

/// Information gain of splitting `indices` at `feature <= threshold`.
/// Exposed within the crate for the oracle tests.
pub(crate) fn information_gain(
    rows: &[Vec<f64>],
    labels: &[Label],
    indices: &[usize],
    feature: usize,
    threshold: f64,
) -> f64 {
    let parent = class_counts(labels, indices);
    let mut below = [0usize; 2];
    let mut above = [0usize; 2];
    for &i in indices {
        if rows[i][feature] <= threshold {
            below[labels[i].index()] += 1;
        } else {
            above[labels[i].index()] += 1;
        }
    }
    let n = indices.len() as f64;
    let nb = (below[0] + below[1]) as f64;
    let na = (above[0] + above[1]) as f64;
    entropy(parent) - (nb / n) * entropy(below) - (na / n) * entropy(above)
}

struct Builder<'a> {
    rows: &'a [Vec<f64>],
    labels: &'a [Label],
    subset: &'a [usize],
    max_depth: usize,
    min_leaf: usize,
}

impl Builder<'_> {
    fn best_split(&self, indices: &[usize]) -> Option<(usize, f64, f64)> {
        let parent_entropy = entropy(class_counts(self.labels, indices));
        if parent_entropy == 0.0 {
            return None;
        }
        let mut best: Option<(usize, f64, f64)> = None;
        for &feature in self.subset {
            let mut values: Vec<f64> = indices.iter().map(|&i| self.rows[i][feature]).collect();
            values.sort_by(|a, b| a.partial_cmp(b).expect("finite training values"));
            values.dedup();
            for pair in values.windows(2) {
                let threshold = (pair[0] + pair[1]) / 2.0;
                let below = indices
                    .iter()
                    .filter(|&&i| self.rows[i][feature] <= threshold)
                    .count();
                let above = indices.len() - below;
                if below < self.min_leaf || above < self.min_leaf {
                    continue;
                }
                let gain = information_gain(self.rows, self.labels, indices, feature, threshold);
                // Strict improvement keeps the first (lowest feature, lowest
                // threshold) candidate on ties, which makes training
                // deterministic.
                if best.is_none_or(|(_, _, g)| gain > g) {
                    best = Some((feature, threshold, gain));
                }
            }
        }
        best.filter(|&(_, _, g)| g > 1e-12)
    }

    fn build(&self, indices: &[usize], depth: usize) -> TreeNode {
        let counts = class_counts(self.labels, indices);
        if counts[0] == 0 || counts[1] == 0 || depth >= self.max_depth {
            return TreeNode::Leaf(majority(counts));
        }
        let Some((feature, threshold, _)) = self.best_split(indices) else {
            return TreeNode::Leaf(majority(counts));
        };
        let (below, above): (Vec<usize>, Vec<usize>) = indices
            .iter()
            .partition(|&&i| self.rows[i][feature] <= threshold);
        TreeNode::Split {
            feature,
            threshold,
            below: Box::new(self.build(&below, depth + 1)),
            above: Box::new(self.build(&above, depth + 1)),
        }
    }
}

impl DecisionTree {
    /// Grow a tree on the given rows, restricted to the feature subset.
    pub fn train(
        rows: &[Vec<f64>],
        labels: &[Label],
        subset: &[usize],
        max_depth: usize,
        min_leaf: usize,
    ) -> Result<Self, LearnError> {
        if rows.is_empty() {
            return Err(LearnError::EmptyDataset);
        }
        if subset.is_empty() {
            return Err(LearnError::EmptySubset);
        }
        let builder = Builder {
            rows,
            labels,
            subset,
            max_depth,
            min_leaf: min_leaf.max(1),
        };
        let indices: Vec<usize> = (0..rows.len()).collect();
        Ok(DecisionTree {
            root: builder.build(&indices, 0),
        })
    }

    /// Walk the threshold tests down to a leaf.
    pub fn classify(&self, query: &[f64]) -> Result<Label, LearnError> {
        let mut node = &self.root;
        loop {
            match node {
                TreeNode::Leaf(label) => return Ok(*label),
                TreeNode::Split {
                    feature,
                    threshold,
                    below,
                    above,
                } => {
                    let v = query[*feature];
                    if !v.is_finite() {
                        return Err(LearnError::NonFiniteQuery(*feature));
                    }
                    node = if v <= *threshold { below } else { above };
                }
            }
        }
    }

    pub fn depth(&self) -> usize {
        fn walk(node: &TreeNode) -> usize {
            match node {
                TreeNode::Leaf(_) => 0,
                TreeNode::Split { below, above, .. } => 1 + walk(below).max(walk(above)),
            }
        }
        walk(&self.root)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn one_d(values: &[(f64, Label)]) -> (Vec<Vec<f64>>, Vec<Label>) {
        (
            values.iter().map(|v| vec![v.0]).collect(),
            values.iter().map(|v| v.1).collect(),
        )
    }

    #[test]
    fn separable_data_needs_one_split() {
        let (rows, labels) = one_d(&[
            (-3.0, Label::Real),
            (-2.0, Label::Real),
            (-1.0, Label::Real),
            (1.0, Label::Fake),
            (2.0, Label::Fake),
            (3.0, Label::Fake),
        ]);
        let tree = DecisionTree::train(&rows, &labels, &[0], 8, 1).unwrap();
        assert_eq!(tree.depth(), 1);
        for (row, label) in rows.iter().zip(&labels) {
            assert_eq!(tree.classify(row).unwrap(), *label);
        }
    }

    fn xor_data() -> (Vec<Vec<f64>>, Vec<Label>) {
        // Distinct jitters per point: perfectly symmetric XOR clusters give
        // every axis split exactly zero gain, which stalls a greedy tree.
        let jitters = [
            (-0.13, 0.07),
            (0.02, -0.11),
            (0.09, 0.14),
            (-0.05, -0.03),
            (0.16, 0.01),
            (-0.08, 0.12),
            (0.04, -0.15),
            (0.11, 0.06),
            (-0.16, -0.09),
            (0.07, 0.03),
            (-0.02, 0.16),
            (0.14, -0.06),
        ];
        let mut rows = Vec::new();
        let mut labels = Vec::new();
        for (c, (x, y)) in [(-1.0, -1.0), (-1.0, 1.0), (1.0, -1.0), (1.0, 1.0)]
            .into_iter()
            .enumerate()
        {
            for &(jx, jy) in &jitters[c * 3..c * 3 + 3] {
                rows.push(vec![x + jx, y + jy]);
                labels.push(if x * y > 0.0 { Label::Real } else { Label::Fake });
            }
        }
        (rows, labels)
    }

    #[test]
    fn xor_needs_depth_two() {
        let (rows, labels) = xor_data();
        let shallow = DecisionTree::train(&rows, &labels, &[0, 1], 1, 1).unwrap();
        let correct = rows
            .iter()
            .zip(&labels)
            .filter(|(r, l)| shallow.classify(r).unwrap() == **l)
            .count();
        assert!(correct as f64 / rows.len() as f64 <= 0.75);

        let deep = DecisionTree::train(&rows, &labels, &[0, 1], 4, 1).unwrap();
        assert!(deep.depth() >= 2);
        for (row, label) in rows.iter().zip(&labels) {
            assert_eq!(deep.classify(row).unwrap(), *label);
        }
    }

    #[test]
    fn gain_matches_a_hand_computed_entropy_difference() {
        // 10 rows, split at 0: below has 4 Real / 1 Fake, above 1 Real / 4 Fake.
        let (rows, labels) = one_d(&[
            (-5.0, Label::Real),
            (-4.0, Label::Real),
            (-3.0, Label::Real),
            (-2.0, Label::Real),
            (-1.0, Label::Fake),
            (1.0, Label::Fake),
            (2.0, Label::Fake),
            (3.0, Label::Fake),
            (4.0, Label::Fake),
            (5.0, Label::Real),
        ]);
        let indices: Vec<usize> = (0..10).collect();
        let gain = information_gain(&rows, &labels, &indices, 0, 0.0);
        // H(S) = 1 (5/5); each side is {4,1}: H = -(0.8 lg 0.8 + 0.2 lg 0.2).
        let h_side = -(0.8f64 * 0.8f64.log2() + 0.2 * 0.2f64.log2());
        let expected = 1.0 - h_side;
        assert!((gain - expected).abs() < 1e-12, "gain {gain} vs {expected}");
    }

    #[test]
    fn zero_gain_split_when_proportions_are_unchanged() {
        // Both halves keep the 1:1 class mix, so the gain must be exactly 0.
        let (rows, labels) = one_d(&[
            (-2.0, Label::Real),
            (-1.0, Label::Fake),
            (1.0, Label::Real),
            (2.0, Label::Fake),
        ]);
        let indices: Vec<usize> = (0..4).collect();
        let gain = information_gain(&rows, &labels, &indices, 0, 0.0);
        assert!(gain.abs() < 1e-12);
    }

    #[test]
    fn gain_is_never_negative_across_candidates() {
        let (rows, labels) = one_d(&[
            (0.3, Label::Real),
            (1.7, Label::Fake),
            (0.9, Label::Fake),
            (2.4, Label::Real),
            (3.3, Label::Fake),
        ]);
        let indices: Vec<usize> = (0..rows.len()).collect();
        let mut values: Vec<f64> = rows.iter().map(|r| r[0]).collect();
        values.sort_by(|a, b| a.partial_cmp(b).unwrap());
        for pair in values.windows(2) {
            let gain = information_gain(&rows, &labels, &indices, 0, (pair[0] + pair[1]) / 2.0);
            assert!(gain >= -1e-12);
        }
    }

    #[test]
    fn hand_built_tree_walkthrough() {
        // Root asks about feature 0 at 0; the "no" side asks about feature 1
        // at 0.3, whose "yes" side is Fake (the second class). The query
        // (-0.10, 0.11, 0.38) walks no, then yes.
        let tree = DecisionTree {
            root: TreeNode::Split {
                feature: 0,
                threshold: 0.0,
                below: Box::new(TreeNode::Split {
                    feature: 1,
                    threshold: 0.3,
                    below: Box::new(TreeNode::Leaf(Label::Fake)),
                    above: Box::new(TreeNode::Leaf(Label::Real)),
                }),
                above: Box::new(TreeNode::Split {
                    feature: 2,
                    threshold: 0.5,
                    below: Box::new(TreeNode::Leaf(Label::Real)),
                    above: Box::new(TreeNode::Leaf(Label::Fake)),
                }),
            },
        };
        assert_eq!(tree.classify(&[-0.10, 0.11, 0.38]).unwrap(), Label::Fake);
    }

    #[test]
    fn single_leaf_tree_always_answers_the_same() {
        let tree = DecisionTree {
            root: TreeNode::Leaf(Label::Real),
        };
        assert_eq!(tree.classify(&[9.9]).unwrap(), Label::Real);
    }

    #[test]
    fn non_finite_query_is_an_error() {
        let (rows, labels) = one_d(&[(-1.0, Label::Real), (1.0, Label::Fake)]);
        let tree = DecisionTree::train(&rows, &labels, &[0], 4, 1).unwrap();
        assert!(matches!(
            tree.classify(&[f64::NAN]),
            Err(LearnError::NonFiniteQuery(0))
        ));
    }

    #[test]
    fn training_accuracy_beats_the_majority_baseline() {
        let (rows, labels) = xor_data();
        let tree = DecisionTree::train(&rows, &labels, &[0, 1], 6, 1).unwrap();
        let correct = rows
            .iter()
            .zip(&labels)
            .filter(|(r, l)| tree.classify(r).unwrap() == **l)
            .count();
        let majority = labels.iter().filter(|l| **l == Label::Real).count().max(
            labels.iter().filter(|l| **l == Label::Fake).count(),
        );
        assert!(correct >= majority);
    }
}
