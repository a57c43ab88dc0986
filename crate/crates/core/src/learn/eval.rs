//! Stratified k-fold cross-validation.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{
    ClassifierKind, ClassifierSpec, Dataset, DecisionTree, KnnClassifier, Label, LearnError,
    ParzenNaiveBayes, Standardizer,
};

/// Outcome of one cross-validated evaluation.
#[derive(Debug, Clone, Serialize)]
pub struct EvaluationReport {
    pub classifier: ClassifierKind,
    pub feature_subset: Vec<usize>,
    /// Correct predictions over all rows.
    pub accuracy: f64,
    pub fold_accuracies: Vec<f64>,
    /// `confusion[actual][predicted]` in class order (real, fake).
    pub confusion: [[usize; 2]; 2],
}

/// Assign each row to a fold, stratified by class: indices of each class are
/// shuffled under the seed and dealt round-robin. Errors when a class has
/// fewer rows than folds.
pub fn stratified_folds(
    labels: &[Label],
    folds: usize,
    seed: u64,
) -> Result<Vec<usize>, LearnError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut assignment = vec![0usize; labels.len()];
    for class in Label::ALL {
        let mut indices: Vec<usize> = labels
            .iter()
            .enumerate()
            .filter(|(_, l)| **l == class)
            .map(|(i, _)| i)
            .collect();
        if indices.len() < folds {
            return Err(LearnError::ClassSmallerThanFolds {
                label: class,
                rows: indices.len(),
                folds,
            });
        }
        indices.shuffle(&mut rng);
        for (pos, idx) in indices.into_iter().enumerate() {
            assignment[idx] = pos % folds;
        }
    }
    Ok(assignment)
}

enum Trained {
    Knn(KnnClassifier),
    Bayes(ParzenNaiveBayes),
    Tree(DecisionTree),
}

impl Trained {
    fn fit(
        spec: &ClassifierSpec,
        rows: Vec<Vec<f64>>,
        labels: Vec<Label>,
        subset: &[usize],
    ) -> Result<Self, LearnError> {
        Ok(match *spec {
            ClassifierSpec::Knn { k } => {
                Trained::Knn(KnnClassifier::train(rows, labels, subset, k)?)
            }
            ClassifierSpec::NaiveBayes => {
                Trained::Bayes(ParzenNaiveBayes::train(&rows, &labels, subset)?)
            }
            ClassifierSpec::C45 {
                max_depth,
                min_leaf,
            } => Trained::Tree(DecisionTree::train(
                &rows, &labels, subset, max_depth, min_leaf,
            )?),
        })
    }

    fn classify(&self, query: &[f64]) -> Result<Label, LearnError> {
        match self {
            Trained::Knn(m) => m.classify(query),
            Trained::Bayes(m) => m.classify(query),
            Trained::Tree(m) => m.classify(query),
        }
    }
}

/// Stratified k-fold evaluation of one classifier over one feature subset.
/// Standardization statistics are fitted inside each training fold only.
pub fn cross_validate(
    dataset: &Dataset,
    spec: &ClassifierSpec,
    subset: &[usize],
    folds: usize,
    seed: u64,
) -> Result<EvaluationReport, LearnError> {
    if !dataset.has_both_classes() {
        return Err(LearnError::SingleClass);
    }
    if subset.is_empty() {
        return Err(LearnError::EmptySubset);
    }
    let assignment = stratified_folds(&dataset.labels, folds, seed)?;

    let mut correct_total = 0usize;
    let mut fold_accuracies = Vec::with_capacity(folds);
    let mut confusion = [[0usize; 2]; 2];

    for fold in 0..folds {
        let train_rows: Vec<&Vec<f64>> = dataset
            .rows
            .iter()
            .zip(&assignment)
            .filter(|(_, &f)| f != fold)
            .map(|(r, _)| r)
            .collect();
        let standardizer = Standardizer::fit(train_rows.into_iter(), dataset.n_features());

        let mut z_train = Vec::new();
        let mut y_train = Vec::new();
        let mut test_indices = Vec::new();
        for (i, row) in dataset.rows.iter().enumerate() {
            if assignment[i] == fold {
                test_indices.push(i);
            } else {
                z_train.push(standardizer.transform(row));
                y_train.push(dataset.labels[i]);
            }
        }

        let model = Trained::fit(spec, z_train, y_train, subset)?;
        let mut correct = 0usize;
        for &i in &test_indices {
            let predicted = model.classify(&standardizer.transform(&dataset.rows[i]))?;
            let actual = dataset.labels[i];
            confusion[actual.index()][predicted.index()] += 1;
            if predicted == actual {
                correct += 1;
            }
        }
        correct_total += correct;
        fold_accuracies.push(correct as f64 / test_indices.len().max(1) as f64);
    }

    Ok(EvaluationReport {
        classifier: spec.kind(),
        feature_subset: subset.to_vec(),
        accuracy: correct_total as f64 / dataset.n_rows() as f64,
        fold_accuracies,
        confusion,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;

    fn gaussian_pair(rng: &mut ChaCha8Rng) -> (f64, f64) {
        // Box-Muller.
        let u1: f64 = rng.gen_range(1e-12..1.0);
        let u2: f64 = rng.gen::<f64>();
        let r = (-2.0 * u1.ln()).sqrt();
        (
            r * (2.0 * std::f64::consts::PI * u2).cos(),
            r * (2.0 * std::f64::consts::PI * u2).sin(),
        )
    }

    fn two_blob_dataset(n_per_class: usize, separation: f64, seed: u64) -> Dataset {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut rows = Vec::new();
        let mut labels = Vec::new();
        for class in [Label::Real, Label::Fake] {
            let center = if class == Label::Real { 0.0 } else { separation };
            for _ in 0..n_per_class {
                let (a, b) = gaussian_pair(&mut rng);
                rows.push(vec![center + a, center + b]);
                labels.push(class);
            }
        }
        Dataset::new(vec!["x".into(), "y".into()], rows, labels).unwrap()
    }

    #[test]
    fn separable_data_scores_perfectly_for_all_three() {
        let data = two_blob_dataset(30, 12.0, 7);
        for spec in ClassifierSpec::defaults() {
            let report = cross_validate(&data, &spec, &[0, 1], 10, 3).unwrap();
            assert_eq!(report.accuracy, 1.0, "{:?}", spec.kind());
        }
    }

    #[test]
    fn identical_distributions_score_at_chance() {
        // separation = 0: the labels carry no information.
        let data = two_blob_dataset(60, 0.0, 21);
        for spec in ClassifierSpec::defaults() {
            let report = cross_validate(&data, &spec, &[0, 1], 10, 5).unwrap();
            assert!(
                (0.3..=0.7).contains(&report.accuracy),
                "{:?}: {}",
                spec.kind(),
                report.accuracy
            );
        }
    }

    #[test]
    fn fixed_seed_reproduces_the_report() {
        let data = two_blob_dataset(25, 2.0, 4);
        let spec = ClassifierSpec::Knn { k: 1 };
        let a = cross_validate(&data, &spec, &[0, 1], 5, 11).unwrap();
        let b = cross_validate(&data, &spec, &[0, 1], 5, 11).unwrap();
        assert_eq!(a.accuracy, b.accuracy);
        assert_eq!(a.fold_accuracies, b.fold_accuracies);
        assert_eq!(a.confusion, b.confusion);
    }

    #[test]
    fn folds_partition_the_dataset() {
        let data = two_blob_dataset(20, 1.0, 9);
        let report = cross_validate(&data, &ClassifierSpec::NaiveBayes, &[0, 1], 4, 2).unwrap();
        let total: usize = report.confusion.iter().flatten().sum();
        assert_eq!(total, data.n_rows());
    }

    #[test]
    fn class_smaller_than_fold_count_errors() {
        let data = two_blob_dataset(3, 5.0, 1);
        let err = cross_validate(&data, &ClassifierSpec::NaiveBayes, &[0], 10, 0);
        assert!(matches!(err, Err(LearnError::ClassSmallerThanFolds { .. })));
    }

    #[test]
    fn leave_in_knn_is_perfect_without_conflicting_duplicates() {
        let data = two_blob_dataset(15, 1.5, 13);
        let st = Standardizer::fit(data.rows.iter(), 2);
        let z: Vec<Vec<f64>> = data.rows.iter().map(|r| st.transform(r)).collect();
        let model = KnnClassifier::train(z.clone(), data.labels.clone(), &[0, 1], 1).unwrap();
        for (row, label) in z.iter().zip(&data.labels) {
            assert_eq!(model.classify(row).unwrap(), *label);
        }
    }
}
