import numpy as np
import pytest

from egokit.errors import LengthMismatch, SingleClassLabels
from .roc import accuracy, auc, best_accuracy, roc_curve

SCORES = [0.9, 0.8, 0.2, 0.1]


def pairwise_auc(scores: np.ndarray, labels: np.ndarray) -> float:
    positives = scores[labels == 1]
    negatives = scores[labels == 0]
    greater = (positives[:, None] > negatives[None, :]).sum()
    ties = (positives[:, None] == negatives[None, :]).sum()
    return (greater + 0.5 * ties) / (len(positives) * len(negatives))


class TestRocCurve:
    def test_perfect_separation_reaches_top_left(self):
        roc = roc_curve(SCORES, [1, 1, 0, 0])

        assert (0.0, 1.0) in zip(roc.fpr, roc.tpr)

    def test_inverted_labels_pass_bottom_right(self):
        roc = roc_curve(SCORES, [0, 0, 1, 1])

        assert (1.0, 0.0) in zip(roc.fpr, roc.tpr)

    def test_thresholds_descend_from_infinity(self):
        roc = roc_curve([0.3, 0.3, 0.7, 0.1], [1, 0, 1, 0])

        assert np.isinf(roc.thresholds[0])
        assert roc.thresholds[1:].tolist() == [0.7, 0.3, 0.1]
        assert np.all(np.diff(roc.tpr) >= 0)
        assert np.all(np.diff(roc.fpr) >= 0)

    def test_single_class_raises(self):
        with pytest.raises(SingleClassLabels):
            roc_curve(SCORES, [0, 0, 0, 0])

    def test_length_mismatch_raises(self):
        with pytest.raises(LengthMismatch):
            roc_curve(SCORES, [0, 1])


class TestAuc:
    def test_perfect_and_inverted(self):
        assert auc(roc_curve(SCORES, [1, 1, 0, 0])) == 1.0
        assert auc(roc_curve(SCORES, [0, 0, 1, 1])) == 0.0

    def test_matches_pairwise_comparison(self):
        for seed in range(100):
            rng = np.random.default_rng(seed)
            # rounding creates ties between classes
            scores = np.round(rng.random(200), 2)
            labels = rng.integers(0, 2, size=200)
            labels[:2] = [0, 1]

            assert auc(roc_curve(scores, labels)) == pytest.approx(pairwise_auc(scores, labels), abs=1e-9)

    def test_increasing_transform_changes_nothing(self):
        rng = np.random.default_rng(12)
        scores = rng.random(150)
        labels = rng.integers(0, 2, size=150)
        labels[:2] = [0, 1]

        plain = roc_curve(scores, labels)
        transformed = roc_curve(np.exp(3.0 * scores) + 1.0, labels)

        assert np.array_equal(plain.tpr, transformed.tpr)
        assert np.array_equal(plain.fpr, transformed.fpr)
        assert auc(plain) == auc(transformed)


class TestAccuracy:
    def test_one_of_each_outcome_gives_half(self):
        # TP, FN, FP, TN at threshold 0.5
        assert accuracy([0.9, 0.1, 0.8, 0.2], [1, 1, 0, 0], 0.5) == 0.5

    def test_zero_threshold_gives_abnormal_prevalence(self):
        labels = np.array([1, 0, 0, 1, 0, 0, 0, 1])
        scores = np.linspace(0.0, 1.0, len(labels))

        assert accuracy(scores, labels, 0.0) == pytest.approx(labels.mean())
        assert accuracy(scores, labels, 1.5) == pytest.approx(1 - labels.mean())

    def test_best_accuracy_of_perfect_separation(self):
        acc, threshold = best_accuracy(SCORES, [1, 1, 0, 0])

        assert acc == 1.0
        assert threshold == 0.8

    def test_best_accuracy_ties_go_to_lower_threshold(self):
        # thresholds 0.8 and 0.4 both classify three of four ticks
        acc, threshold = best_accuracy([0.8, 0.6, 0.4, 0.2], [1, 0, 1, 0])

        assert acc == 0.75
        assert threshold == 0.4

    def test_best_accuracy_matches_scan(self):
        rng = np.random.default_rng(5)
        scores = rng.random(80)
        labels = (scores + rng.normal(0.0, 0.3, size=80) > 0.5).astype(int)

        acc, threshold = best_accuracy(scores, labels)

        scan = max(accuracy(scores, labels, t) for t in np.append(np.unique(scores), np.inf))
        assert acc == pytest.approx(scan)
        assert accuracy(scores, labels, threshold) == pytest.approx(acc)
