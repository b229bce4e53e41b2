from typing import List, Tuple

import numpy as np
from sklearn import metrics

from egokit.errors import LengthMismatch, SingleClassLabels


class RocCurve:
    """Operating points for every distinct score threshold, thresholds descending, the first one +inf."""

    thresholds: np.ndarray
    tpr: np.ndarray
    fpr: np.ndarray
    positives: int
    negatives: int

    def __init__(self, thresholds: np.ndarray, tpr: np.ndarray, fpr: np.ndarray, positives: int, negatives: int):
        self.thresholds = np.asarray(thresholds, dtype=np.float64)
        self.tpr = np.asarray(tpr, dtype=np.float64)
        self.fpr = np.asarray(fpr, dtype=np.float64)
        self.positives = positives
        self.negatives = negatives

    def __len__(self) -> int:
        return len(self.thresholds)

    @property
    def points(self) -> List[Tuple[float, float, float]]:
        return [(float(t), float(tp), float(fp)) for t, tp, fp in zip(self.thresholds, self.tpr, self.fpr)]

    def correct_counts(self) -> np.ndarray:
        """TP + TN at every threshold."""
        true_positives = np.rint(self.tpr * self.positives).astype(np.int64)
        false_positives = np.rint(self.fpr * self.negatives).astype(np.int64)
        return true_positives + self.negatives - false_positives


def _check(scores, labels) -> Tuple[np.ndarray, np.ndarray]:
    scores = np.asarray(scores, dtype=np.float64).reshape(-1)
    labels = np.asarray(labels).reshape(-1).astype(np.int64)
    if len(scores) != len(labels):
        raise LengthMismatch(f"{len(scores)} scores for {len(labels)} labels")
    if len(scores) == 0 or len(np.unique(labels)) < 2:
        raise SingleClassLabels("Evaluation needs both normal and abnormal labels")
    return scores, labels


def roc_curve(scores, labels) -> RocCurve:
    """A tick is predicted abnormal when its score is greater than or equal to the threshold."""
    scores, labels = _check(scores, labels)
    fpr, tpr, thresholds = metrics.roc_curve(labels, scores, pos_label=1, drop_intermediate=False)
    # Older scikit-learn uses max + 1 for the sentinel
    thresholds = thresholds.copy()
    thresholds[0] = np.inf
    positives = int(labels.sum())
    return RocCurve(thresholds, tpr, fpr, positives, len(labels) - positives)


def auc(roc: RocCurve) -> float:
    return float(metrics.auc(roc.fpr, roc.tpr))


def accuracy(scores, labels, threshold: float) -> float:
    scores, labels = _check(scores, labels)
    return float(metrics.accuracy_score(labels, (scores >= threshold).astype(np.int64)))


def best_accuracy(scores, labels) -> Tuple[float, float]:
    """Highest accuracy over all ROC thresholds, ties go to the lower threshold."""
    roc = roc_curve(scores, labels)
    correct = roc.correct_counts()
    # thresholds are descending, the last maximum is the lowest threshold
    best = len(correct) - 1 - int(np.argmax(correct[::-1]))
    return float(correct[best] / (roc.positives + roc.negatives)), float(roc.thresholds[best])
