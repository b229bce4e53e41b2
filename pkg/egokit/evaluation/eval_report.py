from typing import Dict, List, Optional, Sequence

import numpy as np
from scipy.ndimage import uniform_filter1d

from egokit.errors import EmptyReportSet, LengthMismatch
from .ground_truth import GroundTruth, SegmentClass
from .roc import RocCurve, auc, best_accuracy, roc_curve


def smooth(scores: Sequence[float], window: int = 1) -> np.ndarray:
    """Centered moving average, edges repeat the nearest value. Window 1 returns the scores unchanged."""
    scores = np.asarray(scores, dtype=np.float64)
    if window < 1:
        raise ValueError(f"Smoothing window must be at least 1, got {window}")
    if window == 1:
        return scores.copy()
    return uniform_filter1d(scores, size=window, mode="nearest")


class EvalReport:
    """Detection quality of one feature-case against the ground truth."""

    feature_id: str
    roc: RocCurve
    auc: float
    best_acc: float
    threshold: float
    class_means: Dict[str, float]
    mean_theta_abnormal: float
    mean_theta_normal: float

    def __init__(
        self,
        feature_id: str,
        roc: RocCurve,
        auc_value: float,
        best_acc: float,
        threshold: float,
        class_means: Optional[Dict[str, float]] = None,
        mean_theta_abnormal: float = float("nan"),
        mean_theta_normal: float = float("nan"),
    ) -> None:
        self.feature_id = feature_id
        self.roc = roc
        self.auc = auc_value
        self.best_acc = best_acc
        self.threshold = threshold
        self.class_means = class_means or {}
        self.mean_theta_abnormal = mean_theta_abnormal
        self.mean_theta_normal = mean_theta_normal

    def __repr__(self) -> str:
        return f"EvalReport({self.feature_id}: auc={self.auc:.4f}, acc={self.best_acc:.4f}@{self.threshold:.4f})"

    def to_dict(self) -> dict:
        return {
            "auc": self.auc,
            "best_acc": self.best_acc,
            "threshold": _json_float(self.threshold),
            "mean_theta_abnormal": self.mean_theta_abnormal,
            "mean_theta_normal": self.mean_theta_normal,
            "class_means": self.class_means,
            "positives": self.roc.positives,
            "negatives": self.roc.negatives,
            "roc": [[_json_float(t), tpr, fpr] for t, tpr, fpr in self.roc.points],
        }


def _json_float(value: float):
    # JSON has no infinity, the +inf sentinel is written as a string
    return "inf" if np.isinf(value) else value


def build_report(
    feature_id: str, scores: Sequence[float], ground_truth: GroundTruth, smoothing_window: int = 1
) -> EvalReport:
    """`scores` and `ground_truth` must be aligned tick by tick."""
    if len(scores) != len(ground_truth):
        raise LengthMismatch(f"{len(scores)} scores for {len(ground_truth)} ground truth ticks")
    scores = smooth(scores, smoothing_window)
    labels = ground_truth.labels

    roc = roc_curve(scores, labels)
    acc, threshold = best_accuracy(scores, labels)
    class_means = {
        segment.name: float(scores[ground_truth.classes == segment].mean())
        for segment in SegmentClass
        if np.any(ground_truth.classes == segment)
    }
    return EvalReport(
        feature_id,
        roc,
        auc(roc),
        acc,
        threshold,
        class_means,
        float(scores[labels == 1].mean()),
        float(scores[labels == 0].mean()),
    )


def select_model(reports: Sequence[EvalReport]) -> List[EvalReport]:
    """Full ranking, winner first: AUC descending, then best accuracy descending, then feature id."""
    if len(reports) == 0:
        raise EmptyReportSet("No reports to select from")
    return sorted(reports, key=lambda report: (-report.auc, -report.best_acc, report.feature_id))


def summary_table(ranking: Sequence[EvalReport]) -> str:
    """Feature-cases as columns, AUC and ACC as percentage rows."""
    width = max(8, max(len(report.feature_id) for report in ranking) + 2)
    header = "".ljust(10) + "".join(report.feature_id.rjust(width) for report in ranking)
    auc_row = "AUC (%)".ljust(10) + "".join(f"{100 * report.auc:.2f}".rjust(width) for report in ranking)
    acc_row = "ACC (%)".ljust(10) + "".join(f"{100 * report.best_acc:.2f}".rjust(width) for report in ranking)
    return "\n".join([header, auc_row, acc_row])


def report_from_dict(feature_id: str, payload: dict) -> EvalReport:
    points = payload.get("roc", [])
    roc = RocCurve(
        np.array([float(p[0]) for p in points]),
        np.array([p[1] for p in points]),
        np.array([p[2] for p in points]),
        int(payload.get("positives", 0)),
        int(payload.get("negatives", 0)),
    )
    return EvalReport(
        feature_id,
        roc,
        float(payload["auc"]),
        float(payload["best_acc"]),
        float(payload["threshold"]),
        dict(payload.get("class_means", {})),
        float(payload.get("mean_theta_abnormal", "nan")),
        float(payload.get("mean_theta_normal", "nan")),
    )
