import os
from typing import List, Sequence

import jsonpickle
import pandas as pd

from egokit.errors import EmptyReportSet, ModelFormatError
from egokit.tools import atomic_path, atomic_write_text
from .eval_report import EvalReport, report_from_dict, select_model


def write_report_set(path: str, reports: Sequence[EvalReport]) -> List[EvalReport]:
    """Writes all reports ranked, winner first, and returns the ranking."""
    ranking = select_model(reports)
    payload = {
        "winner": ranking[0].feature_id,
        "ranking": [report.feature_id for report in ranking],
        "features": {report.feature_id: report.to_dict() for report in ranking},
    }
    atomic_write_text(path, jsonpickle.encode(payload, unpicklable=False, indent=2))
    return ranking


def read_report_set(path: str) -> List[EvalReport]:
    with open(path, "r", encoding="utf-8") as handle:
        try:
            payload = jsonpickle.decode(handle.read())
        except ValueError as e:
            raise ModelFormatError(f"{path} is not a report file: {e}") from e
    features = payload.get("features") if isinstance(payload, dict) else None
    if not features:
        raise EmptyReportSet(f"{path} holds no feature reports")
    return [report_from_dict(feature_id, values) for feature_id, values in features.items()]


def write_roc_csv(folder: str, report: EvalReport) -> str:
    path = os.path.join(folder, f"roc_{report.feature_id}.csv")
    frame = pd.DataFrame({"threshold": report.roc.thresholds, "tpr": report.roc.tpr, "fpr": report.roc.fpr})
    with atomic_path(path) as temp:
        frame.to_csv(temp, index=False, lineterminator="\n")
    return path
