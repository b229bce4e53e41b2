import enum
from typing import List, Sequence, Tuple

import numpy as np
import pandas as pd

from egokit.errors import LengthMismatch, MissingColumn, RaggedRow
from egokit.tools import atomic_path


class SegmentClass(enum.IntEnum):
    EnteringUturn = 0
    UturnExecution = 1
    ExitingUturn = 2
    InverseCurve = 3
    StraightMotion = 4

    @property
    def abnormal(self) -> bool:
        return self in ABNORMAL_CLASSES


ABNORMAL_CLASSES = frozenset({SegmentClass.UturnExecution, SegmentClass.InverseCurve})


class GroundTruth:
    """Segment class per tick. The binary label is 1 for abnormal segments."""

    timestamps: np.ndarray
    classes: np.ndarray

    def __init__(self, timestamps: Sequence[float], classes: Sequence[int]) -> None:
        self.timestamps = np.asarray(timestamps, dtype=np.float64)
        self.classes = np.asarray([int(SegmentClass(c)) for c in classes], dtype=np.int64)
        if len(self.timestamps) != len(self.classes):
            raise LengthMismatch(f"{len(self.timestamps)} timestamps for {len(self.classes)} classes")

    def __len__(self) -> int:
        return len(self.classes)

    @property
    def labels(self) -> np.ndarray:
        abnormal = [int(c) for c in ABNORMAL_CLASSES]
        return np.isin(self.classes, abnormal).astype(np.int64)

    def segment(self, tick: int) -> SegmentClass:
        return SegmentClass(int(self.classes[tick]))

    def runs(self) -> List[Tuple[SegmentClass, int, int]]:
        """Contiguous runs as (class, first tick, end tick exclusive)."""
        if len(self) == 0:
            return []
        changes = np.flatnonzero(np.diff(self.classes)) + 1
        starts = np.concatenate([[0], changes])
        ends = np.concatenate([changes, [len(self)]])
        return [(SegmentClass(int(self.classes[s])), int(s), int(e)) for s, e in zip(starts, ends)]

    def select(self, ticks: Sequence[int]) -> "GroundTruth":
        ticks = np.asarray(ticks, dtype=np.int64)
        return GroundTruth(self.timestamps[ticks], self.classes[ticks])

    def to_csv(self, path: str):
        frame = pd.DataFrame(
            {
                "t": self.timestamps,
                "class": [SegmentClass(int(c)).name for c in self.classes],
                "label": self.labels,
            }
        )
        with atomic_path(path) as temp:
            frame.to_csv(temp, index=False, lineterminator="\n")


def read_ground_truth(path: str) -> GroundTruth:
    frame = pd.read_csv(path, dtype={"class": str}, keep_default_na=False, float_precision="round_trip")
    missing = [column for column in ("t", "class") if column not in frame.columns]
    if missing:
        raise MissingColumn(f"{path} lacks ground truth columns {missing}")

    timestamps = pd.to_numeric(frame["t"], errors="coerce")
    names = frame["class"].str.strip()
    # +2: header and 1-based line numbers
    for line, (t, name) in enumerate(zip(timestamps, names), start=2):
        if np.isnan(t) or not name:
            raise RaggedRow(f"{path}: line {line} has an empty time or class")
    try:
        classes = [SegmentClass[name] for name in names]
    except KeyError as e:
        raise MissingColumn(f"{path} has unknown segment class {e}") from e
    return GroundTruth(timestamps.to_numpy(dtype=np.float64), classes)
