from typing import Sequence

import numpy as np
import pandas as pd

from egokit.errors import MissingColumn
from egokit.filters import StepResult
from egokit.signals import SensorSeries
from egokit.tools import atomic_path

TRACE_COLUMNS = ["k", "t", "theta", "map_word"]


class AnomalyTrace:
    """Abnormality per filtered tick, k indexes the tick of the input series."""

    ticks: np.ndarray
    timestamps: np.ndarray
    thetas: np.ndarray
    words: np.ndarray

    def __init__(self, ticks, timestamps, thetas, words) -> None:
        self.ticks = np.asarray(ticks, dtype=np.int64)
        self.timestamps = np.asarray(timestamps, dtype=np.float64)
        self.thetas = np.asarray(thetas, dtype=np.float64)
        self.words = np.asarray(words, dtype=np.int64)

    def __len__(self) -> int:
        return len(self.ticks)

    @staticmethod
    def from_results(results: Sequence[StepResult], series: SensorSeries) -> "AnomalyTrace":
        ticks = [result.tick for result in results]
        return AnomalyTrace(
            ticks,
            series.timestamps[ticks],
            [result.theta for result in results],
            [result.map_word for result in results],
        )

    def to_csv(self, path: str):
        frame = pd.DataFrame({"k": self.ticks, "t": self.timestamps, "theta": self.thetas, "map_word": self.words})
        with atomic_path(path) as temp:
            frame.to_csv(temp, index=False, lineterminator="\n")


def read_anomaly_trace(path: str) -> AnomalyTrace:
    frame = pd.read_csv(path, float_precision="round_trip")
    missing = [column for column in TRACE_COLUMNS if column not in frame.columns]
    if missing:
        raise MissingColumn(f"{path} lacks anomaly trace columns {missing}")
    return AnomalyTrace(frame["k"], frame["t"], frame["theta"], frame["map_word"])
