from typing import List, Sequence

import numpy as np
import pandas as pd

from egokit.constants import Constants
from egokit.errors import (
    MissingColumn,
    MissingValue,
    NonMonotonicTime,
    NonUniformSampling,
    RaggedRow,
    UnknownChannel,
    DimensionMismatch,
    EmptyChannelSet,
)
from egokit.tools import atomic_path

TIME_COLUMN = "t"


class SensorSeries:
    """
    Uniformly sampled multichannel sensor recording.

    Values are stored as a K x S matrix, one column per named channel. Arrays are made read-only,
    so a series can be shared between filters and threads.
    """

    timestamps: np.ndarray
    channels: List[str]
    values: np.ndarray

    def __init__(self, timestamps: Sequence[float], channels: Sequence[str], values: np.ndarray) -> None:
        timestamps = np.array(timestamps, dtype=np.float64).reshape(-1)
        values = np.array(values, dtype=np.float64)
        if values.ndim == 1:
            values = values.reshape(-1, 1)

        if len(channels) == 0:
            raise EmptyChannelSet("A sensor series needs at least one channel")
        if len(set(channels)) != len(channels):
            raise UnknownChannel(f"Duplicate channel names: {list(channels)}")
        if values.shape != (len(timestamps), len(channels)):
            raise DimensionMismatch(
                f"values shape {values.shape} does not match {len(timestamps)} ticks x {len(channels)} channels"
            )
        if len(timestamps) == 0:
            raise MissingValue("A sensor series needs at least one tick")
        if not np.all(np.isfinite(values)) or not np.all(np.isfinite(timestamps)):
            raise MissingValue("Sensor series contains missing or non-finite values")

        steps = np.diff(timestamps)
        if np.any(steps <= 0):
            k = int(np.argmax(steps <= 0)) + 1
            raise NonMonotonicTime(f"Timestamps are not strictly increasing at tick {k}: {timestamps[k]}")
        if len(steps) > 0:
            dt = (timestamps[-1] - timestamps[0]) / len(steps)
            if np.any(np.abs(steps - dt) > Constants.SAMPLING_TOLERANCE * dt):
                raise NonUniformSampling(f"Timestamps are not uniformly spaced (dt={dt})")

        timestamps.setflags(write=False)
        values.setflags(write=False)
        self.timestamps = timestamps
        self.channels = list(channels)
        self.values = values

    def __len__(self) -> int:
        return len(self.timestamps)

    @property
    def dt(self) -> float:
        """Sampling period in seconds. Zero for a single tick series."""
        if len(self.timestamps) < 2:
            return 0.0
        return float((self.timestamps[-1] - self.timestamps[0]) / (len(self.timestamps) - 1))

    def channel_index(self, name: str) -> int:
        try:
            return self.channels.index(name)
        except ValueError:
            raise UnknownChannel(f"Channel '{name}' not in series channels {self.channels}")

    def column(self, name: str) -> np.ndarray:
        return self.values[:, self.channel_index(name)]

    def select(self, names: Sequence[str]) -> "SensorSeries":
        indices = [self.channel_index(name) for name in names]
        return SensorSeries(self.timestamps, list(names), self.values[:, indices])

    def to_frame(self) -> pd.DataFrame:
        frame = pd.DataFrame(self.values, columns=self.channels)
        frame.insert(0, TIME_COLUMN, self.timestamps)
        return frame

    def to_csv(self, path: str):
        """Writes the series in the same schema ingest_csv reads."""
        with atomic_path(path) as temp_path:
            self.to_frame().to_csv(temp_path, index=False, encoding="utf-8", lineterminator="\n")


def _parse_float(text: str) -> float:
    # float() round-trips what to_csv writes, pandas' own number parser may be off by one ulp
    try:
        return float(text)
    except ValueError:
        return np.nan


def ingest_csv(path: str, schema: Sequence[str]) -> SensorSeries:
    """
    Reads a sensor CSV with header `t,<chan1>,...,<chanN>`.

    Channels are returned in `schema` order, extra columns are ignored.
    """
    try:
        frame = pd.read_csv(path, sep=",", encoding="utf-8", dtype=str, keep_default_na=False)
    except pd.errors.ParserError as e:
        raise RaggedRow(f"{path}: {e}")
    except pd.errors.EmptyDataError:
        raise MissingColumn(f"{path}: file has no header")

    for name in [TIME_COLUMN] + list(schema):
        if name not in frame.columns:
            raise MissingColumn(f"{path}: column '{name}' missing from header {list(frame.columns)}")

    columns = [TIME_COLUMN] + list(schema)
    numeric = frame[columns].apply(lambda column: column.map(_parse_float))
    bad_rows = numeric.isna().any(axis=1).to_numpy()
    if bad_rows.any():
        # +2: one for the header, one for 1-based line numbers
        line = int(np.argmax(bad_rows)) + 2
        raise RaggedRow(f"{path}: line {line} has missing or unparseable fields")

    data = numeric.to_numpy(dtype=np.float64)
    return SensorSeries(data[:, 0], list(schema), data[:, 1:])


def read_csv_channels(path: str) -> List[str]:
    """Channel names of a sensor CSV in header order, without the time column."""
    header = pd.read_csv(path, sep=",", encoding="utf-8", nrows=0)
    if TIME_COLUMN not in header.columns:
        raise MissingColumn(f"{path}: column '{TIME_COLUMN}' missing from header")
    return [name for name in header.columns if name != TIME_COLUMN]
