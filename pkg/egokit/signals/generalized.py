from typing import List, Optional, Sequence

import numpy as np
from sklearn.preprocessing import StandardScaler

from egokit.constants import Constants
from egokit.errors import DimensionMismatch, SeriesTooShort
from .sensor_series import SensorSeries


class Scaler:
    """Per-channel affine normalization, fitted on training data and reused at test time."""

    mean: np.ndarray
    scale: np.ndarray

    def __init__(self, mean: Sequence[float], scale: Sequence[float]) -> None:
        self.mean = np.array(mean, dtype=np.float64).reshape(-1)
        self.scale = np.array(scale, dtype=np.float64).reshape(-1)
        if self.mean.shape != self.scale.shape:
            raise DimensionMismatch("Scaler mean and scale have different dimensions")

    @property
    def dimension(self) -> int:
        return len(self.mean)

    @staticmethod
    def fit(values: np.ndarray) -> "Scaler":
        # Constant channels get a unit scale instead of a division by zero
        scaler = StandardScaler().fit(np.asarray(values, dtype=np.float64))
        return Scaler(scaler.mean_, scaler.scale_)

    @staticmethod
    def identity(dimension: int) -> "Scaler":
        return Scaler(np.zeros(dimension), np.ones(dimension))

    def transform(self, values: np.ndarray) -> np.ndarray:
        values = np.asarray(values, dtype=np.float64)
        if values.shape[-1] != self.dimension:
            raise DimensionMismatch(f"Scaler expects {self.dimension} channels, got {values.shape[-1]}")
        return (values - self.mean) / self.scale

    def select(self, indices: Sequence[int]) -> "Scaler":
        return Scaler(self.mean[list(indices)], self.scale[list(indices)])


class GeneralizedSeries:
    """
    States stacked with their time derivatives: block l of row k holds the l-th derivative of the
    normalized channels at tick k.
    """

    dt: float
    order: int
    states: np.ndarray
    scaler: Scaler
    channels: List[str]

    def __init__(self, dt: float, order: int, states: np.ndarray, scaler: Scaler, channels: Sequence[str]) -> None:
        self.dt = dt
        self.order = order
        self.states = states
        self.scaler = scaler
        self.channels = list(channels)
        states.setflags(write=False)

    def __len__(self) -> int:
        return len(self.states)

    @property
    def dimension(self) -> int:
        """Channel count d, one derivative block has this many columns."""
        return len(self.channels)

    def block(self, order: int) -> np.ndarray:
        d = self.dimension
        return self.states[:, order * d : (order + 1) * d]


def backward_derivatives(signal: np.ndarray, order: int, dt: float) -> List[np.ndarray]:
    """Iterated first-order backward differences, block 0 is the signal itself. Tick 0 derivatives are zero."""
    blocks = [signal]
    for _ in range(order):
        previous = blocks[-1]
        derivative = np.zeros_like(previous)
        derivative[1:] = np.diff(previous, axis=0) / dt
        blocks.append(derivative)
    return blocks


def derive_generalized(
    series: SensorSeries, order: int = Constants.DEFAULT_ORDER, scaler: Optional[Scaler] = None
) -> GeneralizedSeries:
    """
    Builds generalized states up to derivative `order`.
    Without a scaler one is fitted on this series (training), otherwise the given one is applied (testing).
    """
    if order < 0:
        raise ValueError(f"Derivative order must be non-negative, got {order}")
    if len(series) < order + 1:
        raise SeriesTooShort(f"{len(series)} ticks cannot carry derivatives up to order {order}")

    if scaler is None:
        scaler = Scaler.fit(series.values)
    elif scaler.dimension != len(series.channels):
        raise DimensionMismatch(f"Scaler has {scaler.dimension} channels, series has {len(series.channels)}")

    normalized = scaler.transform(series.values)
    blocks = backward_derivatives(normalized, order, series.dt)
    return GeneralizedSeries(series.dt, order, np.hstack(blocks), scaler, series.channels)
