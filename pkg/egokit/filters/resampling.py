import numpy as np


def effective_sample_size(weights: np.ndarray) -> float:
    return float(1.0 / np.sum(np.square(weights)))


def systematic_resample(weights: np.ndarray, rng: np.random.Generator) -> np.ndarray:
    """
    Indices of the particles to keep, one uniform draw shared by N evenly spaced positions.
    `weights` must be normalized.
    """
    count = len(weights)
    positions = (np.arange(count) + rng.random()) / count
    cumulative = np.cumsum(weights)
    cumulative[-1] = 1.0
    return np.searchsorted(cumulative, positions, side="right")
