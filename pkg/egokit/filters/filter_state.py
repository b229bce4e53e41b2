from typing import List, Optional

import numpy as np

from .filter_settings import FilterSettings
from .model_bundle import ModelBundle


class Particle:
    word: int
    mean: np.ndarray
    cov: np.ndarray
    weight: float

    def __init__(self, word: int, mean: np.ndarray, cov: np.ndarray, weight: float) -> None:
        self.word = word
        self.mean = mean
        self.cov = cov
        self.weight = weight


class PredictedMixture:
    """Per-particle predicted Gaussians with their (pre-update) weights."""

    words: np.ndarray
    means: np.ndarray
    covs: np.ndarray
    weights: np.ndarray

    def __init__(self, words: np.ndarray, means: np.ndarray, covs: np.ndarray, weights: np.ndarray) -> None:
        self.words = words
        self.means = means
        self.covs = covs
        self.weights = weights

    def mean(self) -> np.ndarray:
        return self.weights @ self.means


class FilterState:
    """
    Particle set of one running filter, stored as stacked arrays.
    The random generator lives here so a filter is reproducible from its seed alone.
    """

    model: ModelBundle
    settings: FilterSettings
    words: np.ndarray
    means: np.ndarray
    covs: np.ndarray
    weights: np.ndarray
    rng: np.random.Generator
    tick: int
    predicted: Optional[PredictedMixture]

    def __init__(
        self,
        model: ModelBundle,
        settings: FilterSettings,
        words: np.ndarray,
        means: np.ndarray,
        covs: np.ndarray,
        weights: np.ndarray,
        rng: np.random.Generator,
    ) -> None:
        self.model = model
        self.settings = settings
        self.words = words
        self.means = means
        self.covs = covs
        self.weights = weights
        self.rng = rng
        self.tick = 0
        self.predicted = None

    def __len__(self) -> int:
        return len(self.words)

    @property
    def particles(self) -> List[Particle]:
        return [
            Particle(int(word), mean, cov, float(weight))
            for word, mean, cov, weight in zip(self.words, self.means, self.covs, self.weights)
        ]


class StepResult:
    tick: int
    predicted: Optional[PredictedMixture]
    posterior_mean: np.ndarray
    map_word: int
    theta: float
    ess: float
    resampled: bool
    diverged: bool
    prediction_error: float

    def __init__(
        self,
        tick: int,
        predicted: Optional[PredictedMixture],
        posterior_mean: np.ndarray,
        map_word: int,
        theta: float,
        ess: float,
        resampled: bool = False,
        diverged: bool = False,
        prediction_error: float = 0.0,
    ) -> None:
        self.tick = tick
        self.predicted = predicted
        self.posterior_mean = posterior_mean
        self.map_word = map_word
        self.theta = theta
        self.ess = ess
        self.resampled = resampled
        self.diverged = diverged
        self.prediction_error = prediction_error

    def __repr__(self) -> str:
        return f"StepResult(tick={self.tick}, theta={self.theta:.4f}, word={self.map_word}, ess={self.ess:.1f})"
