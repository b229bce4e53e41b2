from typing import List, Optional, Sequence

import numpy as np
from scipy.stats import gmean

from egokit.constants import Constants
from egokit.errors import DimensionMismatch, NotPositiveDefinite
from egokit.signals import Scaler
from egokit.vocabulary import TransitionModel, Vocabulary, WordDynamicsTable


class ModelBundle:
    """
    Everything one feature-case filter needs: vocabulary, word transitions, per-word dynamics,
    the normalization of its channels and the observation noise.
    Observations are always in normalized units.
    """

    channels: List[str]
    dt: float
    scaler: Scaler
    vocabulary: Vocabulary
    transitions: TransitionModel
    dynamics: WordDynamicsTable
    observation_covariance: np.ndarray

    def __init__(
        self,
        channels: Sequence[str],
        dt: float,
        scaler: Scaler,
        vocabulary: Vocabulary,
        transitions: TransitionModel,
        observation_covariance: Optional[np.ndarray] = None,
        dynamics: Optional[WordDynamicsTable] = None,
    ) -> None:
        d = vocabulary.dimension
        if len(channels) != d or scaler.dimension != d:
            raise DimensionMismatch(f"{len(channels)} channels and scaler of {scaler.dimension} for {d}-d alphabets")
        if transitions.word_count != vocabulary.word_count:
            raise DimensionMismatch(f"{transitions.word_count} transition rows for {vocabulary.word_count} words")
        if observation_covariance is None:
            observation_covariance = Constants.OBSERVATION_STD ** 2 * np.eye(d)
        observation_covariance = np.atleast_2d(np.asarray(observation_covariance, dtype=np.float64))
        if observation_covariance.shape != (d, d):
            raise DimensionMismatch(f"Observation covariance {observation_covariance.shape} for {d} channels")
        if not np.allclose(observation_covariance, observation_covariance.T):
            raise NotPositiveDefinite("Observation covariance is not symmetric")
        try:
            np.linalg.cholesky(observation_covariance)
        except np.linalg.LinAlgError as e:
            raise NotPositiveDefinite(f"Observation covariance is not positive definite: {e}") from e

        self.channels = list(channels)
        self.dt = dt
        self.scaler = scaler
        self.vocabulary = vocabulary
        self.transitions = transitions
        self.observation_covariance = observation_covariance
        self.dynamics = dynamics if dynamics is not None else WordDynamicsTable(vocabulary)

    @property
    def order(self) -> int:
        return self.vocabulary.order

    @property
    def dimension(self) -> int:
        return self.vocabulary.dimension

    @property
    def state_dimension(self) -> int:
        return self.vocabulary.state_dimension

    @property
    def observation_matrix(self) -> np.ndarray:
        """H = [I | 0], picks the order-0 block."""
        h = np.zeros((self.dimension, self.state_dimension))
        h[:, : self.dimension] = np.eye(self.dimension)
        return h

    @property
    def state_transition(self) -> np.ndarray:
        """
        A = [[I, dt I, 0..], [0, ..]]: positions integrate the first derivative, derivative blocks are
        replaced by the word centroids and carry no state of their own. Identity for order 0.
        """
        d, size = self.dimension, self.state_dimension
        a = np.zeros((size, size))
        a[:d, :d] = np.eye(d)
        if self.order >= 1:
            a[:d, d : 2 * d] = self.dt * np.eye(d)
        return a

    def normalize(self, values: np.ndarray) -> np.ndarray:
        return self.scaler.transform(values)


def matched_observation_covariance(dynamics: WordDynamicsTable, words: np.ndarray, dt: float) -> np.ndarray:
    """
    Diagonal observation covariance matched to the predicted spread of the order-0 block on training data.

    Each tick adds Q_00 + dt² Q_11 of its word to the order-0 block, and a filter whose R equals its predicted
    spread settles at twice that. Per channel, R is the geometric mean of that over the training ticks.
    """
    words = np.asarray(words, dtype=np.int64).reshape(-1)
    if len(words) == 0:
        raise ValueError("Observation noise needs at least one training word")
    d = dynamics.centroids.shape[2]
    covs = dynamics.process_covariances[words]
    spread = np.diagonal(covs[:, :d, :d], axis1=1, axis2=2).copy()
    if dynamics.centroids.shape[1] >= 2:
        spread += dt ** 2 * np.diagonal(covs[:, d : 2 * d, d : 2 * d], axis1=1, axis2=2)
    return np.diag(2.0 * gmean(spread, axis=0))
