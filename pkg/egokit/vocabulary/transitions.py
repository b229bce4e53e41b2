from typing import Optional, Sequence

import numpy as np

from egokit.constants import Constants
from egokit.errors import SequenceTooShort, UnknownWord
from .vocabulary import Vocabulary


def default_smoothing(length: int, word_count: int) -> float:
    return max(Constants.SMOOTHING_RATE * length / word_count, Constants.SMOOTHING_FLOOR)


class TransitionModel:
    """Row-stochastic word transition matrix, rows are the current word."""

    matrix: np.ndarray
    smoothing: float

    def __init__(self, matrix: np.ndarray, smoothing: float) -> None:
        self.matrix = np.asarray(matrix, dtype=np.float64)
        self.smoothing = smoothing

    @property
    def word_count(self) -> int:
        return len(self.matrix)

    def row(self, word: int) -> np.ndarray:
        if not 0 <= word < self.word_count:
            raise UnknownWord(f"Word id {word} outside 0..{self.word_count - 1}")
        return self.matrix[word]

    def sample_next(self, words: np.ndarray, rng: np.random.Generator) -> np.ndarray:
        """Draws one successor per entry of `words` with a single uniform each."""
        cumulative = np.cumsum(self.matrix[words], axis=1)
        uniforms = rng.random(len(words)) * cumulative[:, -1]
        successors = np.sum(cumulative <= uniforms[:, None], axis=1)
        return np.minimum(successors, self.word_count - 1)


def learn_transitions(
    sequence: Sequence[int], vocab: Vocabulary, alpha: Optional[float] = None
) -> TransitionModel:
    """
    First order transition frequencies with Laplace smoothing `alpha`.
    Rows of words never left in `sequence` are uniform.
    """
    sequence = np.asarray(sequence, dtype=np.int64)
    if len(sequence) < 2:
        raise SequenceTooShort(f"Transitions need at least 2 words, got {len(sequence)}")
    size = vocab.word_count
    if sequence.min() < 0 or sequence.max() >= size:
        raise UnknownWord(f"Sequence holds word ids outside 0..{size - 1}")
    if alpha is None:
        alpha = default_smoothing(len(sequence), size)
    if alpha < 0:
        raise ValueError(f"Smoothing must be non-negative, got {alpha}")

    counts = np.zeros((size, size))
    np.add.at(counts, (sequence[:-1], sequence[1:]), 1.0)

    totals = counts.sum(axis=1, keepdims=True)
    matrix = np.full((size, size), 1.0 / size)
    visited = totals[:, 0] + alpha * size > 0
    matrix[visited] = (counts[visited] + alpha) / (totals[visited] + alpha * size)
    return TransitionModel(matrix, alpha)
