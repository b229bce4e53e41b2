import numpy as np
from scipy.linalg import block_diag

from .vocabulary import Vocabulary


class WordDynamics:
    """Local linear model of one word."""

    word: int
    centroids: np.ndarray
    process_covariance: np.ndarray

    def __init__(self, word: int, centroids: np.ndarray, process_covariance: np.ndarray) -> None:
        self.word = word
        self.centroids = centroids
        self.process_covariance = process_covariance

    @property
    def emission(self) -> np.ndarray:
        """Order-0 centroid."""
        return self.centroids[0]

    @property
    def drift(self) -> np.ndarray:
        """Order-1 centroid in normalized units per second, empty without derivatives."""
        if len(self.centroids) < 2:
            return np.zeros(0)
        return self.centroids[1]


class WordDynamicsTable:
    """
    Dynamics of every word of a vocabulary as stacked arrays, indexed by word id.
    centroids has shape (words, L+1, d), process_covariances (words, d(L+1), d(L+1)).
    """

    centroids: np.ndarray
    process_covariances: np.ndarray

    def __init__(self, vocab: Vocabulary) -> None:
        words = np.array(vocab.words, dtype=np.int64).reshape(vocab.word_count, len(vocab.alphabets))
        self.centroids = np.stack(
            [graph.centroids[words[:, order]] for order, graph in enumerate(vocab.alphabets)], axis=1
        )
        node_covariances = [graph.regularized_covariances for graph in vocab.alphabets]
        self.process_covariances = np.array(
            [block_diag(*(node_covariances[order][node] for order, node in enumerate(word))) for word in words]
        )

    def __len__(self) -> int:
        return len(self.centroids)

    @property
    def drift(self) -> np.ndarray:
        """(words, d) order-1 centroids, (words, 0) for an order-0 vocabulary."""
        if self.centroids.shape[1] < 2:
            return np.zeros((len(self), 0))
        return self.centroids[:, 1]

    def entry(self, word: int) -> WordDynamics:
        return WordDynamics(word, self.centroids[word], self.process_covariances[word])


def word_dynamics(vocab: Vocabulary, word: int) -> WordDynamics:
    vocab.check_word(word)
    word_nodes = vocab.word_tuple(word)
    centroids = np.stack([graph.centroids[node] for graph, node in zip(vocab.alphabets, word_nodes)])
    covariance = block_diag(
        *(graph.regularized_covariances[node] for graph, node in zip(vocab.alphabets, word_nodes))
    )
    return WordDynamics(word, centroids, covariance)
