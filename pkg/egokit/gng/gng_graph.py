from typing import List, Optional, Tuple

import numpy as np
from scipy.spatial.distance import cdist

from egokit.constants import Constants
from egokit.errors import DimensionMismatch
from .gng_params import GngParams


def regularize(covariance: np.ndarray) -> np.ndarray:
    """Adds 1e-6 * (trace / dim) * I. A zero covariance is regularized against a unit scale."""
    dim = covariance.shape[0]
    scale = np.trace(covariance) / dim
    if scale <= 0:
        scale = 1.0
    return covariance + Constants.COVARIANCE_REGULARIZATION * scale * np.eye(dim)


class GngGraph:
    """
    Trained Growing Neural Gas for one derivative order: the letters of one alphabet.

    Node ids are row indices 0..N-1. Edges are kept as (i, j, age) with i < j.
    Per-node statistics are filled by `compute_node_stats` after training.
    """

    centroids: np.ndarray
    errors: np.ndarray
    edges: List[Tuple[int, int, int]]
    params: GngParams
    counts: np.ndarray
    means: np.ndarray
    covariances: np.ndarray

    def __init__(
        self,
        centroids: np.ndarray,
        errors: Optional[np.ndarray] = None,
        edges: Optional[List[Tuple[int, int, int]]] = None,
        params: Optional[GngParams] = None,
    ) -> None:
        centroids = np.array(centroids, dtype=np.float64)
        if centroids.ndim == 1:
            centroids = centroids.reshape(-1, 1)
        self.centroids = centroids
        self.errors = np.zeros(len(centroids)) if errors is None else np.array(errors, dtype=np.float64)
        self.edges = sorted((min(i, j), max(i, j), age) for i, j, age in (edges or []))
        self.params = params or GngParams()
        self.counts = np.zeros(len(centroids), dtype=np.int64)
        self.means = centroids.copy()
        self.covariances = np.zeros((len(centroids), self.dimension, self.dimension))
        self._regularized: Optional[np.ndarray] = None

    def __getstate__(self):
        state = self.__dict__.copy()
        state.pop("_regularized", None)
        return state

    def __setstate__(self, state):
        self.__dict__.update(state)
        self._regularized = None

    @property
    def node_count(self) -> int:
        return len(self.centroids)

    @property
    def dimension(self) -> int:
        return self.centroids.shape[1]

    def neighbors(self, node: int) -> List[int]:
        result = []
        for i, j, _ in self.edges:
            if i == node:
                result.append(j)
            elif j == node:
                result.append(i)
        return sorted(result)

    @property
    def regularized_covariances(self) -> np.ndarray:
        if self._regularized is None:
            self._regularized = np.array([regularize(cov) for cov in self.covariances])
        return self._regularized

    def assign(self, points: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        """Nearest node id and squared Euclidean distance for every point. Ties go to the smallest id."""
        points = np.asarray(points, dtype=np.float64)
        if points.ndim == 1:
            points = points.reshape(1, -1)
        if points.shape[1] != self.dimension:
            raise DimensionMismatch(f"Points have dimension {points.shape[1]}, graph has {self.dimension}")
        distances = cdist(points, self.centroids, "sqeuclidean")
        # argmin returns the first minimum, which is the smallest node id
        nodes = np.argmin(distances, axis=1)
        return nodes, distances[np.arange(len(points)), nodes]

    def compute_node_stats(self, points: np.ndarray):
        """Assigns training points to their nearest node and stores count, mean and covariance per node."""
        points = np.asarray(points, dtype=np.float64)
        nodes, _ = self.assign(points)
        dim = self.dimension
        self.counts = np.bincount(nodes, minlength=self.node_count).astype(np.int64)
        self.means = self.centroids.copy()
        self.covariances = np.zeros((self.node_count, dim, dim))

        for node in range(self.node_count):
            members = points[nodes == node]
            if len(members) == 0:
                continue
            self.means[node] = members.mean(axis=0)
            centered = members - self.means[node]
            self.covariances[node] = centered.T @ centered / len(members)

        empty = [node for node in range(self.node_count) if self.counts[node] == 0]
        if empty:
            fallback = np.trace(np.cov(points.T, bias=True).reshape(dim, dim)) / dim
            for node in empty:
                donors = [n for n in self.neighbors(node) if self.counts[n] > 0]
                if donors:
                    scale = np.mean([np.trace(self.covariances[n]) for n in donors]) / dim
                else:
                    scale = fallback
                self.covariances[node] = scale * np.eye(dim)

        self._regularized = None


def nearest_node(graph: GngGraph, point: np.ndarray) -> Tuple[int, float]:
    point = np.asarray(point, dtype=np.float64).reshape(-1)
    if len(point) != graph.dimension:
        raise DimensionMismatch(f"Point has dimension {len(point)}, graph has {graph.dimension}")
    nodes, distances = graph.assign(point.reshape(1, -1))
    return int(nodes[0]), float(distances[0])


def quantization_error(graph: GngGraph, points: np.ndarray) -> float:
    """Mean squared distance from each point to its nearest node."""
    _, distances = graph.assign(points)
    return float(np.mean(distances))
