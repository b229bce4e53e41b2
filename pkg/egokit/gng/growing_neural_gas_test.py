import jsonpickle
import jsonpickle.ext.numpy as jsonpickle_numpy
import numpy as np
import pytest
from sklearn.cluster import KMeans

from egokit.errors import DimensionMismatch, InvalidParams, TooFewSamples
from .gng_graph import GngGraph, nearest_node, quantization_error
from .gng_params import GngParams
from .growing_neural_gas import train_gng

jsonpickle_numpy.register_handlers()

CENTERS = np.array([[0.0, 0.0], [10.0, 10.0]])


def two_blobs(seed: int = 3, per_blob: int = 500) -> np.ndarray:
    rng = np.random.default_rng(seed)
    points = np.vstack([rng.normal(center, 0.1, size=(per_blob, 2)) for center in CENTERS])
    return points[rng.permutation(len(points))]


class TestTrainGng:
    def test_two_blobs_are_covered(self):
        points = two_blobs()

        graph = train_gng(points, GngParams(max_nodes=4, seed=1))

        to_centers = np.linalg.norm(graph.centroids[:, None, :] - CENTERS[None, :, :], axis=2)
        assert np.all(to_centers.min(axis=1) < 1.0)
        assert np.all(to_centers.min(axis=0) < 1.0)

    def test_node_assignments_agree_with_kmeans(self):
        points = two_blobs()
        labels = KMeans(n_clusters=2, n_init=10, random_state=0).fit_predict(points)

        graph = train_gng(points, GngParams(max_nodes=4, seed=1))
        nodes, _ = graph.assign(points)

        for node in np.unique(nodes):
            assert len(np.unique(labels[nodes == node])) == 1

    def test_graph_invariants_hold(self):
        params = GngParams(max_nodes=6, max_age=20, seed=5)

        graph = train_gng(two_blobs(), params)

        assert 2 <= graph.node_count <= params.max_nodes
        for i, j, age in graph.edges:
            assert 0 <= i < j < graph.node_count
            assert 0 <= age <= params.max_age

    def test_identical_points_give_coincident_centroids(self):
        points = np.tile([1.0, -2.0], (50, 1))

        graph = train_gng(points, GngParams(max_nodes=4))

        assert graph.node_count >= 2
        assert np.allclose(graph.centroids, [1.0, -2.0], atol=1e-9)
        assert np.all(np.linalg.eigvalsh(graph.regularized_covariances) > 0)

    def test_single_sample_raises(self):
        with pytest.raises(TooFewSamples):
            train_gng(np.array([[1.0, 2.0]]))

    def test_invalid_learning_rates_raise(self):
        with pytest.raises(InvalidParams):
            train_gng(two_blobs(), GngParams(eps_b=0.01, eps_n=0.1))

    def test_same_seed_serializes_identically(self):
        points = two_blobs()

        first = jsonpickle.encode(train_gng(points, GngParams(seed=11)))
        second = jsonpickle.encode(train_gng(points, GngParams(seed=11)))

        assert first == second

    def test_quantization_error_does_not_grow_with_more_nodes(self):
        rng = np.random.default_rng(0)
        points = rng.uniform(0.0, 10.0, size=(1000, 2))

        errors = [quantization_error(train_gng(points, GngParams(max_nodes=n, seed=2)), points) for n in (2, 4, 8)]

        assert errors[1] <= errors[0] * 1.05
        assert errors[2] <= errors[1] * 1.05

    def test_one_dimensional_points_are_accepted(self):
        points = np.concatenate([np.zeros(20), np.ones(20) * 5.0])

        graph = train_gng(points, GngParams(max_nodes=2))

        assert graph.dimension == 1
        assert graph.centroids.min() < 1.0
        assert graph.centroids.max() > 4.9


class TestNodeStats:
    def test_counts_cover_all_points(self):
        points = two_blobs()

        graph = train_gng(points, GngParams(max_nodes=4, seed=1))

        assert graph.counts.sum() == len(points)

    def test_means_and_covariances_match_assignment(self):
        points = two_blobs()
        graph = train_gng(points, GngParams(max_nodes=4, seed=1))
        nodes, _ = graph.assign(points)

        for node in range(graph.node_count):
            members = points[nodes == node]
            if len(members) == 0:
                continue
            assert np.allclose(graph.means[node], members.mean(axis=0))
            assert np.allclose(graph.covariances[node], np.cov(members.T, bias=True))
            assert np.all(np.linalg.eigvalsh(graph.covariances[node]) >= -1e-12)

    def test_empty_node_borrows_neighbor_spread(self):
        graph = GngGraph(np.array([[0.0], [1.0], [50.0]]), edges=[(0, 1, 0), (1, 2, 0)])
        points = np.array([[-0.5], [0.5], [0.6], [1.4]])

        graph.compute_node_stats(points)

        assert graph.counts.tolist() == [2, 2, 0]
        assert graph.covariances[2, 0, 0] == pytest.approx(graph.covariances[1, 0, 0])


class TestNearestNode:
    def test_tie_goes_to_smallest_id(self):
        graph = GngGraph(np.array([[2.0], [0.0], [4.0]]))

        assert nearest_node(graph, np.array([1.0])) == (0, 1.0)
        assert nearest_node(graph, np.array([3.0])) == (0, 1.0)

    def test_returns_squared_distance(self):
        graph = GngGraph(np.array([[0.0, 0.0], [3.0, 4.0]]))

        node, distance = nearest_node(graph, np.array([3.0, 4.5]))

        assert node == 1
        assert distance == pytest.approx(0.25)

    def test_wrong_dimension_raises(self):
        graph = GngGraph(np.array([[0.0, 0.0], [1.0, 1.0]]))

        with pytest.raises(DimensionMismatch):
            nearest_node(graph, np.array([1.0, 2.0, 3.0]))
