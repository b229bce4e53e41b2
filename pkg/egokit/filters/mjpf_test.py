import numpy as np
import pytest

from egokit.errors import DimensionMismatch, InvalidParams
from egokit.gng import GngGraph, GngParams
from egokit.signals import Scaler, SensorSeries, derive_generalized
from egokit.vocabulary import Vocabulary, WordDynamicsTable, build_vocabulary, encode, learn_transitions
from .filter_settings import FilterSettings
from .mjpf import init_filter, predict, run_sequence, update
from .model_bundle import ModelBundle, matched_observation_covariance


def alphabet(centroids, samples=None) -> GngGraph:
    graph = GngGraph(np.array(centroids, dtype=float))
    graph.compute_node_stats(graph.centroids if samples is None else np.asarray(samples, dtype=float))
    return graph


def bundle(alphabets, sequence, observation_cov, dt: float = 0.1) -> ModelBundle:
    vocab = Vocabulary(alphabets)
    d = vocab.dimension
    return ModelBundle(
        [f"c{i}" for i in range(d)],
        dt,
        Scaler.identity(d),
        vocab,
        learn_transitions(sequence, vocab, alpha=0.0),
        observation_cov,
    )


def static_bundle(observation_std: float = 1e-4) -> ModelBundle:
    """One word, at rest."""
    return bundle([alphabet([[2.0]]), alphabet([[0.0]])], [0, 0], [[observation_std ** 2]])


def spread_bundle() -> ModelBundle:
    """One order-0 word whose process covariance is known, observation noise equal to the predicted spread."""
    rng = np.random.default_rng(0)
    graph = alphabet([[0.0]], rng.normal(0.0, 0.01, size=(200, 1)))
    q = graph.regularized_covariances[0]
    return bundle([graph], [0, 0], 2.0 * q)


def learned_bundle():
    t = np.arange(300) * 0.1
    values = np.column_stack([np.sin(0.8 * t), 0.5 * np.cos(0.4 * t)])
    series = SensorSeries(t, ["c0", "c1"], values)
    gen = derive_generalized(series, order=1)
    vocab = build_vocabulary(gen, GngParams(max_nodes=5, epochs=3))
    words = encode(gen, vocab)
    dynamics = WordDynamicsTable(vocab)
    noise = matched_observation_covariance(dynamics, words, series.dt)
    model = ModelBundle(
        series.channels, series.dt, gen.scaler, vocab, learn_transitions(words, vocab), noise, dynamics
    )
    return model, series


class TestModelBundle:
    def test_observation_matrix_picks_position_block(self):
        model = bundle([alphabet([[0.0, 0.0]]), alphabet([[1.0, 0.0]])], [0, 0], 0.01 * np.eye(2))

        assert np.array_equal(model.observation_matrix, [[1.0, 0.0, 0.0, 0.0], [0.0, 1.0, 0.0, 0.0]])

    def test_matched_noise_of_single_word(self):
        rng = np.random.default_rng(5)
        positions = alphabet([[0.0]], rng.normal(0.0, 0.1, size=(100, 1)))
        rates = alphabet([[0.0]], rng.normal(0.0, 1.0, size=(100, 1)))
        dynamics = WordDynamicsTable(Vocabulary([positions, rates]))

        noise = matched_observation_covariance(dynamics, [0, 0, 0], dt=0.1)

        q = dynamics.process_covariances[0]
        assert noise[0, 0] == pytest.approx(2.0 * (q[0, 0] + 0.01 * q[1, 1]))

    def test_matched_noise_is_geometric_mean_over_ticks(self):
        rng = np.random.default_rng(6)
        samples = np.concatenate([rng.normal(0.0, 0.1, size=(100, 1)), rng.normal(10.0, 1.0, size=(100, 1))])
        dynamics = WordDynamicsTable(Vocabulary([alphabet([[0.0], [10.0]], samples)]))

        noise = matched_observation_covariance(dynamics, [0, 0, 1, 1], dt=0.1)

        q = dynamics.process_covariances[:, 0, 0]
        assert noise[0, 0] == pytest.approx(2.0 * np.sqrt(q[0] * q[1]))


class TestInitFilter:
    def test_uniform_weights(self):
        state = init_filter(static_bundle(), 100, [2.0])

        assert len(state) == 100
        assert np.allclose(state.weights, 0.01)

    def test_particles_start_on_word_of_first_observation(self):
        model = bundle([alphabet([[0.0], [5.0], [9.0]])], [0, 1, 2], [[0.01]])

        state = init_filter(model, 10, [5.2])

        assert all(particle.word == 1 for particle in state.particles)
        assert np.allclose(state.covs[0], model.dynamics.process_covariances[1])

    def test_zero_particles_raises(self):
        with pytest.raises(InvalidParams):
            init_filter(static_bundle(), 0, [2.0])

    def test_wrong_dimension_raises(self):
        with pytest.raises(DimensionMismatch):
            init_filter(static_bundle(), 10, [2.0, 1.0])


class TestPredict:
    def test_static_word_keeps_mean(self):
        state = init_filter(static_bundle(), 5, [2.0])

        mixture = predict(state)

        assert np.allclose(mixture.means, [2.0, 0.0])

    def test_drift_moves_position_by_one_euler_step(self):
        model = bundle([alphabet([[0.0, 0.0]]), alphabet([[1.0, 0.0]])], [0, 0], 0.01 * np.eye(2), dt=0.1)
        state = init_filter(model, 4, [0.0, 0.0])

        mixture = predict(state)

        assert np.allclose(mixture.means[:, :2], [0.1, 0.0])
        assert np.allclose(mixture.means[:, 2:], [1.0, 0.0])

    def test_one_hot_row_moves_every_particle(self):
        model = bundle([alphabet([[0.0], [5.0]])], [0, 1, 1], [[0.01]])
        state = init_filter(model, 50, [0.0])

        mixture = predict(state)

        assert np.all(mixture.words == 1)

    def test_predicted_covariance_grows_by_process_noise(self):
        model = spread_bundle()
        state = init_filter(model, 3, [0.0])

        mixture = predict(state)

        assert np.allclose(mixture.covs, 2.0 * model.dynamics.process_covariances[0])


class TestUpdate:
    def test_perfect_match_gives_low_theta(self):
        state = init_filter(spread_bundle(), 20, [0.0])
        predict(state)

        result = update(state, [0.0])

        assert result.theta < 0.05

    def test_far_observation_gives_high_theta(self):
        model = spread_bundle()
        state = init_filter(model, 20, [0.0])
        mixture = predict(state)
        sigma = np.sqrt(mixture.covs[0, 0, 0])

        result = update(state, [100.0 * sigma])

        assert result.theta > 0.99

    def test_underflow_resets_weights(self):
        state = init_filter(spread_bundle(), 20, [0.0])
        predict(state)

        result = update(state, [1e6])

        assert result.diverged
        assert result.theta == pytest.approx(1.0)
        assert np.allclose(state.weights, 1.0 / 20)

    def test_prediction_error_is_distance_to_predicted_mean(self):
        state = init_filter(static_bundle(), 5, [2.0])
        predict(state)

        result = update(state, [2.5])

        assert result.prediction_error == pytest.approx(0.5)

    def test_update_without_predict_raises(self):
        state = init_filter(static_bundle(), 5, [2.0])

        with pytest.raises(ValueError):
            update(state, [2.0])

    def test_constant_signal_is_tracked_exactly(self):
        model = static_bundle(observation_std=1e-4)
        state = init_filter(model, 10, [2.5])

        for _ in range(50):
            predict(state)
            result = update(state, [2.5])

        assert abs(result.posterior_mean[0] - 2.5) < 1e-6

    def test_step_change_converges(self):
        model = static_bundle(observation_std=1e-4)
        state = init_filter(model, 10, [2.0])

        for _ in range(50):
            predict(state)
            result = update(state, [2.5])

        assert abs(result.posterior_mean[0] - 2.5) < 1e-6

    def test_weights_and_theta_stay_valid(self):
        model, series = learned_bundle()
        rng = np.random.default_rng(3)
        observations = model.normalize(series.values) + rng.normal(0.0, 0.1, size=series.values.shape)
        state = init_filter(model, 100, observations[0], seed=4)

        for z in observations[1:]:
            predict(state)
            result = update(state, z)
            assert state.weights.sum() == pytest.approx(1.0, abs=1e-9)
            assert 0.0 <= result.theta <= 1.0
            assert np.all(np.linalg.eigvalsh(state.covs) > 0)


class TestRunSequence:
    def test_one_result_per_tick_after_the_first(self):
        model, series = learned_bundle()

        results = run_sequence(model, series, n_particles=50, seed=1)

        assert len(results) == len(series) - 1
        assert [result.tick for result in results] == list(range(1, len(series)))
        assert all(result.predicted is None for result in results)

    def test_same_seed_gives_identical_traces(self):
        model, series = learned_bundle()

        first = [r.theta for r in run_sequence(model, series, n_particles=50, seed=7)]
        second = [r.theta for r in run_sequence(model, series, n_particles=50, seed=7)]

        assert first == second

    def test_training_series_looks_normal(self):
        model, series = learned_bundle()

        results = run_sequence(model, series, n_particles=100, seed=0)

        assert np.mean([r.theta for r in results]) < 0.3

    def test_mixtures_can_be_kept(self):
        model, series = learned_bundle()

        results = run_sequence(model, series, settings=FilterSettings(n_particles=20), keep_mixtures=True)

        assert results[0].predicted.means.shape == (20, 4)
