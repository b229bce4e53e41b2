from configparser import ConfigParser

import numpy as np
import pytest

from egokit.config import get_config
from egokit.errors import InvalidParams, UnknownChannel
from egokit.filters import ModelBundle, matched_observation_covariance, run_sequence
from egokit.gng import GngParams
from egokit.scenarios import ScenarioParams, gen_perimeter
from egokit.signals import FeatureCase, SensorSeries, derive_generalized
from egokit.vocabulary import default_smoothing
from .trainer import train_feature_case
from .training_settings import TrainingSettings


@pytest.fixture(scope="module")
def perimeter() -> SensorSeries:
    return gen_perimeter(ScenarioParams(laps=1)).series


def small_settings(**kwargs) -> TrainingSettings:
    return TrainingSettings(gng=GngParams(max_nodes=4, epochs=2), **kwargs)


class TestTrainFeatureCase:
    def test_model_carries_feature_channels(self, perimeter):
        case = FeatureCase.parse("V", perimeter.channels)

        model = train_feature_case(perimeter, case, small_settings())

        assert model.feature_id == "V"
        assert model.channels == ["vel"]
        assert model.order == 1
        assert model.dt == pytest.approx(0.1)
        assert model.observation_covariance.shape == (1, 1)

    def test_transition_rows_sum_to_one(self, perimeter):
        case = FeatureCase.parse("SVP", perimeter.channels)

        model = train_feature_case(perimeter, case, small_settings())

        assert np.allclose(model.transitions.matrix.sum(axis=1), 1.0, atol=1e-9)

    def test_default_smoothing_is_recorded(self, perimeter):
        case = FeatureCase.parse("S", perimeter.channels)

        model = train_feature_case(perimeter, case, small_settings())

        expected = default_smoothing(len(perimeter), model.vocabulary.word_count)
        assert model.provenance.smoothing == pytest.approx(expected)
        assert model.provenance.ticks == len(perimeter)

    def test_explicit_smoothing_is_used(self, perimeter):
        case = FeatureCase.parse("S", perimeter.channels)

        model = train_feature_case(perimeter, case, small_settings(smoothing=0.5))

        assert model.transitions.smoothing == 0.5

    def test_observation_noise_matches_dynamics(self, perimeter):
        case = FeatureCase.parse("SV", perimeter.channels)

        model = train_feature_case(perimeter, case, small_settings())

        gen = derive_generalized(perimeter.select(case.channels), model.order, model.scaler)
        words = model.vocabulary.encode_states(gen.states)
        expected = matched_observation_covariance(model.dynamics, words, model.dt)
        assert np.allclose(model.observation_covariance, expected)
        assert np.count_nonzero(model.observation_covariance - np.diag(np.diag(model.observation_covariance))) == 0

    def test_fixed_observation_std(self, perimeter):
        case = FeatureCase.parse("SV", perimeter.channels)

        model = train_feature_case(perimeter, case, small_settings(observation_std=0.05))

        assert np.allclose(model.observation_covariance, 0.0025 * np.eye(2))

    def test_missing_channel(self, perimeter):
        case = FeatureCase("P", [2], ["power"])

        with pytest.raises(UnknownChannel):
            train_feature_case(perimeter.select(["steer", "vel"]), case, small_settings())


class TestTrainingSettings:
    def test_packaged_defaults(self):
        settings = TrainingSettings.from_config(get_config(local=False))

        assert settings.order == 1
        assert settings.smoothing is None
        assert settings.gng.max_nodes == 10
        assert settings.observation_std is None

    def test_fixed_observation_std(self):
        config = ConfigParser()
        config.read_dict({"filter": {"observation_std": "0.2"}, "vocabulary": {"smoothing": "AUTO"}})

        settings = TrainingSettings.from_config(config)

        assert settings.observation_std == 0.2
        assert settings.smoothing is None

    def test_negative_smoothing_is_rejected(self):
        config = ConfigParser()
        config.read_dict({"vocabulary": {"smoothing": "-1"}})

        with pytest.raises(InvalidParams):
            TrainingSettings.from_config(config)


class TestTrainedModelReplay:
    def test_matched_noise_lowers_training_theta(self):
        series = gen_perimeter(ScenarioParams(laps=2)).series
        case = FeatureCase.parse("SVP", series.channels)
        model = train_feature_case(series, case, TrainingSettings())
        matched = model.to_bundle()
        fixed = ModelBundle(
            model.channels,
            model.dt,
            model.scaler,
            model.vocabulary,
            model.transitions,
            0.0025 * np.eye(3),
            model.dynamics,
        )

        matched_theta = np.mean([r.theta for r in run_sequence(matched, series, n_particles=100, seed=0)])
        fixed_theta = np.mean([r.theta for r in run_sequence(fixed, series, n_particles=100, seed=0)])

        assert matched_theta < fixed_theta - 0.1
