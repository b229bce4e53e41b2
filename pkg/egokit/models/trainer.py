import numpy as np
from loguru import logger

from egokit.filters import ModelBundle, matched_observation_covariance
from egokit.signals import FeatureCase, SensorSeries, derive_generalized, select_feature
from egokit.vocabulary import WordDynamicsTable, build_vocabulary, default_smoothing, encode, learn_transitions
from .model_file import ModelFile, TrainingProvenance
from .training_settings import TrainingSettings


def train_feature_case(
    series: SensorSeries, case: FeatureCase, settings: TrainingSettings, data_hash: str = ""
) -> ModelFile:
    """
    Learns the switching model of one feature-case from a training series.
    Without a fixed observation std the observation noise is matched to the model's own predicted spread.
    """
    selected = select_feature(series, case)
    gen = derive_generalized(selected, settings.order)
    vocab = build_vocabulary(gen, settings.gng)
    words = encode(gen, vocab)

    smoothing = settings.smoothing
    if smoothing is None:
        smoothing = default_smoothing(len(words), vocab.word_count)
    transitions = learn_transitions(words, vocab, smoothing)

    dynamics = WordDynamicsTable(vocab)
    if settings.observation_std is None:
        observation_covariance = matched_observation_covariance(dynamics, words, selected.dt)
    else:
        observation_covariance = settings.observation_std ** 2 * np.eye(len(selected.channels))

    bundle = ModelBundle(
        selected.channels, selected.dt, gen.scaler, vocab, transitions, observation_covariance, dynamics
    )
    provenance = TrainingProvenance(
        settings.gng.to_dict(), settings.gng.seed, settings.order, smoothing, data_hash, len(series)
    )
    noise = ", ".join(f"{std:.3f}" for std in np.sqrt(np.diag(observation_covariance)))
    logger.info(f"Trained {case.id}: {vocab.word_count} words, {len(vocab.observed_words)} observed, noise std {noise}")
    return ModelFile(case.id, bundle, provenance)
