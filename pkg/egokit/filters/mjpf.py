from typing import List, Optional, Tuple

import numpy as np
from loguru import logger

from egokit.anomaly import GaussianDensity, batch_bhattacharyya, hellinger_batch
from egokit.constants import Constants
from egokit.errors import DimensionMismatch, InvalidParams, NumericalFailure, SeriesTooShort
from egokit.signals import SensorSeries
from .filter_settings import FilterSettings
from .filter_state import FilterState, PredictedMixture, StepResult
from .model_bundle import ModelBundle
from .resampling import effective_sample_size, systematic_resample

LOG_2PI = float(np.log(2.0 * np.pi))
JITTER_STEPS = (1e-9, 1e-6)


def _symmetrize(matrices: np.ndarray) -> np.ndarray:
    return 0.5 * (matrices + np.swapaxes(matrices, -1, -2))


def _cholesky(matrices: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """Batched Cholesky factor, retried with a small scaled jitter. Returns the factor and the factored matrices."""
    if not np.all(np.isfinite(matrices)):
        raise NumericalFailure("Innovation covariance has non-finite entries")
    try:
        return np.linalg.cholesky(matrices), matrices
    except np.linalg.LinAlgError:
        pass

    dim = matrices.shape[-1]
    scale = np.abs(np.trace(matrices, axis1=-2, axis2=-1)) / dim
    scale = np.where(scale > 0, scale, 1.0)
    for jitter in JITTER_STEPS:
        jittered = matrices + (jitter * scale)[:, None, None] * np.eye(dim)
        try:
            return np.linalg.cholesky(jittered), jittered
        except np.linalg.LinAlgError:
            continue
    raise NumericalFailure("Innovation covariance is not positive definite after regularization")


def init_filter(
    model: ModelBundle, n_particles: int, z0: np.ndarray, seed: int = 0, settings: Optional[FilterSettings] = None
) -> FilterState:
    """
    All particles start on the word of the first observation (derivatives zero) with that word's
    process covariance and equal weights. `z0` is in normalized units.
    """
    if n_particles < 1:
        raise InvalidParams(f"Particle filter needs at least one particle, got {n_particles}")
    settings = settings or FilterSettings(n_particles=n_particles, seed=seed)
    z0 = np.asarray(z0, dtype=np.float64).reshape(-1)
    if len(z0) != model.dimension:
        raise DimensionMismatch(f"First observation has {len(z0)} values, model expects {model.dimension}")

    state = np.zeros(model.state_dimension)
    state[: model.dimension] = z0
    word = int(model.vocabulary.encode_states(state)[0])

    return FilterState(
        model,
        settings,
        words=np.full(n_particles, word, dtype=np.int64),
        means=np.tile(state, (n_particles, 1)),
        covs=np.repeat(model.dynamics.process_covariances[word][None, :, :], n_particles, axis=0),
        weights=np.full(n_particles, 1.0 / n_particles),
        rng=np.random.default_rng(seed),
    )


def predict(state: FilterState) -> PredictedMixture:
    """Jumps every particle to a word drawn from its transition row, then runs the KF time update of that word."""
    model = state.model
    d = model.dimension
    count = len(state)

    words = model.transitions.sample_next(state.words, state.rng)
    centroids = model.dynamics.centroids[words]

    means = state.means.copy()
    if model.order >= 1:
        means[:, :d] += model.dt * centroids[:, 1]
        means[:, d:] = centroids[:, 1:].reshape(count, -1)

    a = model.state_transition
    covs = _symmetrize(a @ state.covs @ a.T + model.dynamics.process_covariances[words])

    state.words = words
    state.means = means
    state.covs = covs
    state.predicted = PredictedMixture(words, means, covs, state.weights.copy())
    return state.predicted


def update(state: FilterState, z: np.ndarray) -> StepResult:
    """
    KF measurement update per particle, reweighting by the observation likelihood, abnormality of the
    prediction against the observation, word re-anchoring and resampling when the ESS gets low.
    """
    if state.predicted is None:
        raise ValueError("update needs a predict for the same tick")
    model = state.model
    d = model.dimension
    count = len(state)
    z = np.asarray(z, dtype=np.float64).reshape(-1)
    if len(z) != d:
        raise DimensionMismatch(f"Observation has {len(z)} values, model expects {d}")

    predicted = state.predicted
    r = model.observation_covariance
    h = model.observation_matrix
    projected = predicted.means @ h.T
    projected_covs = h @ predicted.covs @ h.T

    chol, innovation_covs = _cholesky(projected_covs + r)
    innovations = z - projected
    solved = np.linalg.solve(chol, innovations[..., None])[..., 0]
    log_det = 2.0 * np.sum(np.log(np.diagonal(chol, axis1=1, axis2=2)), axis=1)
    log_likelihoods = -0.5 * (np.sum(solved ** 2, axis=1) + log_det + d * LOG_2PI)

    thetas = hellinger_batch(batch_bhattacharyya(projected, projected_covs, GaussianDensity(z, r)))
    theta = float(predicted.weights @ thetas)
    prediction_error = float(np.linalg.norm(h @ predicted.mean() - z))

    likelihoods = np.exp(log_likelihoods)
    diverged = bool(np.all(likelihoods < Constants.LIKELIHOOD_FLOOR))
    if diverged:
        weights = np.full(count, 1.0 / count)
        theta = float(thetas.max())
        logger.warning(f"All particle likelihoods underflowed at tick {state.tick + 1}, weights reset")
    else:
        weights = predicted.weights * np.maximum(likelihoods, Constants.LIKELIHOOD_FLOOR)
        weights /= weights.sum()

    cross = predicted.covs[:, :, :d]
    gains = np.swapaxes(np.linalg.solve(innovation_covs, np.swapaxes(cross, 1, 2)), 1, 2)
    means = predicted.means + (gains @ innovations[..., None])[..., 0]
    # Joseph form keeps the covariance positive semi-definite
    reduction = np.repeat(np.eye(model.state_dimension)[None, :, :], count, axis=0)
    reduction[:, :, :d] -= gains
    covs = _symmetrize(reduction @ predicted.covs @ np.swapaxes(reduction, 1, 2) + gains @ r @ np.swapaxes(gains, 1, 2))

    posterior_mean = weights @ means
    mass = np.bincount(predicted.words, weights=weights, minlength=model.vocabulary.word_count)
    map_word = int(np.argmax(mass))

    words = predicted.words
    if state.settings.anchor_words:
        words = model.vocabulary.encode_states(means)

    ess = effective_sample_size(weights)
    resampled = ess < state.settings.resample_threshold * count
    if resampled:
        keep = systematic_resample(weights, state.rng)
        words, means, covs = words[keep], means[keep], covs[keep]
        weights = np.full(count, 1.0 / count)

    state.words = np.asarray(words, dtype=np.int64)
    state.means = means
    state.covs = covs
    state.weights = weights
    state.predicted = None
    state.tick += 1

    return StepResult(
        state.tick,
        predicted,
        posterior_mean,
        map_word,
        min(max(theta, 0.0), 1.0),
        ess,
        resampled=resampled,
        diverged=diverged,
        prediction_error=prediction_error,
    )


def run_sequence(
    model: ModelBundle,
    series: SensorSeries,
    n_particles: Optional[int] = None,
    seed: Optional[int] = None,
    settings: Optional[FilterSettings] = None,
    keep_mixtures: bool = False,
) -> List[StepResult]:
    """
    Filters a whole series: the first tick initializes, every later tick is one predict and update.
    Predicted mixtures are dropped from the results unless `keep_mixtures` is set.
    """
    settings = settings or FilterSettings()
    n_particles = settings.n_particles if n_particles is None else n_particles
    seed = settings.seed if seed is None else seed
    if len(series) == 0:
        raise SeriesTooShort("Cannot filter an empty series")
    if series.dt > 0 and not np.isclose(series.dt, model.dt, rtol=1e-6):
        logger.warning(f"Series sampled every {series.dt}s, model trained at {model.dt}s")

    observations = model.normalize(series.select(model.channels).values)
    state = init_filter(model, n_particles, observations[0], seed, settings)
    results = []
    for z in observations[1:]:
        predict(state)
        result = update(state, z)
        if not keep_mixtures:
            result.predicted = None
        results.append(result)

    resamples = sum(result.resampled for result in results)
    logger.debug(f"Filtered {len(series)} ticks with {n_particles} particles, {resamples} resamples")
    return results
