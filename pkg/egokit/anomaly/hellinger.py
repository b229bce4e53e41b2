import numpy as np

from egokit.constants import Constants
from egokit.errors import CoefficientOutOfRange, DimensionMismatch, NotPositiveDefinite
from .gaussian_density import GaussianDensity


def bhattacharyya_distance(p: GaussianDensity, q: GaussianDensity) -> float:
    """D_B = 1/8 dm' S^-1 dm + 1/2 ln(det S / sqrt(det P det Q)) with S = (P + Q) / 2."""
    if p.dimension != q.dimension:
        raise DimensionMismatch(f"Cannot compare Gaussians of dimension {p.dimension} and {q.dimension}")
    average = GaussianDensity(p.mean, 0.5 * (p.cov + q.cov))
    diff = p.mean - q.mean
    # Mahalanobis term through the Cholesky factor of the average covariance
    solved = np.linalg.solve(average.cholesky, diff)
    mahalanobis = float(solved @ solved)
    return 0.125 * mahalanobis + 0.5 * (average.log_det - 0.5 * (p.log_det + q.log_det))


def bhattacharyya_gaussian(p: GaussianDensity, q: GaussianDensity) -> float:
    """Bhattacharyya coefficient, the overlap integral of two Gaussian densities."""
    return float(np.exp(-bhattacharyya_distance(p, q)))


def batch_bhattacharyya(means: np.ndarray, covs: np.ndarray, evidence: GaussianDensity) -> np.ndarray:
    """
    Coefficients of N Gaussians (means (N, d), covs (N, d, d)) against one evidence Gaussian.
    Used per tick by the particle filter.
    """
    means = np.asarray(means, dtype=np.float64)
    covs = np.asarray(covs, dtype=np.float64)
    if means.shape[1:] != (evidence.dimension,) or covs.shape[1:] != (evidence.dimension, evidence.dimension):
        raise DimensionMismatch(f"Batch of shape {means.shape} does not match evidence dimension {evidence.dimension}")

    try:
        own_chol = np.linalg.cholesky(covs)
        average_chol = np.linalg.cholesky(0.5 * (covs + evidence.cov))
    except np.linalg.LinAlgError as e:
        raise NotPositiveDefinite(f"Batch covariance is not positive definite: {e}") from e

    own_log_det = 2.0 * np.sum(np.log(np.diagonal(own_chol, axis1=1, axis2=2)), axis=1)
    average_log_det = 2.0 * np.sum(np.log(np.diagonal(average_chol, axis1=1, axis2=2)), axis=1)
    diff = means - evidence.mean
    solved = np.linalg.solve(average_chol, diff[..., None])[..., 0]
    distances = 0.125 * np.sum(solved ** 2, axis=1) + 0.5 * (
        average_log_det - 0.5 * (own_log_det + evidence.log_det)
    )
    return np.exp(-distances)


def hellinger(coefficient: float) -> float:
    """Hellinger distance sqrt(1 - coefficient). Coefficients within 1e-12 of [0, 1] are clamped."""
    return float(hellinger_batch(np.array([coefficient]))[0])


def hellinger_batch(coefficients: np.ndarray) -> np.ndarray:
    coefficients = np.asarray(coefficients, dtype=np.float64)
    tolerance = Constants.COEFFICIENT_TOLERANCE
    if np.any(~np.isfinite(coefficients)) or np.any(coefficients < -tolerance) or np.any(coefficients > 1 + tolerance):
        raise CoefficientOutOfRange(f"Bhattacharyya coefficients must lie in [0, 1], got {coefficients}")
    return np.sqrt(1.0 - np.clip(coefficients, 0.0, 1.0))
