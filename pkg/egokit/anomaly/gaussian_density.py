import numpy as np

from egokit.errors import DimensionMismatch, NotPositiveDefinite


class GaussianDensity:
    mean: np.ndarray
    cov: np.ndarray

    def __init__(self, mean, cov) -> None:
        self.mean = np.atleast_1d(np.asarray(mean, dtype=np.float64))
        self.cov = np.atleast_2d(np.asarray(cov, dtype=np.float64))
        d = len(self.mean)
        if self.mean.ndim != 1 or self.cov.shape != (d, d):
            raise DimensionMismatch(f"Mean of shape {self.mean.shape} does not fit covariance {self.cov.shape}")
        if not np.all(np.isfinite(self.mean)) or not np.all(np.isfinite(self.cov)):
            raise NotPositiveDefinite("Gaussian has non-finite entries")
        if not np.allclose(self.cov, self.cov.T, rtol=1e-9, atol=1e-12):
            raise NotPositiveDefinite("Covariance is not symmetric")
        _ = self.cholesky  # factorization doubles as the positive definiteness check

    @property
    def dimension(self) -> int:
        return len(self.mean)

    @property
    def cholesky(self) -> np.ndarray:
        try:
            return np.linalg.cholesky(self.cov)
        except np.linalg.LinAlgError as e:
            raise NotPositiveDefinite(f"Covariance is not positive definite: {e}") from e

    @property
    def log_det(self) -> float:
        return float(2.0 * np.sum(np.log(np.diag(self.cholesky))))
