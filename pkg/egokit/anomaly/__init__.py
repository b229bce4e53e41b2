from .gaussian_density import GaussianDensity
from .hellinger import (
    batch_bhattacharyya,
    bhattacharyya_distance,
    bhattacharyya_gaussian,
    hellinger,
    hellinger_batch,
)
