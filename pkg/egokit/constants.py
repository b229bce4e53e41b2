# Common constants, so they are easier to import and avoid cyclical import problems.


class Constants:
    # Relative tolerance for uniform sampling of sensor timestamps
    SAMPLING_TOLERANCE = 1e-9
    # Scaled identity added to every per-node covariance
    COVARIANCE_REGULARIZATION = 1e-6
    # Smallest particle likelihood before normalization
    LIKELIHOOD_FLOOR = 1e-300
    # Tolerance accepted around [0, 1] for Bhattacharyya coefficients
    COEFFICIENT_TOLERANCE = 1e-12
    # Laplace smoothing default: 0.05 * K / |words|, never below the floor
    SMOOTHING_RATE = 0.05
    SMOOTHING_FLOOR = 1e-3
    # Default observation noise standard deviation in normalized units
    OBSERVATION_STD = 0.05
    DEFAULT_PARTICLES = 200
    DEFAULT_ORDER = 1
    MAX_CHANNELS = 16
    MODEL_FORMAT_VERSION = 1
