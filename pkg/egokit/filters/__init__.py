from .filter_settings import FilterSettings
from .filter_state import FilterState, Particle, PredictedMixture, StepResult
from .model_bundle import ModelBundle, matched_observation_covariance
from .mjpf import init_filter, predict, run_sequence, update
from .resampling import effective_sample_size, systematic_resample
