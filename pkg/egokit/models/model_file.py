from typing import Dict, List, Optional

import jsonpickle
import jsonpickle.ext.numpy as jsonpickle_numpy
import numpy as np

from egokit.constants import Constants
from egokit.errors import ModelFormatError
from egokit.filters import ModelBundle
from egokit.signals import Scaler
from egokit.tools import atomic_write_text
from egokit.vocabulary import TransitionModel, Vocabulary, WordDynamicsTable

jsonpickle_numpy.register_handlers()


class TrainingProvenance:
    """How a model was trained, enough to retrain it identically."""

    gng_params: Dict[str, float]
    seed: int
    order: int
    smoothing: float
    data_hash: str
    ticks: int

    def __init__(
        self,
        gng_params: Dict[str, float],
        seed: int,
        order: int,
        smoothing: float,
        data_hash: str = "",
        ticks: int = 0,
    ) -> None:
        self.gng_params = gng_params
        self.seed = seed
        self.order = order
        self.smoothing = smoothing
        self.data_hash = data_hash
        self.ticks = ticks


class ModelFile:
    """Persisted switching model of one feature-case."""

    version: int
    feature_id: str
    channels: List[str]
    order: int
    dt: float
    scaler: Scaler
    vocabulary: Vocabulary
    transitions: TransitionModel
    dynamics: WordDynamicsTable
    observation_covariance: np.ndarray
    provenance: Optional[TrainingProvenance]

    def __init__(self, feature_id: str, bundle: ModelBundle, provenance: Optional[TrainingProvenance] = None):
        self.version = Constants.MODEL_FORMAT_VERSION
        self.feature_id = feature_id
        self.channels = list(bundle.channels)
        self.order = bundle.order
        self.dt = bundle.dt
        self.scaler = bundle.scaler
        self.vocabulary = bundle.vocabulary
        self.transitions = bundle.transitions
        self.dynamics = bundle.dynamics
        self.observation_covariance = bundle.observation_covariance
        self.provenance = provenance

    def to_bundle(self) -> ModelBundle:
        return ModelBundle(
            self.channels,
            self.dt,
            self.scaler,
            self.vocabulary,
            self.transitions,
            self.observation_covariance,
            self.dynamics,
        )


def save_model(path: str, model: ModelFile):
    atomic_write_text(path, jsonpickle.encode(model, indent=1))


def load_model(path: str) -> ModelFile:
    with open(path, "r", encoding="utf-8") as handle:
        text = handle.read()
    try:
        model = jsonpickle.decode(text)
    except (ValueError, TypeError, AttributeError, ImportError) as e:
        raise ModelFormatError(f"{path} is not a model file: {e}") from e

    if not isinstance(model, ModelFile):
        raise ModelFormatError(f"{path} does not hold a model, found {type(model).__name__}")
    version = getattr(model, "version", None)
    if version != Constants.MODEL_FORMAT_VERSION:
        raise ModelFormatError(f"{path} has model format {version}, expected {Constants.MODEL_FORMAT_VERSION}")
    return model
