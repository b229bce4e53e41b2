from configparser import ConfigParser
from typing import Optional

from egokit.constants import Constants
from egokit.errors import InvalidParams
from egokit.gng import GngParams


def _optional_float(text: str) -> Optional[float]:
    text = text.strip().lower()
    return None if text == "auto" else float(text)


class TrainingSettings:
    """
    Knobs of one training run. `smoothing` and `observation_std` are None for `auto`: the default smoothing rule,
    and observation noise matched to the learned dynamics.
    """

    order: int
    gng: GngParams
    smoothing: Optional[float]
    observation_std: Optional[float]

    def __init__(
        self,
        order: int = Constants.DEFAULT_ORDER,
        gng: Optional[GngParams] = None,
        smoothing: Optional[float] = None,
        observation_std: Optional[float] = None,
    ) -> None:
        self.order = order
        self.gng = gng or GngParams()
        self.smoothing = smoothing
        self.observation_std = observation_std

    def validate(self) -> "TrainingSettings":
        if self.order < 0:
            raise InvalidParams(f"Derivative order must be non-negative, got {self.order}")
        if self.smoothing is not None and self.smoothing < 0:
            raise InvalidParams(f"Transition smoothing must be non-negative, got {self.smoothing}")
        if self.observation_std is not None and self.observation_std <= 0:
            raise InvalidParams(f"Observation std must be positive, got {self.observation_std}")
        self.gng.validate()
        return self

    @staticmethod
    def from_config(config: ConfigParser) -> "TrainingSettings":
        return TrainingSettings(
            order=config.getint("signals", "order", fallback=Constants.DEFAULT_ORDER),
            gng=GngParams.from_config(config["gng"] if config.has_section("gng") else None),
            smoothing=_optional_float(config.get("vocabulary", "smoothing", fallback="auto")),
            observation_std=_optional_float(config.get("filter", "observation_std", fallback="auto")),
        ).validate()
