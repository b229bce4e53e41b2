from configparser import SectionProxy
from typing import Optional

from egokit.constants import Constants
from egokit.errors import InvalidParams


class FilterSettings:
    """Particle filter knobs, read from the [filter] config section."""

    n_particles: int
    anchor_words: bool
    resample_threshold: float
    seed: int

    def __init__(
        self,
        n_particles: int = Constants.DEFAULT_PARTICLES,
        anchor_words: bool = True,
        resample_threshold: float = 0.5,
        seed: int = 0,
    ) -> None:
        self.n_particles = n_particles
        self.anchor_words = anchor_words
        self.resample_threshold = resample_threshold
        self.seed = seed

    def validate(self) -> "FilterSettings":
        if self.n_particles < 1:
            raise InvalidParams(f"Particle filter needs at least one particle, got {self.n_particles}")
        if not 0 <= self.resample_threshold <= 1:
            raise InvalidParams(f"Resample threshold must be in [0, 1], got {self.resample_threshold}")
        return self

    @staticmethod
    def from_config(section: Optional[SectionProxy]) -> "FilterSettings":
        defaults = FilterSettings()
        if section is None:
            return defaults
        return FilterSettings(
            n_particles=section.getint("particles", fallback=defaults.n_particles),
            anchor_words=section.getboolean("anchor_words", fallback=defaults.anchor_words),
            resample_threshold=section.getfloat("resample_threshold", fallback=defaults.resample_threshold),
            seed=section.getint("seed", fallback=defaults.seed),
        ).validate()
