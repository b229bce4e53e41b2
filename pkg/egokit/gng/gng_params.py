from configparser import SectionProxy
from typing import Dict, Optional

from egokit.errors import InvalidParams


class GngParams:
    """Growing Neural Gas hyperparameters. Defaults are the usual Fritzke settings."""

    max_nodes: int
    lambda_insert: int
    eps_b: float
    eps_n: float
    max_age: int
    alpha: float
    d_decay: float
    epochs: int
    seed: int

    def __init__(
        self,
        max_nodes: int = 10,
        lambda_insert: int = 100,
        eps_b: float = 0.2,
        eps_n: float = 0.006,
        max_age: int = 50,
        alpha: float = 0.5,
        d_decay: float = 0.995,
        epochs: int = 5,
        seed: int = 0,
    ) -> None:
        self.max_nodes = max_nodes
        self.lambda_insert = lambda_insert
        self.eps_b = eps_b
        self.eps_n = eps_n
        self.max_age = max_age
        self.alpha = alpha
        self.d_decay = d_decay
        self.epochs = epochs
        self.seed = seed

    def validate(self) -> "GngParams":
        if not 0 < self.eps_n < self.eps_b < 1:
            raise InvalidParams(f"GNG needs 0 < eps_n < eps_b < 1, got eps_n={self.eps_n}, eps_b={self.eps_b}")
        if self.max_nodes < 2:
            raise InvalidParams(f"GNG needs max_nodes >= 2, got {self.max_nodes}")
        if self.lambda_insert < 1:
            raise InvalidParams(f"GNG needs lambda_insert >= 1, got {self.lambda_insert}")
        if not 0 < self.alpha < 1 or not 0 < self.d_decay < 1:
            raise InvalidParams(f"GNG needs alpha and d_decay in (0, 1), got {self.alpha}, {self.d_decay}")
        if self.epochs < 1 or self.max_age < 1:
            raise InvalidParams(f"GNG needs epochs >= 1 and max_age >= 1")
        return self

    def to_dict(self) -> Dict[str, float]:
        return dict(vars(self))

    def with_seed(self, seed: int) -> "GngParams":
        values = self.to_dict()
        values["seed"] = seed
        return GngParams(**values)

    @staticmethod
    def from_config(section: Optional[SectionProxy]) -> "GngParams":
        defaults = GngParams()
        if section is None:
            return defaults
        return GngParams(
            max_nodes=section.getint("max_nodes", fallback=defaults.max_nodes),
            lambda_insert=section.getint("lambda_insert", fallback=defaults.lambda_insert),
            eps_b=section.getfloat("eps_b", fallback=defaults.eps_b),
            eps_n=section.getfloat("eps_n", fallback=defaults.eps_n),
            max_age=section.getint("max_age", fallback=defaults.max_age),
            alpha=section.getfloat("alpha", fallback=defaults.alpha),
            d_decay=section.getfloat("d_decay", fallback=defaults.d_decay),
            epochs=section.getint("epochs", fallback=defaults.epochs),
            seed=section.getint("seed", fallback=defaults.seed),
        ).validate()
