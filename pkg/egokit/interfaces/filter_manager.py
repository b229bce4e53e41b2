from abc import ABC, abstractmethod
from typing import Dict, List

from egokit.filters import StepResult


class IFilterManager(ABC):
    """Runs one switching filter per feature-case during a session."""

    @property
    @abstractmethod
    def feature_ids(self) -> List[str]:
        pass

    @property
    @abstractmethod
    def latest(self) -> Dict[str, StepResult]:
        """Step results of the current tick by feature-case id. Empty on the initializing tick."""
        pass

    @abstractmethod
    def results(self, feature_id: str) -> List[StepResult]:
        pass
