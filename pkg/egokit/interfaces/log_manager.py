from abc import ABC, abstractmethod
from typing import Optional


class ILogManager(ABC):
    @abstractmethod
    def print(self, message: str, tag: Optional[str] = None, stats: bool = True, log_level: str = "INFO"):
        pass
