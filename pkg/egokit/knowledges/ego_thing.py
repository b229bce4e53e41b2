import time
from abc import ABC, abstractmethod
from configparser import ConfigParser
from typing import TYPE_CHECKING, List, Optional

from loguru import logger

from egokit.config import get_config
from egokit.signals import SensorSeries
from .knowledge import Knowledge

if TYPE_CHECKING:
    from egokit.managers.core import ManagerBase


class EgoThing(ABC):
    """
    An agent watching its own sensors. Streams a recording tick by tick through the managers of its knowledge.
    """

    def __init__(self, name: str, config: Optional[ConfigParser] = None):
        self.knowledge = Knowledge()
        self.name = name
        self.config = config if config is not None else get_config()
        # In general it is better to fail fast and early in order to fix things.
        self.crash_on_except = True

    def on_start(self, channels: List[str]):
        """Allows initializing the managers when the stream channels are known."""
        self.knowledge.pre_start(self.config, channels, self.configure_managers())
        self.knowledge.start()

    @abstractmethod
    def configure_managers(self) -> Optional[List["ManagerBase"]]:
        """
        Override this for custom manager usage.
        Use this to override managers in knowledge
        @return: Optional list of new managers
        """
        pass

    def on_step(self, tick: int, timestamp: float, sample):
        try:
            ns_step = time.perf_counter_ns()
            self.knowledge.update(tick, timestamp, sample)
            self.execute()
            self.knowledge.post_update()

            ns_step = time.perf_counter_ns() - ns_step
            self.knowledge.step_took(ns_step)
        except Exception:
            logger.exception(f"{self.name} failed on tick {tick}")

            if self.crash_on_except:
                raise

    def execute(self):
        """
        Override this for your custom code after managers have updated
        @return: None
        """
        pass

    def on_end(self):
        self.knowledge.on_end()

    def run(self, series: SensorSeries):
        """Streams a whole recording through the session."""
        self.on_start(series.channels)
        for tick in range(len(series)):
            self.on_step(tick, float(series.timestamps[tick]), series.values[tick])
        self.on_end()
