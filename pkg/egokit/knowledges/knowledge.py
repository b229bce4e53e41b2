from configparser import ConfigParser
from typing import Callable, List, Optional, Sequence, Type, TypeVar

import numpy as np

from egokit.events import AbnormalityEvent
from egokit.interfaces import ILogManager
from egokit.managers.core import LogManager, ManagerBase

TManager = TypeVar("TManager")


class StepTimes:
    """Running min / avg / max of step durations in milliseconds."""

    def __init__(self):
        self.count = 0
        self.total = 0.0
        self.min = float("inf")
        self.max = 0.0

    def add(self, ms: float):
        self.count += 1
        self.total += ms
        self.min = min(self.min, ms)
        self.max = max(self.max, ms)

    @property
    def avg(self) -> float:
        return self.total / self.count if self.count else 0.0


class Knowledge:
    """
    Shared state of one detection session: configuration, managers and the current sensor tick.
    """

    def __init__(self):
        self.config: Optional[ConfigParser] = None
        self._debug: bool = False

        self.started = False
        self.managers: List[ManagerBase] = []
        self.log_manager: ILogManager = LogManager()

        self.channels: List[str] = []
        self.tick: int = -1
        self.time: float = 0.0
        self.sample: np.ndarray = np.zeros(0)
        self.step_times = StepTimes()

        # Event listeners
        self._on_abnormality_listeners: List[Callable[[AbnormalityEvent], None]] = list()

    @property
    def debug(self) -> bool:
        return self._debug

    def pre_start(
        self, config: ConfigParser, channels: Sequence[str], additional_managers: Optional[List[ManagerBase]]
    ):
        self.config = config
        self.channels = list(channels)
        self._set_managers(additional_managers)
        self._debug = config.getboolean("general", "debug", fallback=False)

    def _set_managers(self, additional_managers: Optional[List[ManagerBase]]):
        """
        Sets managers to be updated.
        This is not intended to be used outside of Knowledge.
        Use EgoThing.configure_managers to configure your managers.

        @param additional_managers: Additional list of custom managers
        """
        self.managers = [self.log_manager]

        if additional_managers:
            self.managers.extend(additional_managers)

    def get_manager(self, manager_type: Type[TManager]) -> Optional[TManager]:
        """
        Get manager by its type. Fetch the required managers in Component `start` instead of every tick.

        @param manager_type: type of manager to be requested. i.e. `FilterManager`
        @return: Manager of requested type, if one is found.
        """
        for manager in self.managers:
            if issubclass(type(manager), manager_type):
                return manager  # type: ignore
        return None

    def get_required_manager(self, manager_type: Type[TManager]) -> TManager:
        """
        Get manager by its type. Raises KeyError when no manager of the specified type is registered.

        @param manager_type: type of manager to be requested. i.e. `FilterManager`
        @return: Manager of requested type
        """
        manager = self.get_manager(manager_type)
        if not manager:
            raise KeyError(manager_type)
        return manager

    def get_managers(self, manager_type: Type[TManager]) -> List[TManager]:
        return [manager for manager in self.managers if issubclass(type(manager), manager_type)]  # type: ignore

    def start(self):
        for manager in self.managers:
            manager.start(self)
        self.started = True

    def update(self, tick: int, time: float, sample: np.ndarray):
        self.tick = tick
        self.time = time
        self.sample = sample

        for manager in self.managers:
            manager.update()

    def post_update(self):
        for manager in self.managers:
            manager.post_update()

    def step_took(self, ns_step: float):
        """Time taken in nanoseconds for the current tick to run."""
        self.step_times.add(ns_step / 1000 / 1000)

    def print(self, message: str, tag: Optional[str] = None, stats: bool = True, log_level: str = "INFO"):
        """
        Prints a message to log.

        :param message: The message to print.
        :param tag: An optional tag, which can be used to indicate the logging component.
        :param stats: When true, the session tick and sensor time are added to the log message.
        :param log_level: Optional loguru level name. Default is INFO.
        """
        self.log_manager.print(message, tag, stats, log_level)

    # region Knowledge event handlers

    def on_abnormality(self, event: AbnormalityEvent):
        self.fire_event(self._on_abnormality_listeners, event)

    def register_on_abnormality_listener(self, func: Callable[[AbnormalityEvent], None]):
        assert callable(func)
        self._on_abnormality_listeners.append(func)

    def unregister_on_abnormality_listener(self, func: Callable[[AbnormalityEvent], None]):
        self._on_abnormality_listeners.remove(func)

    @staticmethod
    def fire_event(listeners, event):
        for listener in listeners:
            listener(event)

    def on_end(self):
        self.print(f"Ticks: {self.tick + 1}", stats=False)
        self.print(f"Duration: {self.time:.2f}s", stats=False)

        if self.step_times.count:
            self.print(f"Step time min: {self.step_times.min:.2f}ms", stats=False, log_level="DEBUG")
            self.print(f"Step time avg: {self.step_times.avg:.2f}ms", stats=False, log_level="DEBUG")
            self.print(f"Step time max: {self.step_times.max:.2f}ms", stats=False, log_level="DEBUG")

        for manager in self.managers:
            manager.on_end()

    # endregion

    # region Settings

    def get_boolean_setting(self, key: str) -> bool:
        """
        Returns a boolean setting from config.ini matching the key. Missing settings are off.

        :param key: Key of the setting, eg. "debug.FilterManager" for "FilterManager" setting under [debug].
        """
        section, option = key.split(".")
        if self.config is None:
            return False
        return self.config.getboolean(section, option, fallback=False)

    # endregion
