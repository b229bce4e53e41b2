from configparser import ConfigParser
from typing import TYPE_CHECKING, Any, Optional

from loguru import logger

from egokit.interfaces import ILogManager
from .manager_base import ManagerBase

if TYPE_CHECKING:
    from egokit.knowledges import Knowledge


class LogManager(ManagerBase, ILogManager):
    config: Optional[ConfigParser]
    logger: Any
    start_with: Optional[str]

    def __init__(self) -> None:
        super().__init__()
        self.config = None
        self.logger = logger
        self.start_with = None

    def start(self, knowledge: "Knowledge"):
        super().start(knowledge)
        self.config = knowledge.config

    def update(self):
        pass

    def post_update(self):
        pass

    def print(self, message: str, tag: Optional[str] = None, stats: bool = True, log_level: str = "INFO"):
        """
        Prints a message to log.

        :param message: The message to print.
        :param tag: An optional tag, which can be used to indicate the logging component.
        :param stats: When true, the session tick and sensor time are added to the log message.
        :param log_level: Optional loguru level name. Default is INFO.
        """
        if tag is not None and self.config is not None and self.config.has_section("debug_log"):
            enabled = self.config["debug_log"].getboolean(tag, fallback=True)
            if not enabled:
                return

        if tag is not None:
            message = f"[{tag}] {message}"

        if stats and self._started:
            message = f"{str(self.knowledge.tick).rjust(6)} {self.knowledge.time:9.2f}s {message}"

        if self.start_with:
            message = self.start_with + message
        self.logger.log(log_level, message)
