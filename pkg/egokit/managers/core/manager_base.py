from abc import ABC, abstractmethod

from egokit.general.component import Component


class ManagerBase(ABC, Component):
    @abstractmethod
    def update(self):
        pass

    @abstractmethod
    def post_update(self):
        pass

    def print(self, msg: str, stats: bool = True, log_level: str = "INFO"):
        self.knowledge.print(msg, self.key, stats, log_level)

    def on_end(self):
        pass
