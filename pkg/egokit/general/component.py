from typing import TYPE_CHECKING, Optional

if TYPE_CHECKING:
    from egokit.knowledges import Knowledge


class Component:
    """
    Common base for everything that lives inside a detection session.

    Attributes:
        knowledge: the session knowledge, set by `start`
    """

    knowledge: "Knowledge"

    def __init__(self) -> None:
        self._debug: bool = False
        self._started: bool = False
        self._key: Optional[str] = None

    @property
    def key(self) -> str:
        """Name used for log tags and `[debug]` switches, the class name unless set."""
        return self._key or type(self).__name__

    @property
    def debug(self) -> bool:
        return self._debug and self.knowledge.debug

    @property
    def started(self) -> bool:
        return self._started

    def start(self, knowledge: "Knowledge"):
        self._started = True
        self.knowledge = knowledge
        self._debug = self.knowledge.get_boolean_setting(f"debug.{self.key}")

    def print(self, msg: str, stats: bool = True):
        self.knowledge.print(msg, self.key, stats)
