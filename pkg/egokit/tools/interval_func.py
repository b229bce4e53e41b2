from typing import TYPE_CHECKING, Any, Callable, Optional

if TYPE_CHECKING:
    from egokit.knowledges import Knowledge


class IntervalFunc:
    """Runs `func` at most once per `timer_seconds` of sensor time and caches its result in between."""

    def __init__(self, knowledge: "Knowledge", func: Callable[[], Any], timer_seconds: float):
        self.timer_seconds = timer_seconds
        self.knowledge = knowledge
        self.func = func
        self.cached_value: Any = None
        self.last_call: Optional[float] = None

    def execute(self) -> Any:
        if self.last_call is None or self.knowledge.time >= self.last_call + self.timer_seconds:
            self.last_call = self.knowledge.time
            self.cached_value = self.func()
        return self.cached_value

    def reset(self):
        self.last_call = None
        self.cached_value = None
