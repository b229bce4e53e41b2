from typing import TYPE_CHECKING, Dict, List, Optional

from egokit.events import AbnormalityEvent
from egokit.interfaces import IFilterManager
from egokit.tools import IntervalFunc
from .manager_base import ManagerBase

if TYPE_CHECKING:
    from egokit.knowledges import Knowledge

DEFAULT_THRESHOLD = 0.5
DEFAULT_COOLDOWN = 2.0


class AlarmManager(ManagerBase):
    """
    Raises an AbnormalityEvent when the abnormality of a model reaches the threshold.
    Alarms of the same model are throttled to one per `cooldown` seconds of sensor time.
    """

    filter_manager: IFilterManager

    def __init__(self, threshold: Optional[float] = None, cooldown: Optional[float] = None) -> None:
        super().__init__()
        self.threshold = threshold
        self.cooldown = cooldown
        self.alarms: List[AbnormalityEvent] = []
        self._throttles: Dict[str, IntervalFunc] = {}
        self._pending: Optional[AbnormalityEvent] = None

    def start(self, knowledge: "Knowledge"):
        super().start(knowledge)
        config = knowledge.config
        section = config["alarm"] if config is not None and config.has_section("alarm") else {}
        if self.threshold is None:
            self.threshold = float(section.get("threshold", DEFAULT_THRESHOLD))
        if self.cooldown is None:
            self.cooldown = float(section.get("cooldown", DEFAULT_COOLDOWN))

        self.filter_manager = knowledge.get_required_manager(IFilterManager)
        for feature_id in self.filter_manager.feature_ids:
            self._throttles[feature_id] = IntervalFunc(knowledge, self._raise_pending, self.cooldown)

    def alarm_count(self, feature_id: str) -> int:
        return sum(1 for alarm in self.alarms if alarm.feature_id == feature_id)

    def _raise_pending(self) -> AbnormalityEvent:
        event = self._pending
        self.alarms.append(event)
        self.knowledge.on_abnormality(event)
        self.print(f"Abnormality in {event.feature_id}: theta {event.theta:.3f}", log_level="DEBUG")
        return event

    def update(self):
        pass

    def post_update(self):
        for feature_id, result in self.filter_manager.latest.items():
            if result.theta < self.threshold:
                continue
            self._pending = AbnormalityEvent(
                feature_id, self.knowledge.tick, self.knowledge.time, result.theta, result.map_word
            )
            self._throttles[feature_id].execute()
            self._pending = None

    def on_end(self):
        for feature_id in self.filter_manager.feature_ids:
            self.print(f"{feature_id}: {self.alarm_count(feature_id)} alarms", stats=False)
