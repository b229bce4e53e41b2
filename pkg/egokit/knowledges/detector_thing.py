from configparser import ConfigParser
from typing import Dict, List, Optional

from egokit.filters import FilterSettings, ModelBundle, StepResult
from egokit.managers.core import AlarmManager, FilterManager, ManagerBase
from .ego_thing import EgoThing


class DetectorThing(EgoThing):
    """Online abnormality detection with one filter per trained feature-case model and threshold alarms."""

    def __init__(
        self,
        models: Dict[str, ModelBundle],
        config: Optional[ConfigParser] = None,
        settings: Optional[FilterSettings] = None,
        name: str = "detector",
    ):
        super().__init__(name, config)
        self.filter_manager = FilterManager(models, settings)
        self.alarm_manager = AlarmManager()

    def configure_managers(self) -> Optional[List[ManagerBase]]:
        return [self.filter_manager, self.alarm_manager]

    def results(self, feature_id: str) -> List[StepResult]:
        return self.filter_manager.results(feature_id)
