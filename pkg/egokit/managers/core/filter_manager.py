from typing import TYPE_CHECKING, Dict, List, Optional

import numpy as np

from egokit.errors import UnknownChannel
from egokit.filters import FilterSettings, FilterState, ModelBundle, StepResult, init_filter, predict, update
from egokit.interfaces import IFilterManager
from .manager_base import ManagerBase

if TYPE_CHECKING:
    from egokit.knowledges import Knowledge


class FilterManager(ManagerBase, IFilterManager):
    """
    Filters the session stream with one switching model per feature-case.
    The first tick initializes every filter, each later tick is one predict and update.
    """

    def __init__(self, models: Dict[str, ModelBundle], settings: Optional[FilterSettings] = None) -> None:
        super().__init__()
        self.models = dict(models)
        self.settings = settings
        self._columns: Dict[str, List[int]] = {}
        self._states: Dict[str, FilterState] = {}
        self._results: Dict[str, List[StepResult]] = {feature_id: [] for feature_id in self.models}
        self._latest: Dict[str, StepResult] = {}

    def start(self, knowledge: "Knowledge"):
        super().start(knowledge)
        if self.settings is None:
            self.settings = FilterSettings.from_config(self._config_section())

        for feature_id, model in self.models.items():
            missing = [name for name in model.channels if name not in knowledge.channels]
            if missing:
                raise UnknownChannel(f"Model {feature_id} needs channels {missing}, stream has {knowledge.channels}")
            self._columns[feature_id] = [knowledge.channels.index(name) for name in model.channels]

    def _config_section(self):
        config = self.knowledge.config
        if config is not None and config.has_section("filter"):
            return config["filter"]
        return None

    @property
    def feature_ids(self) -> List[str]:
        return list(self.models)

    @property
    def latest(self) -> Dict[str, StepResult]:
        return self._latest

    def results(self, feature_id: str) -> List[StepResult]:
        return self._results[feature_id]

    def state(self, feature_id: str) -> Optional[FilterState]:
        return self._states.get(feature_id)

    def update(self):
        sample: np.ndarray = self.knowledge.sample
        self._latest = {}
        for feature_id, model in self.models.items():
            z = model.normalize(sample[self._columns[feature_id]])
            state = self._states.get(feature_id)
            if state is None:
                settings = self.settings
                self._states[feature_id] = init_filter(model, settings.n_particles, z, settings.seed, settings)
                continue

            predict(state)
            result = update(state, z)
            result.predicted = None
            self._results[feature_id].append(result)
            self._latest[feature_id] = result

    def post_update(self):
        if self.debug:
            for feature_id, result in self._latest.items():
                self.print(f"{feature_id} theta {result.theta:.3f} word {result.map_word} ess {result.ess:.0f}")

    def on_end(self):
        for feature_id in self.models:
            thetas = [result.theta for result in self._results[feature_id]]
            if thetas:
                resamples = sum(result.resampled for result in self._results[feature_id])
                error = np.mean([result.prediction_error for result in self._results[feature_id]])
                self.print(
                    f"{feature_id}: mean theta {np.mean(thetas):.3f} over {len(thetas)} ticks, "
                    f"mean prediction error {error:.3f}, {resamples} resamples",
                    stats=False,
                )
