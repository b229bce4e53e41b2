import os
from typing import Dict, Tuple

from loguru import logger

from egokit.filters import FilterSettings
from egokit.knowledges import DetectorThing
from egokit.models import AnomalyTrace, TrainingSettings, load_model, save_model, train_feature_case
from egokit.signals import FeatureCase, SensorSeries
from .settings import config_from_dict

# Top level functions, so that a process pool can pickle them.


def train_job(
    series: SensorSeries, case: FeatureCase, settings: TrainingSettings, data_hash: str, out_dir: str
) -> str:
    model = train_feature_case(series, case, settings, data_hash)
    path = os.path.join(out_dir, f"model_{case.id}.json")
    save_model(path, model)
    return path


def detect_job(
    model_path: str, series: SensorSeries, config_values: Dict[str, Dict[str, str]], out_dir: str
) -> Tuple[str, str, int]:
    """Streams the test series through an online session of one model. Returns feature id, trace path, alarms."""
    config = config_from_dict(config_values)
    model = load_model(model_path)
    settings = FilterSettings.from_config(config["filter"] if config.has_section("filter") else None)

    thing = DetectorThing({model.feature_id: model.to_bundle()}, config=config, settings=settings)
    thing.run(series)

    trace = AnomalyTrace.from_results(thing.results(model.feature_id), series)
    path = os.path.join(out_dir, f"anomaly_{model.feature_id}.csv")
    trace.to_csv(path)
    alarms = thing.alarm_manager.alarm_count(model.feature_id)
    logger.debug(f"{model.feature_id}: {len(trace)} ticks scored, {alarms} alarms")
    return model.feature_id, path, alarms
