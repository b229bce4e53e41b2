import json
import os
from configparser import ConfigParser, Error as ConfigError
from typing import List, Optional

from loguru import logger

from egokit.errors import InvalidParams

PACKAGE_CONFIG = os.path.join(os.path.dirname(os.path.abspath(__file__)), "config.ini")
LOCAL_CONFIG = "config-local.ini"


def get_config(local: bool = True, path: Optional[str] = None) -> ConfigParser:
    """
    Reads the packaged config.ini and returns a configuration parser for it.

    Later sources overwrite earlier ones: config-local.ini in the working directory, then `path`
    (INI, or JSON of the form {"section": {"key": value}}).
    """
    config = ConfigParser()
    config_files: List[str] = [PACKAGE_CONFIG]
    if local:
        config_files.append(LOCAL_CONFIG)
    read = config.read(config_files, encoding="utf-8")
    if PACKAGE_CONFIG not in read:
        raise ValueError(f"Config file(s) not found! Searched files: {config_files}")

    if path is not None:
        if not os.path.isfile(path):
            raise FileNotFoundError(f"Config file {path} not found")
        if path.lower().endswith(".json"):
            _read_json(config, path)
        else:
            try:
                config.read(path, encoding="utf-8")
            except ConfigError as e:
                raise InvalidParams(f"Config file {path} is not valid INI: {e}") from e
        logger.debug(f"Read config overrides from {path}")
    return config


def _read_json(config: ConfigParser, path: str):
    with open(path, "r", encoding="utf-8") as handle:
        try:
            payload = json.load(handle)
        except json.JSONDecodeError as e:
            raise InvalidParams(f"Config file {path} is not valid JSON: {e}") from e

    if not isinstance(payload, dict) or not all(isinstance(values, dict) for values in payload.values()):
        raise InvalidParams(f"Config file {path} must map section names to key/value objects")
    for section, values in payload.items():
        if not config.has_section(section):
            config.add_section(section)
        for key, value in values.items():
            if isinstance(value, bool):
                value = "yes" if value else "no"
            elif isinstance(value, list):
                value = ",".join(str(item) for item in value)
            config.set(section, key, str(value))
