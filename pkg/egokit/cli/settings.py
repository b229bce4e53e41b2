from argparse import Namespace
from configparser import ConfigParser
from typing import Dict, List, Tuple

from egokit.config import get_config

# Command line argument -> config options it overrides
OVERRIDES: Dict[str, List[Tuple[str, str]]] = {
    "seed": [("scenario", "seed"), ("gng", "seed"), ("filter", "seed")],
    "laps": [("scenario", "laps")],
    "noise_level": [("scenario", "noise_level")],
    "order": [("signals", "order")],
    "channels": [("signals", "channels")],
    "particles": [("filter", "particles")],
    "threshold": [("alarm", "threshold")],
    "smoothing_window": [("evaluation", "smoothing_window")],
    "jobs": [("cli", "jobs")],
    "log_level": [("general", "log_level")],
}


def load_settings(args: Namespace) -> ConfigParser:
    """Config files first, then whatever was given on the command line."""
    config = get_config(local=not getattr(args, "release", False), path=getattr(args, "config", None))
    apply_overrides(config, args)
    return config


def apply_overrides(config: ConfigParser, args: Namespace):
    for name, options in OVERRIDES.items():
        value = getattr(args, name, None)
        if value is None:
            continue
        for section, option in options:
            if not config.has_section(section):
                config.add_section(section)
            config.set(section, option, str(value))


def config_channels(config: ConfigParser) -> List[str]:
    text = config.get("signals", "channels", fallback="")
    return [name.strip() for name in text.split(",") if name.strip()]


def config_to_dict(config: ConfigParser) -> Dict[str, Dict[str, str]]:
    """Plain form of a config, so it can be shipped to worker processes."""
    return {section: dict(config.items(section, raw=True)) for section in config.sections()}


def config_from_dict(values: Dict[str, Dict[str, str]]) -> ConfigParser:
    config = ConfigParser()
    config.read_dict(values)
    return config
