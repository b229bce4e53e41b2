from itertools import combinations
from typing import Dict, List, Sequence

from egokit.constants import Constants
from egokit.errors import EmptyChannelSet, InvalidFeatureCase, UnknownChannel
from .sensor_series import SensorSeries


def channel_symbols(channels: Sequence[str]) -> List[str]:
    """
    Short symbols for channel names, used to label feature-cases.
    steer, vel, power -> S, V, P. Full names are used when first letters collide.
    """
    symbols = [name[:1].upper() for name in channels]
    if len(set(symbols)) != len(symbols) or any(not s for s in symbols):
        return list(channels)
    return symbols


class FeatureCase:
    """A subset of sensor channels used to learn one switching model."""

    id: str
    indices: List[int]
    channels: List[str]

    def __init__(self, case_id: str, indices: Sequence[int], channels: Sequence[str]) -> None:
        if len(indices) == 0:
            raise EmptyChannelSet("Feature-case needs at least one channel")
        if len(set(indices)) != len(indices) or len(set(channels)) != len(channels):
            raise InvalidFeatureCase(f"Feature-case {case_id} has duplicate channels")
        if len(indices) != len(channels):
            raise InvalidFeatureCase(f"Feature-case {case_id}: {len(indices)} indices for {len(channels)} channels")
        if any(i < 0 for i in indices):
            raise InvalidFeatureCase(f"Feature-case {case_id} has negative channel indices")

        self.id = case_id
        self.indices = list(indices)
        self.channels = list(channels)

    def __repr__(self) -> str:
        return f"FeatureCase({self.id}: {', '.join(self.channels)})"

    def __eq__(self, other) -> bool:
        return isinstance(other, FeatureCase) and (self.id, self.indices, self.channels) == (
            other.id,
            other.indices,
            other.channels,
        )

    def __hash__(self) -> int:
        return hash((self.id, tuple(self.indices)))

    @staticmethod
    def from_indices(indices: Sequence[int], channels: Sequence[str]) -> "FeatureCase":
        symbols = channel_symbols(channels)
        names = [channels[i] for i in indices]
        parts = [symbols[i] for i in indices]
        separator = "" if all(len(symbol) == 1 for symbol in symbols) else "+"
        return FeatureCase(separator.join(parts), indices, names)

    @staticmethod
    def parse(label: str, channels: Sequence[str]) -> "FeatureCase":
        """
        Resolves a label such as `SP` or `steer+power` against the available channels.
        Channel order follows the available channels, not the label.
        """
        symbols = channel_symbols(channels)
        lookup: Dict[str, int] = {symbol: i for i, symbol in enumerate(symbols)}
        lookup.update({name: i for i, name in enumerate(channels)})

        if "+" in label or label in channels:
            parts = [part.strip() for part in label.split("+")]
        else:
            parts = list(label)

        indices = []
        for part in parts:
            if part not in lookup:
                raise UnknownChannel(f"Unknown channel '{part}' in feature '{label}', channels are {list(channels)}")
            indices.append(lookup[part])

        if len(set(indices)) != len(indices):
            raise InvalidFeatureCase(f"Feature '{label}' repeats a channel")
        return FeatureCase.from_indices(sorted(indices), channels)


def enumerate_cases(channels: Sequence[str]) -> List[FeatureCase]:
    """All non-empty channel subsets, larger subsets first, then lexicographic by channel index."""
    if len(channels) == 0:
        raise EmptyChannelSet("Cannot enumerate feature-cases of an empty channel set")
    if len(channels) > Constants.MAX_CHANNELS:
        raise InvalidFeatureCase(f"At most {Constants.MAX_CHANNELS} channels are supported, got {len(channels)}")
    if len(set(channels)) != len(channels):
        raise InvalidFeatureCase(f"Duplicate channel names: {list(channels)}")

    cases = []
    for size in range(len(channels), 0, -1):
        for indices in combinations(range(len(channels)), size):
            cases.append(FeatureCase.from_indices(indices, channels))
    return cases


def select_feature(series: SensorSeries, case: FeatureCase) -> SensorSeries:
    """Returns the series restricted to the feature-case channels, same timestamps."""
    return series.select(case.channels)
