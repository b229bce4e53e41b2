import math
from typing import List, Optional, Tuple

import numpy as np

from egokit.evaluation import SegmentClass
from .scenario_params import ScenarioParams

Pose = Tuple[float, float, float]


class Profile:
    """Yaw rate, speed and segment class for every tick of a drive."""

    yaw_rates: np.ndarray
    speeds: np.ndarray
    segments: np.ndarray

    def __init__(self, yaw_rates: np.ndarray, speeds: np.ndarray, segments: np.ndarray) -> None:
        self.yaw_rates = yaw_rates
        self.speeds = speeds
        self.segments = segments

    def __len__(self) -> int:
        return len(self.speeds)


class ProfileBuilder:
    """
    Chains maneuvers into one tick profile. Corners and the U-turn use yaw-rate sequences whose sums
    turn exactly a quarter and a half circle, so closed laps close.
    """

    def __init__(self, params: ScenarioParams) -> None:
        self.params = params
        self._yaw_rates: List[np.ndarray] = []
        self._speeds: List[np.ndarray] = []
        self._segments: List[np.ndarray] = []

    def _append(self, yaw_rates: np.ndarray, speeds: np.ndarray, segment: SegmentClass):
        self._yaw_rates.append(np.asarray(yaw_rates, dtype=np.float64))
        self._speeds.append(np.asarray(speeds, dtype=np.float64))
        self._segments.append(np.full(len(speeds), int(segment), dtype=np.int64))

    def straight_ticks(self, distance: float) -> int:
        return max(0, int(round(distance / (self.params.speed * self.params.dt))))

    def straight(self, ticks: int, segment: SegmentClass = SegmentClass.StraightMotion) -> "ProfileBuilder":
        self._append(np.zeros(ticks), np.full(ticks, self.params.speed), segment)
        return self

    def corner(self, direction: int = 1, segment: SegmentClass = SegmentClass.StraightMotion) -> "ProfileBuilder":
        """Quarter turn, left for direction 1. Speed dips with the yaw rate."""
        p = self.params
        shape = corner_shape(p.turn_rate, p.dt)
        yaw_rates = direction * shape * (math.pi / 2) / (shape.sum() * p.dt)
        speeds = p.speed * (1.0 - p.corner_slowdown * shape)
        self._append(yaw_rates, speeds, segment)
        return self

    def uturn(self, direction: int = 1) -> "ProfileBuilder":
        """Slow down while steering in, hold a tight turn, then steer out and speed up. Half a circle in total."""
        p = self.params
        ramp_ticks = max(1, int(round(p.ramp_time / p.dt)))
        phase = (np.arange(ramp_ticks) + 0.5) / ramp_ticks
        slow = p.speed * p.uturn_speed_factor
        peak = p.uturn_yaw_rate

        ramp_in = peak * phase
        ramp_yaw = 2.0 * ramp_in.sum() * p.dt
        plateau_ticks = max(1, int(round((math.pi - ramp_yaw) / (peak * p.dt))))
        plateau = np.full(plateau_ticks, (math.pi - ramp_yaw) / (plateau_ticks * p.dt))

        self._append(direction * ramp_in, p.speed + (slow - p.speed) * phase, SegmentClass.EnteringUturn)
        self._append(direction * plateau, np.full(plateau_ticks, slow), SegmentClass.UturnExecution)
        self._append(direction * ramp_in[::-1], slow + (p.speed - slow) * phase, SegmentClass.ExitingUturn)
        return self

    def build(self) -> Profile:
        if not self._speeds:
            return Profile(np.zeros(0), np.zeros(0), np.zeros(0, dtype=np.int64))
        return Profile(np.concatenate(self._yaw_rates), np.concatenate(self._speeds), np.concatenate(self._segments))


def corner_shape(turn_rate: float, dt: float) -> np.ndarray:
    """sin^2 bump sampled at tick centers, lasting pi / turn_rate seconds so its peak is close to turn_rate."""
    ticks = max(2, int(round(math.pi / turn_rate / dt)))
    phase = (np.arange(ticks) + 0.5) / ticks
    return np.sin(np.pi * phase) ** 2


class BicycleModel:
    """Kinematic single-track vehicle, steering angle from yaw rate and speed."""

    def __init__(self, wheelbase: float, dt: float) -> None:
        self.wheelbase = wheelbase
        self.dt = dt

    def steering(self, yaw_rates: np.ndarray, speeds: np.ndarray) -> np.ndarray:
        return np.arctan(self.wheelbase * yaw_rates / speeds)

    def drive(self, profile: Profile, start: Optional[Pose] = None) -> np.ndarray:
        """Poses (x, y, heading) at the start of every tick."""
        x, y, heading = start or (0.0, 0.0, 0.0)
        poses = np.zeros((len(profile), 3))
        for k, (yaw_rate, speed) in enumerate(zip(profile.yaw_rates, profile.speeds)):
            poses[k] = (x, y, heading)
            x += speed * math.cos(heading) * self.dt
            y += speed * math.sin(heading) * self.dt
            heading += yaw_rate * self.dt
        return poses

    def end_pose(self, profile: Profile, start: Optional[Pose] = None) -> Pose:
        poses = self.drive(profile, start)
        if len(poses) == 0:
            return start or (0.0, 0.0, 0.0)
        x, y, heading = poses[-1]
        k = len(profile) - 1
        return (
            x + profile.speeds[k] * math.cos(heading) * self.dt,
            y + profile.speeds[k] * math.sin(heading) * self.dt,
            heading + profile.yaw_rates[k] * self.dt,
        )
