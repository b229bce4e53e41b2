from typing import Optional, Tuple

import numpy as np
from loguru import logger

from egokit.errors import InvalidParams
from egokit.evaluation import GroundTruth, SegmentClass
from egokit.signals import SensorSeries
from .scenario_params import ScenarioParams
from .vehicle import BicycleModel, Pose, Profile, ProfileBuilder

CHANNELS = ["steer", "vel", "power"]
ODOMETRY_CHANNELS = ["x", "y", "heading"]


class ScenarioRun:
    """One generated drive: sensor channels, odometry and, for test runs, the ground truth."""

    series: SensorSeries
    odometry: SensorSeries
    ground_truth: Optional[GroundTruth]

    def __init__(self, series: SensorSeries, odometry: SensorSeries, ground_truth: Optional[GroundTruth] = None):
        self.series = series
        self.odometry = odometry
        self.ground_truth = ground_truth


class _Layout:
    """Straight tick counts of the rounded rectangle."""

    def __init__(self, params: ScenarioParams) -> None:
        builder = ProfileBuilder(params)
        forward, lateral, _ = BicycleModel(params.wheelbase, params.dt).end_pose(builder.corner().build())
        length = 2 * params.half_length - forward - lateral
        width = 2 * params.half_width - forward - lateral
        if length < 0 or width < 0:
            raise InvalidParams(
                f"Rectangle {2 * params.half_length}x{2 * params.half_width} m is too small for "
                f"corners taking {forward:.2f} m forward and {lateral:.2f} m sideways"
            )
        self.half_straight = builder.straight_ticks(length / 2)
        self.side = builder.straight_ticks(width)
        self.step = params.speed * params.dt

    def lap(self, builder: ProfileBuilder, direction: int = 1, segment: SegmentClass = SegmentClass.StraightMotion):
        builder.straight(self.half_straight)
        for side in (self.side, 2 * self.half_straight, self.side):
            builder.corner(direction, segment).straight(side)
        builder.corner(direction, segment).straight(self.half_straight)


def clean_channels(profile: Profile, params: ScenarioParams) -> np.ndarray:
    """Noise free steering, velocity and power per tick."""
    model = BicycleModel(params.wheelbase, params.dt)
    steering = model.steering(profile.yaw_rates, profile.speeds)
    speeds = profile.speeds
    acceleration = np.gradient(speeds, params.dt) if len(speeds) > 1 else np.zeros_like(speeds)
    power = (
        params.power_speed * speeds
        + params.power_accel * np.abs(acceleration)
        + params.power_turn * np.abs(steering) * speeds
    )
    return np.column_stack([steering, speeds, power])


def noise_std(params: ScenarioParams) -> np.ndarray:
    """Per-channel noise standard deviation, `noise_level` times the channel range over one clean lap."""
    layout = _Layout(params)
    builder = ProfileBuilder(params)
    layout.lap(builder)
    reference = clean_channels(builder.build(), params)
    return params.noise_level * np.ptp(reference, axis=0)


def _run(profile: Profile, params: ScenarioParams, start: Pose) -> Tuple[SensorSeries, SensorSeries]:
    clean = clean_channels(profile, params)
    # The seed only drives the sensor noise, the geometry is fixed by the parameters
    rng = np.random.default_rng(params.seed)
    values = clean + rng.standard_normal(clean.shape) * noise_std(params)

    timestamps = np.arange(len(profile)) * params.dt
    poses = BicycleModel(params.wheelbase, params.dt).drive(profile, start)
    return SensorSeries(timestamps, CHANNELS, values), SensorSeries(timestamps, ODOMETRY_CHANNELS, poses)


def gen_perimeter(params: Optional[ScenarioParams] = None) -> ScenarioRun:
    """Anticlockwise laps around the rectangle, starting in the middle of the bottom side."""
    params = (params or ScenarioParams()).validate()
    layout = _Layout(params)
    builder = ProfileBuilder(params)
    for _ in range(params.laps):
        layout.lap(builder)

    series, odometry = _run(builder.build(), params, (0.0, -params.half_width, 0.0))
    logger.info(f"Perimeter run: {params.laps} laps, {len(series)} ticks")
    return ScenarioRun(series, odometry)


def gen_uturn(params: Optional[ScenarioParams] = None) -> ScenarioRun:
    """
    Starts at the beginning of the bottom side, meets the obstacle at `obstacle_fraction` of it, turns
    around and completes one clockwise lap. Its corners turn the other way and are labelled InverseCurve.
    """
    params = (params or ScenarioParams()).validate()
    layout = _Layout(params)
    builder = ProfileBuilder(params)
    approach = int(round(params.obstacle_fraction * 2 * layout.half_straight))

    builder.straight(approach).uturn().straight(approach)
    for side in (layout.side, 2 * layout.half_straight, layout.side):
        builder.corner(-1, SegmentClass.InverseCurve).straight(side)
    builder.corner(-1, SegmentClass.InverseCurve).straight(layout.half_straight)

    profile = builder.build()
    start = (-layout.half_straight * layout.step, -params.half_width, 0.0)
    series, odometry = _run(profile, params, start)
    ground_truth = GroundTruth(series.timestamps, profile.segments)
    logger.info(f"U-turn run: {len(series)} ticks, {ground_truth.labels.mean():.0%} abnormal")
    return ScenarioRun(series, odometry, ground_truth)
