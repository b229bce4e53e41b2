import math
from configparser import SectionProxy
from typing import Dict, Optional

from egokit.errors import InvalidParams


class ScenarioParams:
    """
    Geometry, kinematics and noise of the synthetic perimeter and U-turn runs.
    Noise is given relative to the range of each channel over one clean perimeter lap.
    """

    half_length: float
    half_width: float
    speed: float
    turn_rate: float
    dt: float
    laps: int
    noise_level: float
    obstacle_fraction: float
    wheelbase: float
    corner_slowdown: float
    uturn_speed_factor: float
    uturn_steering: float
    ramp_time: float
    power_speed: float
    power_accel: float
    power_turn: float
    seed: int

    def __init__(
        self,
        half_length: float = 10.0,
        half_width: float = 6.0,
        speed: float = 2.0,
        turn_rate: float = 1.0,
        dt: float = 0.1,
        laps: int = 10,
        noise_level: float = 0.02,
        obstacle_fraction: float = 0.5,
        wheelbase: float = 1.8,
        corner_slowdown: float = 0.3,
        uturn_speed_factor: float = 0.3,
        uturn_steering: float = 1.2,
        ramp_time: float = 1.0,
        power_speed: float = 1.0,
        power_accel: float = 2.0,
        power_turn: float = 1.5,
        seed: int = 0,
    ) -> None:
        self.half_length = half_length
        self.half_width = half_width
        self.speed = speed
        self.turn_rate = turn_rate
        self.dt = dt
        self.laps = laps
        self.noise_level = noise_level
        self.obstacle_fraction = obstacle_fraction
        self.wheelbase = wheelbase
        self.corner_slowdown = corner_slowdown
        self.uturn_speed_factor = uturn_speed_factor
        self.uturn_steering = uturn_steering
        self.ramp_time = ramp_time
        self.power_speed = power_speed
        self.power_accel = power_accel
        self.power_turn = power_turn
        self.seed = seed

    @property
    def uturn_yaw_rate(self) -> float:
        return self.speed * self.uturn_speed_factor * math.tan(self.uturn_steering) / self.wheelbase

    def validate(self) -> "ScenarioParams":
        positive = ("half_length", "half_width", "speed", "turn_rate", "dt", "wheelbase", "ramp_time")
        for name in positive:
            if not getattr(self, name) > 0:
                raise InvalidParams(f"Scenario parameter {name} must be positive, got {getattr(self, name)}")
        if self.dt > 0.5:
            raise InvalidParams(f"Scenario dt must be at most 0.5 s, got {self.dt}")
        if self.laps < 1:
            raise InvalidParams(f"Scenario needs at least one lap, got {self.laps}")
        if self.noise_level < 0:
            raise InvalidParams(f"Noise level must be non-negative, got {self.noise_level}")
        if not 0 < self.obstacle_fraction < 1:
            raise InvalidParams(f"Obstacle fraction must be in (0, 1), got {self.obstacle_fraction}")
        if not 0 <= self.corner_slowdown < 1 or not 0 < self.uturn_speed_factor <= 1:
            raise InvalidParams("Corner slowdown must be in [0, 1) and U-turn speed factor in (0, 1]")
        if not 0 < self.uturn_steering < math.pi / 2:
            raise InvalidParams(f"U-turn steering must be in (0, pi/2), got {self.uturn_steering}")
        if self.uturn_yaw_rate * self.ramp_time >= math.pi:
            raise InvalidParams("U-turn ramps alone turn more than half a circle, shorten ramp_time")
        if min(self.power_speed, self.power_accel, self.power_turn) < 0:
            raise InvalidParams("Power coefficients must be non-negative")
        return self

    def to_dict(self) -> Dict[str, float]:
        return dict(vars(self))

    @staticmethod
    def from_config(section: Optional[SectionProxy], **overrides) -> "ScenarioParams":
        values = ScenarioParams().to_dict()
        if section is not None:
            for name, default in values.items():
                if name not in section:
                    continue
                if isinstance(default, int):
                    values[name] = section.getint(name)
                else:
                    values[name] = section.getfloat(name)
        values.update({name: value for name, value in overrides.items() if value is not None})
        return ScenarioParams(**values).validate()
