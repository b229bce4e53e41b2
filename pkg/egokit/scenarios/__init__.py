from .scenario_params import ScenarioParams
from .vehicle import BicycleModel, Profile, ProfileBuilder, corner_shape
from .generator import CHANNELS, ODOMETRY_CHANNELS, ScenarioRun, clean_channels, gen_perimeter, gen_uturn, noise_std
