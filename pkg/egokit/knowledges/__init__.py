from .knowledge import Knowledge
from .ego_thing import EgoThing
from .detector_thing import DetectorThing
