# re-export
from .constants import Constants
from .errors import EgokitError
