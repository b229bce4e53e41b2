from .log_manager import ILogManager
from .filter_manager import IFilterManager
