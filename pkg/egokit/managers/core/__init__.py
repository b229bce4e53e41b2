from .manager_base import ManagerBase
from .log_manager import LogManager
from .filter_manager import FilterManager
from .alarm_manager import AlarmManager
