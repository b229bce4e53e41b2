from .file_utility import atomic_path, atomic_write_text, file_digest
from .interval_func import IntervalFunc
from .logging_utility import LoggingUtility
