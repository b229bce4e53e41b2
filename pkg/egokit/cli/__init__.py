from .main import main, build_parser
from .commands import ExitCode
