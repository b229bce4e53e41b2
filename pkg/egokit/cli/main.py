import argparse
from typing import List, Optional

from loguru import logger

from egokit.errors import EgokitError
from egokit.tools import LoggingUtility
from .commands import ExitCode, cmd_detect, cmd_evaluate, cmd_generate, cmd_select, cmd_train
from .settings import load_settings

COMMANDS = {
    "generate": cmd_generate,
    "train": cmd_train,
    "detect": cmd_detect,
    "evaluate": cmd_evaluate,
    "select": cmd_select,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="INI or JSON file overriding config.ini and config-local.ini.")
    common.add_argument("-r", "--release", help="Ignore config-local.ini.", action="store_true")
    common.add_argument("--log-level", dest="log_level", help="loguru level, i.e. DEBUG or WARNING.")

    # noinspection PyTypeChecker
    parser = argparse.ArgumentParser(
        prog="egokit",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        description="Learn switching models of a vehicle's own sensors and score abnormal behaviour.",
        epilog="""\
Pipeline:
  egokit generate --out data
  egokit train data/train.csv --all-features --out models
  egokit detect models/model_*.json --test data/test.csv --out traces
  egokit evaluate traces/anomaly_*.csv --gt data/test_gt.csv --out report.json
  egokit select report.json

Exit codes: 0 ok, 2 i/o, 3 training, 4 detection, 5 evaluation.
""",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    generate = commands.add_parser("generate", parents=[common], help="Write synthetic perimeter and U-turn runs.")
    generate.add_argument("--out", default=".", help="Output folder.")
    generate.add_argument("--seed", type=int, help="Noise seed, the test run uses seed + 1.")
    generate.add_argument("--laps", type=int, help="Perimeter laps of the training run.")
    generate.add_argument("--noise-level", dest="noise_level", type=float, help="Noise relative to channel range.")
    generate.add_argument("--odometry", action="store_true", help="Also write x, y, heading per tick.")

    train = commands.add_parser("train", parents=[common], help="Train one model per feature-case.")
    train.add_argument("train", help="Training CSV with header t,<channels>.")
    cases = train.add_mutually_exclusive_group(required=True)
    cases.add_argument("--feature", "--features", dest="features", help="Feature-case ids, i.e. SP or S,SP,SVP.")
    cases.add_argument("--all-features", dest="all_features", action="store_true", help="Every channel subset.")
    train.add_argument("--out", default=".", help="Output folder for model_<id>.json.")
    train.add_argument("--seed", type=int, help="Clustering seed.")
    train.add_argument("--order", type=int, help="Highest time derivative in the generalized state.")
    train.add_argument("--channels", help="Comma separated channel names to read.")
    train.add_argument("--jobs", type=int, help="Worker processes.")

    detect = commands.add_parser("detect", parents=[common], help="Score a test run with trained models.")
    detect.add_argument("models", nargs="+", help="Model files.")
    detect.add_argument("--test", required=True, help="Test CSV with header t,<channels>.")
    detect.add_argument("--out", default=".", help="Output folder for anomaly_<id>.csv.")
    detect.add_argument("--particles", type=int, help="Particles per filter.")
    detect.add_argument("--seed", type=int, help="Filter seed.")
    detect.add_argument("--threshold", type=float, help="Abnormality alarm threshold.")
    detect.add_argument("--jobs", type=int, help="Worker processes.")

    evaluate = commands.add_parser("evaluate", parents=[common], help="ROC, AUC and accuracy per anomaly trace.")
    evaluate.add_argument("traces", nargs="+", help="Anomaly traces.")
    evaluate.add_argument("--gt", required=True, help="Ground truth CSV with header t,class,label.")
    evaluate.add_argument("--out", default="report.json", help="Report file, ROC curves go next to it.")
    evaluate.add_argument("--smoothing-window", dest="smoothing_window", type=int, help="Moving average window.")

    select = commands.add_parser("select", parents=[common], help="Print the feature-case ranking.")
    select.add_argument("report", help="Report file written by evaluate.")
    return parser


def set_logger(config):
    log_level = config.get("general", "log_level", fallback="INFO")
    log_file = config.get("general", "log_file", fallback="no").strip()
    if log_file.lower() in ("", "no", "false", "off", "0"):
        LoggingUtility.set_logger(log_level)
    else:
        LoggingUtility.set_logger_file(log_level, log_file)


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = load_settings(args)
    except (OSError, EgokitError, ValueError) as e:
        LoggingUtility.set_logger("INFO")
        logger.error(f"Cannot read configuration: {e}")
        return int(ExitCode.IoFailure)

    set_logger(config)
    return int(COMMANDS[args.command](args, config))
