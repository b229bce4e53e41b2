import enum
import os
import re
from argparse import Namespace
from concurrent.futures import Future, ProcessPoolExecutor
from configparser import ConfigParser
from typing import Callable, List, Optional, Tuple

import numpy as np
from loguru import logger

from egokit.errors import EgokitError, LengthMismatch
from egokit.evaluation import (
    build_report,
    read_ground_truth,
    read_report_set,
    select_model,
    summary_table,
    write_report_set,
    write_roc_csv,
)
from egokit.models import TrainingSettings, read_anomaly_trace
from egokit.scenarios import ScenarioParams, gen_perimeter, gen_uturn
from egokit.signals import FeatureCase, enumerate_cases, ingest_csv, read_csv_channels
from egokit.tools import file_digest
from .jobs import detect_job, train_job
from .settings import config_channels, config_to_dict


class ExitCode(enum.IntEnum):
    Ok = 0
    IoFailure = 2
    TrainFailure = 3
    DetectFailure = 4
    EvaluateFailure = 5


TRACE_NAME = re.compile(r"^anomaly_(?P<feature>.+)\.csv$")


def _jobs(config: ConfigParser) -> int:
    return max(1, config.getint("cli", "jobs", fallback=1))


def _run_tasks(
    tasks: List[Tuple[str, Callable, tuple]], jobs: int, failure: ExitCode
) -> Tuple[ExitCode, List[object]]:
    """
    Runs (name, function, arguments) tasks inline or in a process pool. Results keep the task order.
    The first failing task, in task order, decides the exit code.
    """
    outcomes: List[Tuple[str, Optional[object], Optional[BaseException]]] = []
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as executor:
            futures: List[Tuple[str, Future]] = [(name, executor.submit(func, *args)) for name, func, args in tasks]
            for name, future in futures:
                try:
                    outcomes.append((name, future.result(), None))
                except Exception as e:  # noqa, reported below
                    outcomes.append((name, None, e))
    else:
        for name, func, args in tasks:
            try:
                outcomes.append((name, func(*args), None))
            except Exception as e:  # noqa, reported below
                outcomes.append((name, None, e))

    code = ExitCode.Ok
    results = []
    for name, result, error in outcomes:
        if error is None:
            results.append(result)
            continue
        logger.error(f"{name}: {type(error).__name__}: {error}")
        if code == ExitCode.Ok:
            code = ExitCode.IoFailure if isinstance(error, OSError) else failure
    return code, results


def cmd_generate(args: Namespace, config: ConfigParser) -> ExitCode:
    """Writes train.csv (perimeter laps), test.csv and test_gt.csv (U-turn run)."""
    params = ScenarioParams.from_config(config["scenario"] if config.has_section("scenario") else None)
    # The test run gets its own noise
    test_params = ScenarioParams(**{**params.to_dict(), "seed": params.seed + 1})
    train = gen_perimeter(params)
    test = gen_uturn(test_params)

    try:
        os.makedirs(args.out, exist_ok=True)
        train.series.to_csv(os.path.join(args.out, "train.csv"))
        test.series.to_csv(os.path.join(args.out, "test.csv"))
        test.ground_truth.to_csv(os.path.join(args.out, "test_gt.csv"))
        if args.odometry:
            train.odometry.to_csv(os.path.join(args.out, "train_odometry.csv"))
            test.odometry.to_csv(os.path.join(args.out, "test_odometry.csv"))
    except OSError as e:
        logger.error(f"Cannot write scenario files to {args.out}: {e}")
        return ExitCode.IoFailure

    logger.info(f"Generated {len(train.series)} training and {len(test.series)} test ticks into {args.out}")
    return ExitCode.Ok


def _feature_cases(args: Namespace, channels: List[str]) -> List[FeatureCase]:
    if args.all_features:
        return enumerate_cases(channels)
    labels = [label.strip() for label in args.features.split(",") if label.strip()]
    return [FeatureCase.parse(label, channels) for label in labels]


def cmd_train(args: Namespace, config: ConfigParser) -> ExitCode:
    """Trains one model file per requested feature-case."""
    try:
        data_hash = file_digest(args.train)
        os.makedirs(args.out, exist_ok=True)
    except OSError as e:
        logger.error(f"Cannot read {args.train} or create {args.out}: {e}")
        return ExitCode.IoFailure

    try:
        channels = config_channels(config) or read_csv_channels(args.train)
        series = ingest_csv(args.train, channels)
        cases = _feature_cases(args, channels)
        settings = TrainingSettings.from_config(config)
    except (EgokitError, ValueError) as e:
        logger.error(f"Cannot train on {args.train}: {e}")
        return ExitCode.TrainFailure

    tasks = [(f"feature {case.id}", train_job, (series, case, settings, data_hash, args.out)) for case in cases]
    code, paths = _run_tasks(tasks, _jobs(config), ExitCode.TrainFailure)
    for path in paths:
        logger.info(f"Wrote {path}")
    return code


def cmd_detect(args: Namespace, config: ConfigParser) -> ExitCode:
    """Runs every model over the test series and writes anomaly_<id>.csv per model."""
    try:
        os.makedirs(args.out, exist_ok=True)
        channels = read_csv_channels(args.test)
    except OSError as e:
        logger.error(f"Cannot read {args.test} or create {args.out}: {e}")
        return ExitCode.IoFailure

    try:
        series = ingest_csv(args.test, channels)
    except (EgokitError, ValueError) as e:
        logger.error(f"Cannot read test series {args.test}: {e}")
        return ExitCode.DetectFailure

    values = config_to_dict(config)
    tasks = [(path, detect_job, (path, series, values, args.out)) for path in args.models]
    code, outcomes = _run_tasks(tasks, _jobs(config), ExitCode.DetectFailure)
    for feature_id, path, alarms in outcomes:  # type: ignore
        logger.info(f"Wrote {path}, {alarms} alarms for {feature_id}")
    return code


def _trace_feature_id(path: str) -> str:
    name = os.path.basename(path)
    match = TRACE_NAME.match(name)
    return match.group("feature") if match else os.path.splitext(name)[0]


def cmd_evaluate(args: Namespace, config: ConfigParser) -> ExitCode:
    """Scores every anomaly trace against the ground truth and writes the report and ROC curves."""
    window = config.getint("evaluation", "smoothing_window", fallback=1)
    out_dir = os.path.dirname(os.path.abspath(args.out))
    try:
        ground_truth = read_ground_truth(args.gt)
        reports = []
        for path in args.traces:
            trace = read_anomaly_trace(path)
            if len(trace) == 0 or trace.ticks[-1] + 1 != len(ground_truth):
                raise LengthMismatch(f"{path} covers {len(trace)} ticks, ground truth has {len(ground_truth)}")
            if not np.allclose(trace.timestamps, ground_truth.timestamps[trace.ticks]):
                raise LengthMismatch(f"{path} timestamps do not match the ground truth")
            aligned = ground_truth.select(trace.ticks)
            reports.append(build_report(_trace_feature_id(path), trace.thetas, aligned, window))

        os.makedirs(out_dir, exist_ok=True)
        ranking = write_report_set(args.out, reports)
        for report in ranking:
            write_roc_csv(out_dir, report)
    except OSError as e:
        logger.error(f"Evaluation I/O failed: {e}")
        return ExitCode.IoFailure
    except (EgokitError, ValueError, KeyError) as e:
        logger.error(f"Evaluation failed: {type(e).__name__}: {e}")
        return ExitCode.EvaluateFailure

    logger.info(f"Wrote {args.out}, winner {ranking[0].feature_id} with AUC {ranking[0].auc:.4f}")
    return ExitCode.Ok


def cmd_select(args: Namespace, config: ConfigParser) -> ExitCode:
    """Prints the ranking, winner first, followed by the AUC/ACC table."""
    try:
        ranking = select_model(read_report_set(args.report))
    except OSError as e:
        logger.error(f"Cannot read {args.report}: {e}")
        return ExitCode.IoFailure
    except (EgokitError, ValueError, KeyError) as e:
        logger.error(f"Cannot select from {args.report}: {e}")
        return ExitCode.EvaluateFailure

    for report in ranking:
        print(f"{report.feature_id}\tAUC {report.auc:.4f}\tACC {report.best_acc:.4f}")
    print()
    print(summary_table(ranking))
    return ExitCode.Ok
