import json
import os
from typing import Dict, List

import numpy as np
import pytest

from egokit.evaluation import EvalReport, build_report, select_model
from egokit.filters import run_sequence
from egokit.gng import GngParams
from egokit.models import TrainingSettings, train_feature_case
from egokit.scenarios import ScenarioParams, gen_perimeter, gen_uturn
from egokit.signals import enumerate_cases
from .main import main

SEEDS = [0, 1, 2, 3, 4]


class SeedOutcome:
    def __init__(self, ranking: List[EvalReport], replay_theta: float):
        self.ranking = ranking
        self.replay_theta = replay_theta

    @property
    def best(self) -> EvalReport:
        return self.ranking[0]


def perimeter_experiment(seed: int) -> SeedOutcome:
    """Train every feature-case on perimeter laps, score the U-turn run, replay the training run through the best."""
    train = gen_perimeter(ScenarioParams(seed=seed)).series
    test = gen_uturn(ScenarioParams(seed=seed + 1))
    settings = TrainingSettings(gng=GngParams(seed=seed))

    models = {}
    reports = []
    for case in enumerate_cases(train.channels):
        model = train_feature_case(train, case, settings).to_bundle()
        results = run_sequence(model, test.series, seed=seed)
        aligned = test.ground_truth.select([result.tick for result in results])
        reports.append(build_report(case.id, [result.theta for result in results], aligned))
        models[case.id] = model

    ranking = select_model(reports)
    replay = run_sequence(models[ranking[0].feature_id], train, seed=seed)
    return SeedOutcome(ranking, float(np.mean([result.theta for result in replay])))


@pytest.fixture(scope="module")
def outcomes() -> Dict[int, SeedOutcome]:
    return {seed: perimeter_experiment(seed) for seed in SEEDS}


def rounded(value):
    if isinstance(value, float):
        return round(value, 6)
    if isinstance(value, list):
        return [rounded(item) for item in value]
    if isinstance(value, dict):
        return {key: rounded(item) for key, item in value.items()}
    return value


class TestPerimeterExperiment:
    def test_abnormal_ticks_score_higher(self, outcomes):
        for seed, outcome in outcomes.items():
            for report in outcome.ranking:
                assert report.mean_theta_abnormal > report.mean_theta_normal, f"seed {seed} {report.feature_id}"

    def test_best_feature_case_separates_uturn(self, outcomes):
        good = [seed for seed, outcome in outcomes.items() if outcome.best.auc >= 0.70]

        assert len(good) >= 4

    def test_training_replay_looks_normal(self, outcomes):
        for seed, outcome in outcomes.items():
            assert outcome.replay_theta <= outcome.best.mean_theta_abnormal - 0.15, f"seed {seed}"


class TestCommandLinePipeline:
    def run_pipeline(self, root: str, jobs: str) -> dict:
        data, models, traces = (os.path.join(root, name) for name in ("data", "models", "traces"))
        report = os.path.join(root, "report.json")

        assert main(["generate", "--out", data, "--seed", "7", "--release"]) == 0
        train = os.path.join(data, "train.csv")
        flags = ["--seed", "7", "--jobs", jobs, "--release"]
        assert main(["train", train, "--all-features", "--out", models, *flags]) == 0
        model_files = sorted(os.path.join(models, name) for name in os.listdir(models))
        test = os.path.join(data, "test.csv")
        assert main(["detect", *model_files, "--test", test, "--out", traces, *flags]) == 0
        trace_files = sorted(os.path.join(traces, name) for name in os.listdir(traces))
        gt = os.path.join(data, "test_gt.csv")
        assert main(["evaluate", *trace_files, "--gt", gt, "--out", report, "--release"]) == 0
        assert main(["select", report, "--release"]) == 0

        with open(report, encoding="utf-8") as handle:
            return rounded(json.load(handle))

    def test_same_seed_gives_identical_report(self, tmp_path):
        first = self.run_pipeline(str(tmp_path / "first"), "1")
        second = self.run_pipeline(str(tmp_path / "second"), "2")

        assert first == second
        assert len(first["features"]) == 7
