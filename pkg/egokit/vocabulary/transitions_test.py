import numpy as np
import pytest

from egokit.errors import SequenceTooShort
from egokit.gng import GngGraph
from .transitions import default_smoothing, learn_transitions
from .vocabulary import Vocabulary


def vocabulary(size: int) -> Vocabulary:
    return Vocabulary([GngGraph(np.arange(float(size)).reshape(-1, 1))])


class TestLearnTransitions:
    def test_counts_split_evenly(self):
        model = learn_transitions([1, 1, 2], vocabulary(3), alpha=0.0)

        assert model.matrix[1].tolist() == [0.0, 0.5, 0.5]

    def test_self_transitions_give_diagonal_one(self):
        model = learn_transitions([2, 2, 2, 2], vocabulary(3), alpha=0.0)

        assert model.matrix[2, 2] == 1.0

    def test_unvisited_row_with_smoothing_is_uniform(self):
        model = learn_transitions([0, 1, 0], vocabulary(4), alpha=1.0)

        assert np.allclose(model.matrix[3], 0.25)

    def test_unvisited_row_without_smoothing_is_uniform(self):
        model = learn_transitions([0, 1, 0], vocabulary(4), alpha=0.0)

        assert np.allclose(model.matrix[2], 0.25)

    def test_every_row_sums_to_one(self):
        rng = np.random.default_rng(9)
        sequence = rng.integers(0, 12, size=300)

        for alpha in (None, 0.0, 0.3):
            model = learn_transitions(sequence, vocabulary(20), alpha=alpha)
            assert np.all(model.matrix >= 0)
            assert np.allclose(model.matrix.sum(axis=1), 1.0, atol=1e-9)

    def test_default_smoothing(self):
        model = learn_transitions(np.zeros(400, dtype=int), vocabulary(10))

        assert model.smoothing == pytest.approx(2.0)
        assert default_smoothing(10, 1000) == 1e-3

    def test_short_sequence_raises(self):
        with pytest.raises(SequenceTooShort):
            learn_transitions([1], vocabulary(3))


class TestSampleNext:
    def test_one_hot_row_always_jumps(self):
        model = learn_transitions([0, 2, 1, 2], vocabulary(3), alpha=0.0)
        rng = np.random.default_rng(0)

        successors = model.sample_next(np.zeros(100, dtype=int), rng)

        assert np.all(successors == 2)

    def test_frequencies_follow_row(self):
        model = learn_transitions([0, 1, 0, 2, 0, 2, 0, 2, 0], vocabulary(3), alpha=0.0)
        rng = np.random.default_rng(1)

        successors = model.sample_next(np.zeros(20000, dtype=int), rng)

        assert np.mean(successors == 2) == pytest.approx(0.75, abs=0.02)
        assert not np.any(successors == 0)
