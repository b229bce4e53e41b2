from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
from loguru import logger

from egokit.errors import DimensionMismatch, UnknownWord
from egokit.gng import GngGraph, GngParams, train_gng
from egokit.signals import GeneralizedSeries

Word = Tuple[int, ...]


class Vocabulary:
    """
    Alphabets (one GNG per derivative order) and the dictionary of words built from them.

    A word is one node id per derivative order. The dictionary is the full Cartesian product of the
    alphabets, numbered in row-major order, so only the alphabet sizes are needed to map between
    word tuples and dense word ids.
    """

    alphabets: List[GngGraph]
    observed_words: List[int]

    def __init__(self, alphabets: Sequence[GngGraph], observed_words: Optional[Sequence[int]] = None) -> None:
        if len(alphabets) == 0:
            raise ValueError("Vocabulary needs at least one alphabet")
        dims = {graph.dimension for graph in alphabets}
        if len(dims) != 1:
            raise DimensionMismatch(f"Alphabets have different dimensions: {sorted(dims)}")
        self.alphabets = list(alphabets)
        self.observed_words = sorted(set(observed_words or []))

    @property
    def order(self) -> int:
        return len(self.alphabets) - 1

    @property
    def dimension(self) -> int:
        """Channel count of one derivative block."""
        return self.alphabets[0].dimension

    @property
    def state_dimension(self) -> int:
        return self.dimension * len(self.alphabets)

    @property
    def shape(self) -> Tuple[int, ...]:
        return tuple(graph.node_count for graph in self.alphabets)

    @property
    def word_count(self) -> int:
        return int(np.prod(self.shape))

    @property
    def words(self) -> List[Word]:
        return [tuple(int(i) for i in index) for index in np.ndindex(*self.shape)]

    @property
    def word_index(self) -> Dict[Word, int]:
        return {word: i for i, word in enumerate(self.words)}

    def word_id(self, word: Sequence[int]) -> int:
        if len(word) != len(self.alphabets) or any(not 0 <= n < size for n, size in zip(word, self.shape)):
            raise UnknownWord(f"{tuple(word)} is not a word of a vocabulary shaped {self.shape}")
        return int(np.ravel_multi_index(tuple(word), self.shape))

    def word_tuple(self, word_id: int) -> Word:
        self.check_word(word_id)
        return tuple(int(i) for i in np.unravel_index(word_id, self.shape))

    def check_word(self, word_id: int):
        if not 0 <= word_id < self.word_count:
            raise UnknownWord(f"Word id {word_id} outside 0..{self.word_count - 1}")

    def encode_states(self, states: np.ndarray) -> np.ndarray:
        """Word ids for rows of generalized states, nearest node per derivative block."""
        states = np.asarray(states, dtype=np.float64)
        if states.ndim == 1:
            states = states.reshape(1, -1)
        if states.shape[1] != self.state_dimension:
            raise DimensionMismatch(
                f"States have dimension {states.shape[1]}, vocabulary expects {self.state_dimension}"
            )

        d = self.dimension
        nodes = [graph.assign(states[:, o * d : (o + 1) * d])[0] for o, graph in enumerate(self.alphabets)]
        return np.ravel_multi_index(tuple(nodes), self.shape)


def build_vocabulary(gen: GeneralizedSeries, params: Optional[GngParams] = None) -> Vocabulary:
    """Trains one GNG per derivative block of `gen` and marks the words its ticks encode to."""
    params = params or GngParams()
    alphabets = []
    for order in range(gen.order + 1):
        # Different seeds per order so alphabets do not share initial samples
        graph = train_gng(gen.block(order), params.with_seed(params.seed + order))
        alphabets.append(graph)
        logger.debug(f"Alphabet of order {order}: {graph.node_count} letters")

    vocabulary = Vocabulary(alphabets)
    vocabulary.observed_words = sorted(set(int(w) for w in vocabulary.encode_states(gen.states)))
    logger.info(
        f"Vocabulary {'x'.join(str(n) for n in vocabulary.shape)}: "
        f"{vocabulary.word_count} words, {len(vocabulary.observed_words)} observed"
    )
    return vocabulary


def encode(gen: GeneralizedSeries, vocab: Vocabulary) -> np.ndarray:
    if gen.order != vocab.order:
        raise DimensionMismatch(f"Series has derivative order {gen.order}, vocabulary {vocab.order}")
    if gen.dimension != vocab.dimension:
        raise DimensionMismatch(f"Series has {gen.dimension} channels, vocabulary {vocab.dimension}")
    return vocab.encode_states(gen.states)
