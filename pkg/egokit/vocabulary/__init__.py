from .vocabulary import Vocabulary, Word, build_vocabulary, encode
from .transitions import TransitionModel, default_smoothing, learn_transitions
from .word_dynamics import WordDynamics, WordDynamicsTable, word_dynamics
