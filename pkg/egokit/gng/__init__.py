from .gng_params import GngParams
from .gng_graph import GngGraph, nearest_node, quantization_error, regularize
from .growing_neural_gas import train_gng
