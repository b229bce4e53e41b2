from typing import Optional

import numpy as np
from loguru import logger

from egokit.errors import TooFewSamples
from .gng_graph import GngGraph
from .gng_params import GngParams

NO_EDGE = -1


def train_gng(points: np.ndarray, params: Optional[GngParams] = None) -> GngGraph:
    """
    Fits a Growing Neural Gas to `points` (rows are samples).

    Samples are presented in their given order for `params.epochs` passes. The two initial nodes are
    distinct samples picked with `params.seed`, which makes training fully deterministic.
    Per-node statistics are computed on `points` before returning.
    """
    params = (params or GngParams()).validate()
    points = np.asarray(points, dtype=np.float64)
    if points.ndim == 1:
        points = points.reshape(-1, 1)
    count, dim = points.shape
    if count < 2:
        raise TooFewSamples(f"GNG needs at least 2 samples, got {count}")

    rng = np.random.default_rng(params.seed)
    capacity = params.max_nodes
    weights = np.zeros((capacity, dim))
    errors = np.zeros(capacity)
    alive = np.zeros(capacity, dtype=bool)
    # ages[i, j] is the edge age, NO_EDGE where nodes are not connected
    ages = np.full((capacity, capacity), NO_EDGE, dtype=np.int64)

    first, second = rng.choice(count, size=2, replace=False)
    weights[0] = points[first]
    weights[1] = points[second]
    alive[:2] = True
    ages[0, 1] = ages[1, 0] = 0

    step = 0
    for _ in range(params.epochs):
        for sample in points:
            step += 1
            distances = np.sum((weights - sample) ** 2, axis=1)
            distances[~alive] = np.inf
            winner, runner_up = np.argsort(distances, kind="stable")[:2]

            connected = ages[winner] >= 0
            ages[winner, connected] += 1
            ages[connected, winner] += 1
            errors[winner] += distances[winner]

            weights[winner] += params.eps_b * (sample - weights[winner])
            weights[connected] += params.eps_n * (sample - weights[connected])
            ages[winner, runner_up] = ages[runner_up, winner] = 0

            expired = ages > params.max_age
            if expired.any():
                ages[expired] = NO_EDGE
                isolated = alive & ~np.any(ages >= 0, axis=1)
                if isolated.any() and alive.sum() - isolated.sum() >= 2:
                    alive[isolated] = False
                    errors[isolated] = 0.0

            if step % params.lambda_insert == 0 and alive.sum() < capacity:
                _insert_node(weights, errors, alive, ages, params.alpha)

            errors[alive] *= params.d_decay

    graph = _compact(weights, errors, alive, ages, params)
    graph.compute_node_stats(points)
    logger.debug(f"GNG trained: {graph.node_count} nodes, {len(graph.edges)} edges, {step} steps")
    return graph


def _insert_node(weights: np.ndarray, errors: np.ndarray, alive: np.ndarray, ages: np.ndarray, alpha: float):
    worst = int(np.argmax(np.where(alive, errors, -np.inf)))
    neighbors = ages[worst] >= 0
    if not neighbors.any():
        return
    partner = int(np.argmax(np.where(neighbors, errors, -np.inf)))
    new = int(np.argmin(alive))

    weights[new] = 0.5 * (weights[worst] + weights[partner])
    alive[new] = True
    ages[new, :] = NO_EDGE
    ages[:, new] = NO_EDGE
    ages[worst, partner] = ages[partner, worst] = NO_EDGE
    ages[worst, new] = ages[new, worst] = 0
    ages[partner, new] = ages[new, partner] = 0

    errors[worst] *= alpha
    errors[partner] *= alpha
    errors[new] = errors[worst]


def _compact(
    weights: np.ndarray, errors: np.ndarray, alive: np.ndarray, ages: np.ndarray, params: GngParams
) -> GngGraph:
    """Renumbers live nodes to 0..N-1 keeping slot order."""
    slots = np.flatnonzero(alive)
    renumber = {int(slot): index for index, slot in enumerate(slots)}
    edges = []
    for a, b in zip(*np.nonzero(np.triu(ages >= 0, k=1))):
        if int(a) in renumber and int(b) in renumber:
            edges.append((renumber[int(a)], renumber[int(b)], int(ages[a, b])))
    return GngGraph(weights[slots], errors[slots], edges, params)
