"""All graphs on a few vertices, one per isomorphism class.

Edge sets are bitmasks over the ``n(n-1)/2`` vertex pairs.  The canonical
form of a mask is its minimum over all vertex permutations, computed for
every mask at once with numpy.  Practical up to ``n = 6`` (32768 masks by
720 permutations).
"""

from __future__ import annotations

import itertools
from functools import lru_cache

import numpy as np

from .errors import BudgetError
from .graph import Graph, build_graph, connected_components

MAX_CATALOG_N = 6


def _pairs(n: int) -> list[tuple[int, int]]:
    return list(itertools.combinations(range(n), 2))


@lru_cache(maxsize=None)
def canonical_masks(n: int) -> np.ndarray:
    """Sorted array of canonical edge masks, one per isomorphism class."""
    if n > MAX_CATALOG_N:
        raise BudgetError(f"catalog limited to n <= {MAX_CATALOG_N}")
    pairs = _pairs(n)
    E = len(pairs)
    if E == 0:
        return np.zeros(1, dtype=np.int64)
    index = {p: i for i, p in enumerate(pairs)}
    masks = np.arange(1 << E, dtype=np.int64)
    bits = ((masks[:, None] >> np.arange(E)) & 1).astype(np.int64)
    best = masks.copy()
    for perm in itertools.permutations(range(n)):
        target = [index[tuple(sorted((perm[u], perm[v])))] for u, v in pairs]
        weights = np.left_shift(np.int64(1), np.array(target, dtype=np.int64))
        np.minimum(best, bits @ weights, out=best)
    return np.unique(best)


def mask_to_graph(n: int, mask: int) -> Graph:
    return build_graph(n, [p for i, p in enumerate(_pairs(n)) if mask >> i & 1])


def graphs(n: int, connected: bool = False) -> list[Graph]:
    """Non-isomorphic graphs on ``n`` vertices, ordered by edge count then mask."""
    out = [mask_to_graph(n, int(m)) for m in canonical_masks(n)]
    if connected:
        out = [G for G in out if len(connected_components(G)) == 1]
    out.sort(key=lambda G: (G.m, G.edges))
    return out


def graphs_up_to(n_max: int, connected: bool = False, n_min: int = 1) -> list[Graph]:
    return [G for n in range(n_min, n_max + 1) for G in graphs(n, connected)]
