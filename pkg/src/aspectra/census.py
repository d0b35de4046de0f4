"""Small-graph enumeration, brute-force canonical forms and seeded random graphs."""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterator

import numpy as np

from .graph import Graph, is_connected

MAX_CANONICAL_ORDER = 8


def _pairs(n: int) -> list[tuple[int, int]]:
    """Upper-triangle pairs in graph6 (column-major) order."""
    return [(i, j) for j in range(1, n) for i in range(j)]


def labeled_graphs(n: int) -> Iterator[Graph]:
    """Every labelled simple graph on ``n`` vertices, one per upper-triangle mask."""
    pairs = _pairs(n)
    for code in range(1 << len(pairs)):
        masks = [0] * n
        for k, (i, j) in enumerate(pairs):
            if (code >> k) & 1:
                masks[i] |= 1 << j
                masks[j] |= 1 << i
        yield Graph.from_masks(masks)


def edge_code(g: Graph) -> int:
    """Integer whose bit k is set iff the k-th upper-triangle pair is an edge."""
    code = 0
    for k, (i, j) in enumerate(_pairs(g.order)):
        if g.adjacent(i, j):
            code |= 1 << k
    return code


def from_edge_code(n: int, code: int) -> Graph:
    masks = [0] * n
    for k, (i, j) in enumerate(_pairs(n)):
        if (code >> k) & 1:
            masks[i] |= 1 << j
            masks[j] |= 1 << i
    return Graph.from_masks(masks)


@lru_cache(maxsize=None)
def _permuted_weights(n: int) -> np.ndarray:
    """weights[p, k] = 2**(index of the image of pair k under permutation p)."""
    pairs = _pairs(n)
    index = {pq: k for k, pq in enumerate(pairs)}
    perms = list(itertools.permutations(range(n)))
    w = np.zeros((len(perms), len(pairs)), dtype=np.int64)
    for pi, perm in enumerate(perms):
        for k, (i, j) in enumerate(pairs):
            u, v = perm[i], perm[j]
            w[pi, k] = 1 << index[(min(u, v), max(u, v))]
    return w


def canonical_code(g: Graph) -> int:
    """Minimum edge code over all vertex relabellings."""
    n = g.order
    if n > MAX_CANONICAL_ORDER:
        raise ValueError(f"brute-force canonical form limited to {MAX_CANONICAL_ORDER} vertices")
    if n < 2:
        return 0
    code = edge_code(g)
    idx = [k for k in range(n * (n - 1) // 2) if (code >> k) & 1]
    if not idx:
        return 0
    return int(_permuted_weights(n)[:, idx].sum(axis=1).min())


def canonical_form(g: Graph) -> Graph:
    return from_edge_code(g.order, canonical_code(g))


def _dedup(graphs) -> list[Graph]:
    codes: dict[int, None] = {}
    n = None
    for g in graphs:
        n = g.order
        codes.setdefault(canonical_code(g), None)
    if n is None:
        return []
    return [from_edge_code(n, c) for c in sorted(codes)]


@lru_cache(maxsize=None)
def _isomorphism_classes(n: int) -> tuple[Graph, ...]:
    if n <= 5:
        return tuple(_dedup(labeled_graphs(n)))
    # every graph on n vertices is a smaller class plus one vertex
    def extensions():
        for h in _isomorphism_classes(n - 1):
            for nb in range(1 << (n - 1)):
                masks = list(h.masks) + [nb]
                for v in range(n - 1):
                    if (nb >> v) & 1:
                        masks[v] |= 1 << (n - 1)
                yield Graph.from_masks(masks)
    return tuple(_dedup(extensions()))


def nonisomorphic_graphs(n: int, connected: bool = True) -> list[Graph]:
    """One canonical representative per isomorphism class, sorted by canonical code."""
    if n < 1:
        return []
    if n > MAX_CANONICAL_ORDER - 1:
        raise ValueError(f"exhaustive enumeration is limited to {MAX_CANONICAL_ORDER - 1} vertices")
    reps = _isomorphism_classes(n)
    return [g for g in reps if is_connected(g)] if connected else list(reps)


def random_graph(n: int, p: float, rng: np.random.Generator) -> Graph:
    """Erdos-Renyi G(n, p)."""
    edges = [(i, j) for j in range(1, n) for i in range(j) if rng.random() < p]
    return Graph(n, edges)


def random_graphs(count: int, n_range: tuple[int, int], seed: int,
                  probabilities=(0.2, 0.5, 0.8)) -> Iterator[Graph]:
    """Seeded stream; each graph draws its order from ``n_range`` and p from ``probabilities``."""
    rng = np.random.default_rng(seed)
    lo, hi = n_range
    for _ in range(count):
        n = int(rng.integers(lo, hi + 1))
        p = float(probabilities[int(rng.integers(len(probabilities)))])
        yield random_graph(n, p, rng)
