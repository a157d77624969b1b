"""Deterministic test-graph generators.

Every generator is a pure function of its parameters and the seed: the same
call always returns the same graph. Random kinds draw one uniform variate
per candidate pair in sorted pair order, so outputs are reproducible across
platforms via the stdlib Mersenne Twister.
"""

from __future__ import annotations

import random
from itertools import combinations
from typing import Sequence

from .errors import InvalidParamsError
from .graph import Graph

GENERATOR_KINDS = (
    "cycle",
    "complete",
    "complete-multipartite",
    "random-gnp",
    "random-planted-3-partition",
    "petersen",
)


def cycle_graph(k: int) -> Graph:
    if k < 3:
        raise InvalidParamsError(f"cycle length must be at least 3, got {k}")
    return Graph.build(k, [(i, (i + 1) % k) for i in range(k)])


def complete_graph(k: int) -> Graph:
    if k < 0:
        raise InvalidParamsError(f"complete graph size must be nonnegative, got {k}")
    return Graph.build(k, combinations(range(k), 2))


def complete_multipartite(sizes: Sequence[int]) -> Graph:
    """Complete multipartite graph; parts occupy consecutive vertex ranges."""
    if not sizes or any(s < 1 for s in sizes):
        raise InvalidParamsError(f"part sizes must be positive, got {tuple(sizes)}")
    part = _part_index(sizes)
    n = sum(sizes)
    edges = [(u, v) for u, v in combinations(range(n), 2) if part[u] != part[v]]
    return Graph.build(n, edges)


def gnp(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi G(n, p), each pair drawn independently."""
    if n < 0:
        raise InvalidParamsError(f"vertex count must be nonnegative, got {n}")
    _check_probability(p)
    rng = random.Random(seed)
    edges = [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p]
    return Graph.build(n, edges)


def planted_three_partition(sizes: Sequence[int], p: float, seed: int) -> Graph:
    """Random graph on three planted independent sets; 3-colorable by construction.

    Only pairs crossing two different parts are candidate edges, each kept
    with probability p, so the planted partition is always a proper coloring.
    """
    if len(sizes) != 3 or any(s < 1 for s in sizes):
        raise InvalidParamsError(f"need three positive part sizes, got {tuple(sizes)}")
    _check_probability(p)
    part = _part_index(sizes)
    n = sum(sizes)
    rng = random.Random(seed)
    edges = []
    for u, v in combinations(range(n), 2):
        if part[u] != part[v] and rng.random() < p:
            edges.append((u, v))
    return Graph.build(n, edges)


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.build(10, outer + spokes + inner)


def generate(kind: str, params: dict | None = None, seed: int = 0) -> Graph:
    """Dispatch on a generator kind name; see GENERATOR_KINDS."""
    params = dict(params or {})
    if kind not in GENERATOR_KINDS:
        raise InvalidParamsError(f"unknown generator kind {kind!r}")
    try:
        if kind == "cycle":
            g = cycle_graph(int(params.pop("k")))
        elif kind == "complete":
            g = complete_graph(int(params.pop("k")))
        elif kind == "complete-multipartite":
            g = complete_multipartite(tuple(params.pop("sizes")))
        elif kind == "random-gnp":
            g = gnp(int(params.pop("n")), float(params.pop("p")), seed)
        elif kind == "random-planted-3-partition":
            g = planted_three_partition(tuple(params.pop("sizes")), float(params.pop("p")), seed)
        else:
            g = petersen()
    except KeyError as exc:
        raise InvalidParamsError(f"missing parameter {exc} for kind {kind!r}") from None
    except (TypeError, ValueError) as exc:
        raise InvalidParamsError(f"bad parameter for kind {kind!r}: {exc}") from None
    if params:
        raise InvalidParamsError(f"unexpected parameters {sorted(params)} for kind {kind!r}")
    return g


def _part_index(sizes: Sequence[int]) -> list[int]:
    part = []
    for i, size in enumerate(sizes):
        part.extend([i] * size)
    return part


def _check_probability(p: float) -> None:
    if not 0.0 <= p <= 1.0:
        raise InvalidParamsError(f"edge probability must be in [0, 1], got {p}")
