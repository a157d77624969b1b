"""Exhaustive brute-force deciders, independent of the solver modules.

These enumerate plainly: color assignments in lexicographic order over
vertex-indexed tuples, orientations in lexicographic order over the sorted
edge list (bit 0 of an orientation index is the last edge; bit value 1
flips an edge to point from its larger endpoint). The first satisfying
instance is returned; the only shortcut is abandoning an instance at its
first violated constraint. No decision logic is shared with the BFS /
backtracking solvers this package compares them against; witnesses are
revalidated with the labeling verifiers before being returned.

Budgets are hard limits: an instance over budget raises instead of being
approximated. Enumeration may be partitioned across worker processes via
``jobs``; decisions and counts are identical to the sequential scan.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .coloring import Coloring
from .errors import BudgetExceededError, InvalidParamsError
from .graph import Graph
from .labeling import EdgeLabeling, verify_one_two_uniform, verify_uniform

DEFAULT_MAX_N_TWO_COLOR = 20
DEFAULT_MAX_N_THREE_COLOR = 12
DEFAULT_MAX_EDGES = 20

_PARALLEL_THRESHOLD = 1 << 12


@dataclass(frozen=True)
class OracleReport:
    decision: bool
    witness: Coloring | EdgeLabeling | None
    instances_checked: int

    def to_json_obj(self) -> dict:
        return {
            "decision": self.decision,
            "witness": self.witness.to_json_obj() if self.witness is not None else None,
            "instances_checked": self.instances_checked,
        }


def oracle_k_colorable(g: Graph, k: int, max_n: int | None = None, jobs: int = 1) -> OracleReport:
    """Enumerate all k^n color assignments; decide whether any is proper."""
    if k not in (2, 3):
        raise InvalidParamsError(f"k must be 2 or 3, got {k}")
    budget = max_n if max_n is not None else (
        DEFAULT_MAX_N_TWO_COLOR if k == 2 else DEFAULT_MAX_N_THREE_COLOR)
    if g.n > budget:
        raise BudgetExceededError(f"n={g.n} exceeds enumeration budget {budget} for k={k}")
    total = k ** g.n
    hit = _first_hit(_scan_colorings, (g.n, k, g.edges), total, jobs)
    if hit is None:
        return OracleReport(False, None, total)
    colors = tuple(d + 1 for d in _digits(hit, g.n, k))
    return OracleReport(True, Coloring(colors), hit + 1)


def oracle_uniform_labeling_exists(g: Graph, max_edges: int | None = None,
                                   jobs: int = 1) -> OracleReport:
    """Enumerate all 2^m orientations; decide whether any is uniform."""
    total = _orientation_budget(g, max_edges)
    hit = _first_hit(_scan_uniform, (g.n, g.edges), total, jobs)
    if hit is None:
        return OracleReport(False, None, total)
    witness = _labeling_at(hit, g)
    assert not verify_uniform(g, witness)
    return OracleReport(True, witness, hit + 1)


def oracle_one_two_uniform_exists(g: Graph, max_edges: int | None = None,
                                  jobs: int = 1) -> OracleReport:
    """Enumerate all 2^m orientations; decide whether any is one-two uniform."""
    total = _orientation_budget(g, max_edges)
    hit = _first_hit(_scan_one_two, (g.n, g.edges), total, jobs)
    if hit is None:
        return OracleReport(False, None, total)
    witness = _labeling_at(hit, g)
    assert not verify_one_two_uniform(g, witness)
    return OracleReport(True, witness, hit + 1)


def _orientation_budget(g: Graph, max_edges: int | None) -> int:
    budget = DEFAULT_MAX_EDGES if max_edges is None else max_edges
    if g.m > budget:
        raise BudgetExceededError(f"m={g.m} exceeds enumeration budget {budget}")
    return 1 << g.m


def _digits(index: int, n: int, k: int) -> list[int]:
    """Base-k digits of index, most significant (vertex 0) first."""
    digits = [0] * n
    for v in range(n - 1, -1, -1):
        index, digits[v] = divmod(index, k)
    return digits


def _labeling_at(index: int, g: Graph) -> EdgeLabeling:
    m = g.m
    pairs = []
    for j, (u, v) in enumerate(g.edges):
        flipped = (index >> (m - 1 - j)) & 1
        pairs.append((v, u) if flipped else (u, v))
    return EdgeLabeling(g.n, tuple(pairs))


def _first_hit(scanner, payload, total: int, jobs: int) -> int | None:
    """Least index in [0, total) accepted by scanner, or None.

    With jobs > 1 the range is split into contiguous chunks scanned in
    worker processes; taking the minimum over per-chunk first hits gives
    exactly the sequential answer.
    """
    if jobs <= 1 or total < _PARALLEL_THRESHOLD:
        return scanner(payload, 0, total)
    bounds = [total * i // jobs for i in range(jobs + 1)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        futures = [pool.submit(scanner, payload, lo, hi)
                   for lo, hi in zip(bounds, bounds[1:]) if lo < hi]
        hits = [f.result() for f in futures]
    return min((h for h in hits if h is not None), default=None)


def _scan_colorings(payload, lo: int, hi: int) -> int | None:
    n, k, edges = payload
    digits = _digits(lo, n, k)
    for index in range(lo, hi):
        ok = True
        for u, v in edges:
            if digits[u] == digits[v]:
                ok = False
                break
        if ok:
            return index
        for v in range(n - 1, -1, -1):  # odometer increment, last vertex least significant
            if digits[v] < k - 1:
                digits[v] += 1
                break
            digits[v] = 0
    return None


def _scan_uniform(payload, lo: int, hi: int) -> int | None:
    n, edges = payload
    m = len(edges)
    us = [e[0] for e in edges]
    vs = [e[1] for e in edges]
    shifts = [m - 1 - j for j in range(m)]
    polarity = [0] * n
    stamp = [-1] * n
    for index in range(lo, hi):
        ok = True
        for j in range(m):
            if (index >> shifts[j]) & 1:
                s, t = vs[j], us[j]
            else:
                s, t = us[j], vs[j]
            if stamp[s] != index:
                stamp[s] = index
                polarity[s] = 1
            elif polarity[s] != 1:
                ok = False
                break
            if stamp[t] != index:
                stamp[t] = index
                polarity[t] = -1
            elif polarity[t] != -1:
                ok = False
                break
        if ok:
            return index
    return None


def _scan_one_two(payload, lo: int, hi: int) -> int | None:
    n, edges = payload
    m = len(edges)
    us = [e[0] for e in edges]
    vs = [e[1] for e in edges]
    shifts = [m - 1 - j for j in range(m)]
    out_stamp = [-1] * n
    in_stamp = [-1] * n
    for index in range(lo, hi):
        for j in range(m):
            if (index >> shifts[j]) & 1:
                out_stamp[vs[j]] = index
                in_stamp[us[j]] = index
            else:
                out_stamp[us[j]] = index
                in_stamp[vs[j]] = index
        ok = True
        for j in range(m):
            u, v = us[j], vs[j]
            if ((out_stamp[u] == index) + 2 * (in_stamp[u] == index)
                    == (out_stamp[v] == index) + 2 * (in_stamp[v] == index)):
                ok = False
                break
        if ok:
            return index
    return None
