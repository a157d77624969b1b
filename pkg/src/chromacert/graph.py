"""Simple undirected graphs with dense 0-based vertex ids.

Edges are stored as (u, v) pairs with u < v, sorted lexicographically, so
every construction downstream iterates edges in one deterministic order.
Graphs are immutable values: equality and hashing are structural.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .errors import DuplicateEdgeError, SelfLoopError, VertexRangeError

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[Edge, ...]

    @staticmethod
    def build(n: int, edges: Iterable[Iterable[int]]) -> "Graph":
        """Validate and normalize an edge collection into a Graph.

        Rejects self-loops, duplicate edges (in either endpoint order) and
        endpoints outside 0..n-1. Isolated vertices are fine: n may exceed
        the number of vertices that appear in edges.
        """
        if n < 0:
            raise VertexRangeError(f"vertex count must be nonnegative, got {n}")
        seen: set[Edge] = set()
        normalized: list[Edge] = []
        for pair in edges:
            u, v = pair
            if u == v:
                raise SelfLoopError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise VertexRangeError(f"edge ({u}, {v}) outside vertex range 0..{n - 1}")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise DuplicateEdgeError(f"duplicate edge {e}")
            seen.add(e)
            normalized.append(e)
        return Graph(n, tuple(sorted(normalized)))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        """Neighbor lists, one per vertex, each sorted ascending."""
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(neighbors)) for neighbors in adj)

    def has_edge(self, u: int, v: int) -> bool:
        e = (u, v) if u < v else (v, u)
        return e in self.edge_set

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])
