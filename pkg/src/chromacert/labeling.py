"""Directional edge labelings stored as edge orientations.

Labeling an edge by the ordered pair ab in one direction forces the reverse
reading ba, so a full labeling is exactly an orientation: one ordered
(source, target) pair per edge, meaning the label reads ab from source to
target. Reading outward at a vertex, a pure source sees only ab (class AB),
a pure sink only ba (class BA), and a vertex with both incoming and
outgoing edges sees both (class MIXED).

Two per-edge compatibility predicates are checked here:

* uniform: no endpoint is MIXED (equivalently, every vertex is a pure
  source or pure sink), which forces every edge to join AB to BA;
* one-two uniform: the two endpoint classes merely differ, so the allowed
  unordered pairs are {AB, BA}, {AB, MIXED} and {BA, MIXED}.

A graph admits a uniform labeling iff it is 2-colorable, and a one-two
uniform labeling iff it is 3-colorable; the constructive maps in both
directions live here.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from typing import Iterable

from .coloring import Coloring, validate_coloring
from .errors import (
    ForeignLabelingError,
    GraphFormatError,
    NotOneTwoUniformError,
    NotUniformError,
)
from .graph import Edge, Graph

RULE_MIXED_ENDPOINT = "mixed-endpoint"
RULE_SAME_CLASS = "same-class"


class VertexClass(Enum):
    AB = "ab"
    BA = "ba"
    MIXED = "mixed"
    ISOLATED = "isolated"


@dataclass(frozen=True)
class EdgeLabeling:
    n: int
    orient: tuple[tuple[int, int], ...]

    @staticmethod
    def build(g: Graph, pairs: Iterable[Iterable[int]]) -> "EdgeLabeling":
        """Validate (source, target) pairs as an orientation of exactly g's edges."""
        chosen: dict[Edge, tuple[int, int]] = {}
        for pair in pairs:
            s, t = pair
            e = (s, t) if s < t else (t, s)
            if s == t or not g.has_edge(s, t):
                raise ForeignLabelingError(f"({s}, {t}) is not an edge of the graph")
            if e in chosen:
                raise ForeignLabelingError(f"edge {e} oriented more than once")
            chosen[e] = (s, t)
        if len(chosen) != g.m:
            missing = [e for e in g.edges if e not in chosen]
            raise ForeignLabelingError(f"unoriented edges remain: {missing}")
        return EdgeLabeling(g.n, tuple(chosen[e] for e in g.edges))

    def to_json_obj(self) -> dict:
        return {"orient": [list(pair) for pair in self.orient]}


def check_belongs(g: Graph, labeling: EdgeLabeling) -> None:
    """Raise unless the labeling orients exactly the edges of g."""
    underlying = tuple((s, t) if s < t else (t, s) for s, t in labeling.orient)
    if labeling.n != g.n or underlying != g.edges:
        raise ForeignLabelingError("labeling does not belong to this graph")


def classify_vertices(g: Graph, labeling: EdgeLabeling) -> tuple[VertexClass, ...]:
    """Class of every vertex under the labeling, indexed by vertex id."""
    check_belongs(g, labeling)
    has_out = [False] * g.n
    has_in = [False] * g.n
    for s, t in labeling.orient:
        has_out[s] = True
        has_in[t] = True
    table = {
        (True, True): VertexClass.MIXED,
        (True, False): VertexClass.AB,
        (False, True): VertexClass.BA,
        (False, False): VertexClass.ISOLATED,
    }
    return tuple(table[(has_out[v], has_in[v])] for v in range(g.n))


def vertex_class(g: Graph, labeling: EdgeLabeling, v: int) -> VertexClass:
    if not 0 <= v < g.n:
        raise IndexError(f"vertex {v} out of range 0..{g.n - 1}")
    return classify_vertices(g, labeling)[v]


@dataclass(frozen=True)
class PairViolation:
    edge: Edge
    class_u: VertexClass
    class_v: VertexClass
    rule: str

    def to_json_obj(self) -> dict:
        return {
            "edge": list(self.edge),
            "class_u": self.class_u.value,
            "class_v": self.class_v.value,
            "rule": self.rule,
        }


def verify_uniform(g: Graph, labeling: EdgeLabeling) -> list[PairViolation]:
    """All edges violating uniformity; empty list means the labeling is uniform.

    An edge violates if either endpoint is MIXED, or (unreachable for
    orientations, kept for completeness) both endpoints share a pure class.
    """
    classes = classify_vertices(g, labeling)
    violations = []
    for u, v in g.edges:
        cu, cv = classes[u], classes[v]
        if cu is VertexClass.MIXED or cv is VertexClass.MIXED:
            violations.append(PairViolation((u, v), cu, cv, RULE_MIXED_ENDPOINT))
        elif cu is cv:
            violations.append(PairViolation((u, v), cu, cv, RULE_SAME_CLASS))
    return violations


def verify_one_two_uniform(g: Graph, labeling: EdgeLabeling) -> list[PairViolation]:
    """All edges violating one-two uniformity; empty list means it holds.

    The only disallowed unordered class pairs are {AB, AB}, {BA, BA} and
    {MIXED, MIXED}: endpoint classes must simply differ.
    """
    classes = classify_vertices(g, labeling)
    return [
        PairViolation((u, v), classes[u], classes[v], RULE_SAME_CLASS)
        for u, v in g.edges
        if classes[u] is classes[v]
    ]


def labeling_from_bipartition(g: Graph, coloring: Coloring) -> EdgeLabeling:
    """Orient every edge away from its color-1 endpoint; result is uniform."""
    validate_coloring(g, coloring, max_color=2)
    colors = coloring.colors
    pairs = [(u, v) if colors[u] == 1 else (v, u) for u, v in g.edges]
    return EdgeLabeling(g.n, tuple(pairs))


def bipartition_from_labeling(g: Graph, labeling: EdgeLabeling) -> Coloring:
    """Read the bipartition off a uniform labeling: AB -> 1, BA -> 2, isolated -> 1."""
    if verify_uniform(g, labeling):
        raise NotUniformError("labeling is not uniform")
    classes = classify_vertices(g, labeling)
    return Coloring(tuple(2 if c is VertexClass.BA else 1 for c in classes))


def labeling_from_three_coloring(g: Graph, coloring: Coloring) -> EdgeLabeling:
    """Orient edges from a proper coloring over {1, 2, 3}; result is one-two uniform.

    Edges touching color 1 leave the color-1 endpoint; the remaining edges
    (between colors 2 and 3) leave the color-3 endpoint, so color-2 vertices
    read ba on every incident edge.
    """
    validate_coloring(g, coloring, max_color=3)
    colors = coloring.colors
    pairs = []
    for u, v in g.edges:
        cu, cv = colors[u], colors[v]
        if cu == 1 or (cu == 3 and cv == 2):
            pairs.append((u, v))
        else:
            pairs.append((v, u))
    return EdgeLabeling(g.n, tuple(pairs))


def three_coloring_from_labeling(g: Graph, labeling: EdgeLabeling) -> Coloring:
    """Read classes as colors: AB -> 1, BA -> 2, MIXED -> 3, isolated -> 1."""
    if verify_one_two_uniform(g, labeling):
        raise NotOneTwoUniformError("labeling is not one-two uniform")
    mapping = {
        VertexClass.AB: 1,
        VertexClass.BA: 2,
        VertexClass.MIXED: 3,
        VertexClass.ISOLATED: 1,
    }
    return Coloring(tuple(mapping[c] for c in classify_vertices(g, labeling)))


def parse_labeling(text: str, g: Graph) -> EdgeLabeling:
    """Parse the JSON labeling document {"orient": [[source, target], ...]}."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphFormatError(f"invalid JSON: {exc}") from None
    return labeling_from_json_obj(obj, g)


def labeling_from_json_obj(obj: object, g: Graph) -> EdgeLabeling:
    if not isinstance(obj, dict) or not isinstance(obj.get("orient"), list):
        raise GraphFormatError('labeling JSON must be {"orient": [[source, target], ...]}')
    pairs = []
    for item in obj["orient"]:
        if (not isinstance(item, list) or len(item) != 2
                or not all(isinstance(x, int) and not isinstance(x, bool) for x in item)):
            raise GraphFormatError(f"bad orient entry {item!r}")
        pairs.append((item[0], item[1]))
    return EdgeLabeling.build(g, pairs)
