"""Directional adjacency matrices over entries {-1, 0, 1}.

An antisymmetric matrix of this kind encodes exactly an edge orientation:
entry (i, j) is +1 when the edge reads ab from i to j, -1 the other way,
and 0 off the support. Row classes summarize the signs present in a row
and correspond one-to-one with vertex classes of the induced labeling
(+1 = AB, -1 = BA, mixed signs = MIXED, all-zero row = isolated vertex).

validate_matrix classifies raw integer matrices; only the antisymmetric
kind participates in the uniformity predicates and conversions, matching
the certificates' definitions. Symmetric and mixed-kind matrices are
detected and rejected with distinct outcomes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from .coloring import OddCycleWitness, two_color
from .errors import InvalidMatrixError, NotAntisymmetricError
from .graph import Edge, Graph
from .labeling import EdgeLabeling, check_belongs

RULE_SAME_ROW_CLASS = "same-class"


class RowClass(Enum):
    PLUS = "+1"
    MINUS = "-1"
    MIXED = "mixed"
    EMPTY = "empty"


class MatrixKind(Enum):
    ANTISYMMETRIC = "antisymmetric"
    SYMMETRIC = "symmetric"
    MIXED_KIND = "mixed-kind"
    INVALID = "invalid"


@dataclass(frozen=True)
class DAMatrix:
    rows: tuple[tuple[int, ...], ...]

    @property
    def order(self) -> int:
        return len(self.rows)

    @staticmethod
    def build(raw: Sequence[Sequence[int]]) -> "DAMatrix":
        """Validate a raw matrix and admit it only if antisymmetric."""
        kind = validate_matrix(raw)
        if kind is MatrixKind.INVALID:
            raise InvalidMatrixError("matrix violates structural requirements")
        if kind is not MatrixKind.ANTISYMMETRIC:
            raise NotAntisymmetricError(f"matrix kind is {kind.value}, antisymmetric required")
        return DAMatrix(tuple(tuple(row) for row in raw))

    def to_json_obj(self) -> dict:
        return {"order": self.order, "rows": [list(row) for row in self.rows]}

    def to_text(self) -> str:
        return "".join(" ".join(str(x) for x in row) + "\n" for row in self.rows)


@dataclass(frozen=True)
class RowPairViolation:
    edge: Edge
    class_i: RowClass
    class_j: RowClass
    rule: str

    def to_json_obj(self) -> dict:
        return {
            "edge": list(self.edge),
            "class_i": self.class_i.value,
            "class_j": self.class_j.value,
            "rule": self.rule,
        }


@dataclass(frozen=True)
class PolarityAssignment:
    da: tuple[int, ...]

    def to_json_obj(self) -> dict:
        return {"da": {str(v): x for v, x in enumerate(self.da)}}


def validate_matrix(raw: Sequence[Sequence[int]]) -> MatrixKind:
    """Classify a raw integer matrix; INVALID is a result, never an exception.

    Invalid means: not square, an entry outside {-1, 0, 1}, a nonzero
    diagonal entry, or asymmetric support (exactly one of a_ij, a_ji zero).
    Otherwise each support pair is antisymmetric (opposite signs) or
    symmetric (equal signs), and the matrix is classified by which kinds
    occur; a matrix with empty support counts as antisymmetric.
    """
    p = len(raw)
    for row in raw:
        if len(row) != p:
            return MatrixKind.INVALID
        for x in row:
            if isinstance(x, bool) or not isinstance(x, int) or x not in (-1, 0, 1):
                return MatrixKind.INVALID
    has_anti = has_sym = False
    for i in range(p):
        if raw[i][i] != 0:
            return MatrixKind.INVALID
        for j in range(i + 1, p):
            a, b = raw[i][j], raw[j][i]
            if (a == 0) != (b == 0):
                return MatrixKind.INVALID
            if a == 0:
                continue
            if a == -b:
                has_anti = True
            else:
                has_sym = True
    if has_sym:
        return MatrixKind.MIXED_KIND if has_anti else MatrixKind.SYMMETRIC
    return MatrixKind.ANTISYMMETRIC


def matrix_from_labeling(g: Graph, labeling: EdgeLabeling) -> DAMatrix:
    """Matrix of an orientation: +1 from source to target, -1 back, 0 off support."""
    check_belongs(g, labeling)
    rows = [[0] * g.n for _ in range(g.n)]
    for s, t in labeling.orient:
        rows[s][t] = 1
        rows[t][s] = -1
    return DAMatrix(tuple(tuple(row) for row in rows))


def labeling_from_matrix(matrix: DAMatrix) -> tuple[Graph, EdgeLabeling]:
    """Exact inverse of matrix_from_labeling."""
    p = matrix.order
    edges = []
    pairs = []
    for i in range(p):
        for j in range(i + 1, p):
            if matrix.rows[i][j] != 0:
                edges.append((i, j))
                pairs.append((i, j) if matrix.rows[i][j] == 1 else (j, i))
    g = Graph.build(p, edges)
    return g, EdgeLabeling(p, tuple(pairs))


def row_class(matrix: DAMatrix, i: int) -> RowClass:
    if not 0 <= i < matrix.order:
        raise IndexError(f"row {i} out of range 0..{matrix.order - 1}")
    row = matrix.rows[i]
    has_plus = 1 in row
    has_minus = -1 in row
    if has_plus and has_minus:
        return RowClass.MIXED
    if has_plus:
        return RowClass.PLUS
    if has_minus:
        return RowClass.MINUS
    return RowClass.EMPTY


def row_classes(matrix: DAMatrix) -> tuple[RowClass, ...]:
    return tuple(row_class(matrix, i) for i in range(matrix.order))


def is_uniform_matrix(matrix: DAMatrix) -> list[int]:
    """Indices of mixed-sign rows; empty means the matrix is uniform.

    For an antisymmetric matrix, no mixed rows already forces adjacent rows
    to have opposite pure classes, so class clashes need no separate check.
    """
    return [i for i, c in enumerate(row_classes(matrix)) if c is RowClass.MIXED]


def is_one_two_uniform_matrix(matrix: DAMatrix) -> list[RowPairViolation]:
    """Support pairs whose row classes coincide; empty means one-two uniform."""
    classes = row_classes(matrix)
    violations = []
    for i in range(matrix.order):
        for j in range(i + 1, matrix.order):
            if matrix.rows[i][j] != 0 and classes[i] is classes[j]:
                violations.append(RowPairViolation((i, j), classes[i], classes[j], RULE_SAME_ROW_CLASS))
    return violations


def ud_adjacency(g: Graph) -> PolarityAssignment | OddCycleWitness:
    """Per-vertex polarity with adjacent vertices opposite, or an odd cycle.

    Such an assignment exists iff the graph is 2-colorable, so this rides on
    two_color: color 1 becomes +1, color 2 becomes -1.
    """
    result = two_color(g)
    if isinstance(result, OddCycleWitness):
        return result
    return PolarityAssignment(tuple(1 if c == 1 else -1 for c in result.colors))


def parse_matrix_text(text: str) -> list[list[int]]:
    """Parse the plain text matrix format: one row of entries per line."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        try:
            rows.append([int(tok) for tok in line.split()])
        except ValueError:
            raise InvalidMatrixError(f"line {lineno}: entries must be integers") from None
    return rows


def parse_matrix_json(text: str) -> list[list[int]]:
    """Parse the JSON matrix document {"order": p, "rows": [[...], ...]}."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidMatrixError(f"invalid JSON: {exc}") from None
    if (not isinstance(obj, dict) or not isinstance(obj.get("rows"), list)
            or not all(isinstance(row, list) for row in obj["rows"])):
        raise InvalidMatrixError('matrix JSON must be {"order": p, "rows": [[...], ...]}')
    if obj.get("order") != len(obj["rows"]):
        raise InvalidMatrixError("declared order does not match row count")
    return [list(row) for row in obj["rows"]]
