"""Text formats for graphs: DIMACS .col, plain edge lists, and JSON.

DIMACS and edge lists are 1-based on the wire; JSON is 0-based. Parsing
normalizes everything to the internal 0-based ids, and serializing any
graph round-trips exactly through the matching parser.
"""

from __future__ import annotations

import json

from .errors import GraphFormatError, VertexRangeError
from .graph import Graph

FORMATS = ("dimacs", "edgelist", "json")

_EXTENSIONS = {".col": "dimacs", ".edges": "edgelist", ".json": "json"}


def format_from_path(path: str) -> str:
    """Infer a graph format from a file extension (.col, .edges, .json)."""
    for ext, fmt in _EXTENSIONS.items():
        if path.endswith(ext):
            return fmt
    raise GraphFormatError(f"cannot infer format from {path!r}; pass an explicit format")


def parse_graph(text: str, fmt: str) -> Graph:
    if fmt == "dimacs":
        return _parse_dimacs(text)
    if fmt == "edgelist":
        return _parse_edgelist(text)
    if fmt == "json":
        return _parse_json(text)
    raise GraphFormatError(f"unknown graph format {fmt!r}")


def serialize_graph(g: Graph, fmt: str) -> str:
    if fmt == "dimacs":
        lines = [f"p edge {g.n} {g.m}"]
        lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges)
        return "\n".join(lines) + "\n"
    if fmt == "edgelist":
        lines = []
        implied = g.edges[-1][1] + 1 if g.edges else 0
        if implied != g.n:
            lines.append(f"n={g.n}")
        lines.extend(f"{u + 1} {v + 1}" for u, v in g.edges)
        return "\n".join(lines) + "\n" if lines else ""
    if fmt == "json":
        return json.dumps({"n": g.n, "edges": [list(e) for e in g.edges]}, sort_keys=True) + "\n"
    raise GraphFormatError(f"unknown graph format {fmt!r}")


def _int_token(token: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise GraphFormatError(f"line {lineno}: expected integer, got {token!r}") from None


def _parse_dimacs(text: str) -> Graph:
    n = None
    declared_m = 0
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split()
        if not tokens or tokens[0] == "c":
            continue
        if tokens[0] == "p":
            if n is not None:
                raise GraphFormatError(f"line {lineno}: duplicate problem line")
            if len(tokens) != 4 or tokens[1] != "edge":
                raise GraphFormatError(f"line {lineno}: expected 'p edge <n> <m>'")
            n = _int_token(tokens[2], lineno)
            declared_m = _int_token(tokens[3], lineno)
            if n < 0 or declared_m < 0:
                raise GraphFormatError(f"line {lineno}: negative size in problem line")
        elif tokens[0] == "e":
            if n is None:
                raise GraphFormatError(f"line {lineno}: edge before problem line")
            if len(tokens) != 3:
                raise GraphFormatError(f"line {lineno}: expected 'e <u> <v>'")
            u = _int_token(tokens[1], lineno)
            v = _int_token(tokens[2], lineno)
            if not (1 <= u <= n and 1 <= v <= n):
                raise VertexRangeError(f"line {lineno}: endpoint outside 1..{n}")
            edges.append((u - 1, v - 1))
        else:
            raise GraphFormatError(f"line {lineno}: unknown record type {tokens[0]!r}")
    if n is None:
        raise GraphFormatError("missing problem line")
    if len(edges) != declared_m:
        raise GraphFormatError(f"problem line declares {declared_m} edges, found {len(edges)}")
    return Graph.build(n, edges)


def _parse_edgelist(text: str) -> Graph:
    declared_n = None
    edges: list[tuple[int, int]] = []
    first_line = True
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if first_line and line.startswith("n="):
            declared_n = _int_token(line[2:], lineno)
            if declared_n < 0:
                raise GraphFormatError(f"line {lineno}: negative vertex count")
            first_line = False
            continue
        first_line = False
        tokens = line.split()
        if len(tokens) != 2:
            raise GraphFormatError(f"line {lineno}: expected 'u v'")
        u = _int_token(tokens[0], lineno)
        v = _int_token(tokens[1], lineno)
        if u < 1 or v < 1:
            raise VertexRangeError(f"line {lineno}: endpoints are 1-based, got ({u}, {v})")
        edges.append((u - 1, v - 1))
    if declared_n is not None:
        n = declared_n
    else:
        n = 1 + max((max(e) for e in edges), default=-1)
    return Graph.build(n, edges)


def _parse_json(text: str) -> Graph:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphFormatError(f"invalid JSON: {exc}") from None
    if not isinstance(obj, dict) or not isinstance(obj.get("n"), int) or isinstance(obj.get("n"), bool):
        raise GraphFormatError('graph JSON must be {"n": int, "edges": [[u, v], ...]}')
    raw_edges = obj.get("edges", [])
    if not isinstance(raw_edges, list):
        raise GraphFormatError('"edges" must be a list of [u, v] pairs')
    edges = []
    for item in raw_edges:
        if (not isinstance(item, list) or len(item) != 2
                or not all(isinstance(x, int) and not isinstance(x, bool) for x in item)):
            raise GraphFormatError(f"bad edge entry {item!r}")
        edges.append((item[0], item[1]))
    return Graph.build(obj["n"], edges)
