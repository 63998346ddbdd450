"""Plain-text instance and solution formats.

Instance files:

    # full-line comments and blank lines are ignored
    p recsp <nodes> <arcs> <source> <sink> <k>
    a <tail> <head> <first> <nominal> <deviation>

with exactly one ``a`` line per arc; arc ids count 0-based in line
order.  Solution files:

    s recsp <total> <first> <second> <divergence>
    x <arc ids of the first-stage path, in order>
    y <arc ids of the recovery path, in order>

Every number must be a signed 64-bit integer; anything structurally
wrong raises ParseError with a 1-based line and column.  Semantic
problems (out-of-range endpoints, cycles, unreachable sink) surface as
the usual validation errors when the instance object is built.
"""
from __future__ import annotations

import re

from .errors import ParseError
from .graph import Instance, MultiDigraph
from .solution import Solution

_INT64_MIN = -(1 << 63)
_INT64_MAX = (1 << 63) - 1
_INT_RE = re.compile(r"[+-]?\d+$")
_TOKEN_RE = re.compile(r"\S+")


def _content_lines(text: str):
    """(line_number, [(token, column), ...]) for each non-comment line."""
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        tokens = [(m.group(), m.start() + 1) for m in _TOKEN_RE.finditer(raw)]
        out.append((lineno, tokens))
    return out


def _int64(token: str, lineno: int, col: int, what: str) -> int:
    if not _INT_RE.match(token):
        raise ParseError(lineno, col, f"{what} must be an integer, got {token!r}")
    value = int(token)
    if not (_INT64_MIN <= value <= _INT64_MAX):
        raise ParseError(lineno, col, f"{what} outside the signed 64-bit range")
    return value


def _fields(line, expected_head: str, count: int, what: str):
    lineno, tokens = line
    if tokens[0][0] != expected_head:
        raise ParseError(
            lineno, tokens[0][1], f"expected {what} line starting with {expected_head!r}"
        )
    if len(tokens) != count:
        raise ParseError(
            lineno, tokens[-1][1], f"{what} line needs {count} fields, got {len(tokens)}"
        )
    return lineno, tokens


def parse_instance(text: str) -> Instance:
    lines = _content_lines(text)
    last_line = text.count("\n") + 1
    if not lines:
        raise ParseError(last_line, 1, "missing problem line")
    lineno, tokens = _fields(lines[0], "p", 7, "problem")
    if tokens[1][0] != "recsp":
        raise ParseError(lineno, tokens[1][1], "problem type must be 'recsp'")
    names = ("node count", "arc count", "source", "sink", "k")
    n, m, source, sink, k = (
        _int64(tok, lineno, col, name)
        for (tok, col), name in zip(tokens[2:], names)
    )
    if m < 0:
        raise ParseError(lineno, tokens[3][1], "arc count must be >= 0")
    arc_lines = lines[1:]
    if len(arc_lines) != m:
        where = arc_lines[m][0] if len(arc_lines) > m else last_line
        raise ParseError(where, 1, f"expected {m} arc lines, found {len(arc_lines)}")
    rows = []
    for line in arc_lines:
        lineno, tokens = _fields(line, "a", 6, "arc")
        names = ("tail", "head", "first-stage cost", "nominal cost", "deviation")
        rows.append(
            tuple(
                _int64(tok, lineno, col, name)
                for (tok, col), name in zip(tokens[1:], names)
            )
        )
    return Instance(MultiDigraph.from_rows(n, rows), source, sink, k)


def serialize_instance(instance: Instance) -> str:
    graph = instance.graph
    lines = [
        f"p recsp {graph.node_count} {graph.arc_count} "
        f"{instance.source} {instance.sink} {instance.k}"
    ]
    for arc in graph.arcs:
        lines.append(
            f"a {arc.tail} {arc.head} {arc.first_cost} {arc.nominal} {arc.deviation}"
        )
    return "\n".join(lines) + "\n"


def parse_solution(text: str) -> Solution:
    lines = _content_lines(text)
    last_line = text.count("\n") + 1
    if len(lines) != 3:
        raise ParseError(last_line, 1, f"expected 3 solution lines, found {len(lines)}")
    lineno, tokens = _fields(lines[0], "s", 6, "summary")
    if tokens[1][0] != "recsp":
        raise ParseError(lineno, tokens[1][1], "solution type must be 'recsp'")
    names = ("total cost", "first-stage cost", "second-stage cost", "divergence")
    total, first, second, divergence = (
        _int64(tok, lineno, col, name)
        for (tok, col), name in zip(tokens[2:], names)
    )

    def arc_ids(line, head):
        lineno, tokens = line
        if tokens[0][0] != head:
            raise ParseError(lineno, tokens[0][1], f"expected {head!r} line")
        return tuple(
            _int64(tok, lineno, col, "arc id") for tok, col in tokens[1:]
        )

    return Solution(
        x_arcs=arc_ids(lines[1], "x"),
        y_arcs=arc_ids(lines[2], "y"),
        first_cost=first,
        second_cost=second,
        total_cost=total,
        divergence=divergence,
    )


def serialize_solution(solution: Solution) -> str:
    def id_line(head, ids):
        return " ".join([head] + [str(a) for a in ids])

    return (
        f"s recsp {solution.total_cost} {solution.first_cost} "
        f"{solution.second_cost} {solution.divergence}\n"
        f"{id_line('x', solution.x_arcs)}\n"
        f"{id_line('y', solution.y_arcs)}\n"
    )
