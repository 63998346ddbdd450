"""Budget-constrained shortest paths on DAGs.

Each arc carries an additive cost and a nonnegative integer time; a path
is feasible when its total time stays within the budget.  This is the
target problem both reduction-based solvers compile into.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass

from .errors import CyclicGraphError
from .graph import INF


@dataclass(frozen=True)
class CspArc:
    """Arc of the constrained problem.

    ``ref`` is an opaque payload the caller can use to map a constrained
    path back to whatever the arc stands for; it never influences the
    search.
    """

    tail: int
    head: int
    cost: int
    time: int
    ref: object = None

    def __post_init__(self):
        if self.time < 0:
            raise ValueError(f"arc time {self.time} < 0")


@dataclass(frozen=True)
class CspResult:
    cost: int
    arcs: tuple[CspArc, ...]
    time_used: int


_CARRY = -1
_NONE = -2


def solve_csp(node_count, arcs, source, sink, budget) -> CspResult | None:
    """Minimum-cost source->sink path whose total time is at most ``budget``.

    Returns None when no feasible path exists.  Among equal-cost optima the
    result uses the least time, then prefers arcs earlier in ``arcs``.
    Costs may be negative; the arc set must be acyclic.
    """
    if budget < 0:
        raise ValueError("budget must be >= 0")

    in_arcs: list[list[int]] = [[] for _ in range(node_count)]
    out_arcs: list[list[int]] = [[] for _ in range(node_count)]
    indeg = [0] * node_count
    for i, arc in enumerate(arcs):
        in_arcs[arc.head].append(i)
        out_arcs[arc.tail].append(i)
        indeg[arc.head] += 1
    ready = [v for v in range(node_count) if indeg[v] == 0]
    heapq.heapify(ready)
    order = []
    while ready:
        v = heapq.heappop(ready)
        order.append(v)
        for i in out_arcs[v]:
            h = arcs[i].head
            indeg[h] -= 1
            if indeg[h] == 0:
                heapq.heappush(ready, h)
    if len(order) != node_count:
        raise CyclicGraphError("constrained problem graph contains a cycle")

    width = budget + 1
    dist = [[INF] * width for _ in range(node_count)]
    back = [[_NONE] * width for _ in range(node_count)]
    dist[source][0] = 0
    for v in order:
        dv = dist[v]
        bv = back[v]
        for t in range(width):
            # carrying the t-1 entry first makes ties resolve to less time
            if t > 0 and dv[t - 1] < dv[t]:
                dv[t] = dv[t - 1]
                bv[t] = _CARRY
            best = dv[t]
            bp = bv[t]
            for i in in_arcs[v]:
                arc = arcs[i]
                if arc.time > t:
                    continue
                d = dist[arc.tail][t - arc.time]
                if d is not INF and d + arc.cost < best:
                    best = d + arc.cost
                    bp = i
            dv[t] = best
            bv[t] = bp

    if dist[sink][budget] is INF:
        return None
    path = []
    v, t = sink, budget
    while True:
        bp = back[v][t]
        if bp == _NONE:
            break
        if bp == _CARRY:
            t -= 1
            continue
        arc = arcs[bp]
        path.append(arc)
        v = arc.tail
        t -= arc.time
    path.reverse()
    return CspResult(
        cost=dist[sink][budget],
        arcs=tuple(path),
        time_used=sum(a.time for a in path),
    )
