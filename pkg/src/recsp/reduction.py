"""Reduction-based solvers for layered and general acyclic instances.

Both solvers compile the two-stage problem into one budget-constrained
shortest path problem over the original node ids, with the recovery
budget as the time budget:

* a "direct" arc keeps one original arc in both stages: cost is the
  cheapest combined two-stage cost among parallels, time 0;
* a "pair" arc replaces a whole stretch: its two stages follow separate
  shortest paths between the same endpoints, and its time pays for the
  arcs the recovery path uses that the first-stage path does not.

Expanding the constrained path's payloads yields the two stage paths.
"""
from __future__ import annotations

from .csp import CspArc, solve_csp
from .errors import InfeasibleError
from .graph import (
    INF,
    Instance,
    compute_layering,
    dag_shortest_paths,
    divergence_count,
    hop_bounded_table,
    reconstruct_path,
)
from .solution import Solution, build_solution


def _direct_arcs(graph, keep=None) -> list[CspArc]:
    """One zero-time arc per (tail, head) pair: cheapest parallel, both stages."""
    best: dict[tuple[int, int], int] = {}
    for arc in graph.arcs:
        if keep is not None and (arc.tail not in keep or arc.head not in keep):
            continue
        key = (arc.tail, arc.head)
        cur = best.get(key)
        if cur is None or arc.combined_cost < graph.arcs[cur].combined_cost:
            best[key] = arc.id
    out = []
    for (i, j) in sorted(best):
        a = best[(i, j)]
        out.append(CspArc(i, j, graph.arcs[a].combined_cost, 0, ("direct", a)))
    return out


def build_layered_reduction(instance: Instance) -> list[CspArc]:
    """Constrained-problem arcs for a layered instance.

    Raises NotLayeredError (via the layering pass) when the graph, pruned
    to the nodes on source-sink paths, is not layered.  Pair arcs join
    every node pair whose layers differ by at most the budget; their time
    is the recovery path's actual divergence from the first-stage path.
    """
    graph = instance.graph
    k = instance.k
    layer = compute_layering(instance)
    arcs = _direct_arcs(graph, keep=layer)
    for i in sorted(layer):
        dist_first, par_first = dag_shortest_paths(graph, "first", i)
        dist_upper, par_upper = dag_shortest_paths(graph, "upper", i)
        for j in sorted(layer):
            gap = layer[j] - layer[i]
            if not (1 <= gap <= k) or dist_first[j] is INF:
                continue
            x = reconstruct_path(graph, par_first, i, j)
            y = reconstruct_path(graph, par_upper, i, j)
            arcs.append(
                CspArc(
                    i,
                    j,
                    dist_first[j] + dist_upper[j],
                    divergence_count(y, x),
                    ("pair", x, y),
                )
            )
    return arcs


def build_dag_reduction(instance: Instance) -> list[CspArc]:
    """Constrained-problem arcs for an arbitrary acyclic instance.

    For every ordered pair (i, j) whose shortest hop count is within the
    budget, one pair arc per allowance l from that hop count up to the
    budget: the recovery path is the cheapest using at most l arcs and
    the arc's time is l itself.  Budgeting l (rather than the realized
    divergence) is still exact: the all-pairs sweep includes every split
    of an optimal pair into shared stretches and disjoint stretches.
    """
    graph = instance.graph
    k = instance.k
    arcs = _direct_arcs(graph)
    for i in range(graph.node_count):
        dist_first, par_first = dag_shortest_paths(graph, "first", i)
        table = hop_bounded_table(graph, "upper", i, k)
        for j in range(graph.node_count):
            if j == i:
                continue
            lo = table.min_hops(j)
            if lo is None or lo > k:
                continue
            x = reconstruct_path(graph, par_first, i, j)
            base = dist_first[j]
            for l in range(lo, k + 1):
                y = table.path_to(j, l)
                arcs.append(
                    CspArc(i, j, base + table.dist[j][l], l, ("pair", x, y))
                )
    return arcs


def _expand(instance: Instance, result) -> Solution:
    x: list[int] = []
    y: list[int] = []
    for arc in result.arcs:
        tag = arc.ref[0]
        if tag == "direct":
            x.append(arc.ref[1])
            y.append(arc.ref[1])
        else:
            x.extend(arc.ref[1])
            y.extend(arc.ref[2])
    return build_solution(instance, tuple(x), tuple(y))


def _require_positive_budget(instance: Instance):
    if instance.k < 1:
        raise ValueError("k must be >= 1 here; solve() handles k = 0 directly")


def solve_layered(instance: Instance) -> Solution:
    """Exact solver for layered instances (every arc advances one layer)."""
    _require_positive_budget(instance)
    arcs = build_layered_reduction(instance)
    result = solve_csp(
        instance.graph.node_count, arcs, instance.source, instance.sink, instance.k
    )
    if result is None:
        raise InfeasibleError("no stage pair within the recovery budget")
    return _expand(instance, result)


def solve_dag(instance: Instance) -> Solution:
    """Exact solver for arbitrary acyclic instances."""
    _require_positive_budget(instance)
    arcs = build_dag_reduction(instance)
    result = solve_csp(
        instance.graph.node_count, arcs, instance.source, instance.sink, instance.k
    )
    if result is None:
        raise InfeasibleError("no stage pair within the recovery budget")
    return _expand(instance, result)
