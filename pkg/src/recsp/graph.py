"""Multidigraph core: two-stage arc costs and the shared DAG algorithms.

Costs are plain Python integers; the unreachable/impossible sentinel is
``INF`` (``float("inf")``).  Integer arithmetic never overflows in Python,
so finite values stay exact, and ``x + INF == INF`` gives the saturating
addition the dynamic programs rely on.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass, field

from .errors import CyclicGraphError, NotLayeredError, ValidationError

INF = float("inf")

#: valid cost selectors for the shortest-path routines
COST_SELECTORS = ("first", "upper", "combined")


@dataclass(frozen=True)
class Arc:
    """A directed arc with a first-stage cost and an uncertain second-stage cost.

    The second-stage cost lies in [nominal, nominal + deviation]; its upper
    extreme is what the recoverable objective charges.
    """

    id: int
    tail: int
    head: int
    first_cost: int
    nominal: int
    deviation: int

    def __post_init__(self):
        if self.deviation < 0:
            raise ValidationError(f"arc {self.id}: deviation {self.deviation} < 0")
        if self.tail == self.head:
            raise ValidationError(f"arc {self.id}: self-loop at node {self.tail}")

    @property
    def upper_cost(self) -> int:
        return self.nominal + self.deviation

    @property
    def combined_cost(self) -> int:
        return self.first_cost + self.nominal + self.deviation

    def cost(self, selector: str) -> int:
        if selector == "first":
            return self.first_cost
        if selector == "upper":
            return self.upper_cost
        if selector == "combined":
            return self.combined_cost
        raise ValueError(f"unknown cost selector {selector!r}")


@dataclass(frozen=True)
class MultiDigraph:
    """Directed multigraph over nodes 0..node_count-1.

    Parallel arcs are permitted and stay distinct by arc id; the id of an
    arc is its index in ``arcs``.
    """

    node_count: int
    arcs: tuple[Arc, ...]
    _out: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)
    _in: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.node_count < 1:
            raise ValidationError("node_count must be >= 1")
        out: list[list[int]] = [[] for _ in range(self.node_count)]
        inc: list[list[int]] = [[] for _ in range(self.node_count)]
        for i, arc in enumerate(self.arcs):
            if arc.id != i:
                raise ValidationError(f"arc id {arc.id} does not match position {i}")
            if not (0 <= arc.tail < self.node_count and 0 <= arc.head < self.node_count):
                raise ValidationError(f"arc {i}: endpoint out of range")
            out[arc.tail].append(i)
            inc[arc.head].append(i)
        object.__setattr__(self, "_out", tuple(tuple(a) for a in out))
        object.__setattr__(self, "_in", tuple(tuple(a) for a in inc))

    @classmethod
    def from_rows(cls, node_count: int, rows) -> "MultiDigraph":
        """Build from (tail, head, first_cost, nominal, deviation) rows; ids follow row order."""
        arcs = tuple(
            Arc(i, tail, head, c, chat, delta)
            for i, (tail, head, c, chat, delta) in enumerate(rows)
        )
        return cls(node_count, arcs)

    @property
    def arc_count(self) -> int:
        return len(self.arcs)

    def out_arcs(self, v: int) -> tuple[int, ...]:
        return self._out[v]

    def in_arcs(self, v: int) -> tuple[int, ...]:
        return self._in[v]


@dataclass(frozen=True)
class Instance:
    """A recoverable shortest path instance: graph, terminals, recovery budget k."""

    graph: MultiDigraph
    source: int
    sink: int
    k: int

    def __post_init__(self):
        n = self.graph.node_count
        if not (0 <= self.source < n):
            raise ValidationError(f"source {self.source} out of range")
        if not (0 <= self.sink < n):
            raise ValidationError(f"sink {self.sink} out of range")
        if self.source == self.sink:
            raise ValidationError("source and sink must differ")
        if not (0 <= self.k < n):
            raise ValidationError(f"k={self.k} outside 0 <= k < {n}")
        topological_order(self.graph)
        if not reachable_from(self.graph, self.source)[self.sink]:
            raise ValidationError("sink is not reachable from source")


def topological_order(graph: MultiDigraph) -> list[int]:
    """Topological node order, smallest node id first among ready nodes.

    Raises CyclicGraphError if the graph has a directed cycle.
    """
    indeg = [0] * graph.node_count
    for arc in graph.arcs:
        indeg[arc.head] += 1
    ready = [v for v in range(graph.node_count) if indeg[v] == 0]
    heapq.heapify(ready)
    order = []
    while ready:
        v = heapq.heappop(ready)
        order.append(v)
        for a in graph.out_arcs(v):
            h = graph.arcs[a].head
            indeg[h] -= 1
            if indeg[h] == 0:
                heapq.heappush(ready, h)
    if len(order) != graph.node_count:
        raise CyclicGraphError("graph contains a directed cycle")
    return order


def reachable_from(graph: MultiDigraph, source: int) -> list[bool]:
    """Forward reachability mask from ``source``."""
    seen = [False] * graph.node_count
    seen[source] = True
    stack = [source]
    while stack:
        v = stack.pop()
        for a in graph.out_arcs(v):
            h = graph.arcs[a].head
            if not seen[h]:
                seen[h] = True
                stack.append(h)
    return seen


def reaches(graph: MultiDigraph, sink: int) -> list[bool]:
    """Backward reachability mask: nodes from which ``sink`` is reachable."""
    seen = [False] * graph.node_count
    seen[sink] = True
    stack = [sink]
    while stack:
        v = stack.pop()
        for a in graph.in_arcs(v):
            t = graph.arcs[a].tail
            if not seen[t]:
                seen[t] = True
                stack.append(t)
    return seen


def on_st_path_mask(graph: MultiDigraph, source: int, sink: int) -> list[bool]:
    """Nodes lying on at least one source-sink path.

    In a DAG these are exactly the nodes reachable from the source that also
    reach the sink, and every arc joining two such nodes lies on some
    source-sink path as well.
    """
    fwd = reachable_from(graph, source)
    bwd = reaches(graph, sink)
    return [f and b for f, b in zip(fwd, bwd)]


def compute_layering(instance: Instance) -> dict[int, int]:
    """Layer assignment for the nodes on source-sink paths.

    Returns a map node -> layer with layer(source) = 1 and every surviving
    arc going from layer h to h+1.  Nodes off all source-sink paths are
    pruned first; they cannot carry any feasible solution.  Raises
    NotLayeredError when no such assignment exists on the pruned graph.
    """
    graph = instance.graph
    on = on_st_path_mask(graph, instance.source, instance.sink)
    layer: dict[int, int] = {instance.source: 1}
    for v in topological_order(graph):
        if not on[v]:
            continue
        lv = layer[v]  # set before v is reached: v lies on a path from source
        for a in graph.out_arcs(v):
            h = graph.arcs[a].head
            if not on[h]:
                continue
            if h in layer:
                if layer[h] != lv + 1:
                    raise NotLayeredError(
                        f"arc {a} spans layers {lv}->{layer[h]}, expected {lv + 1}"
                    )
            else:
                layer[h] = lv + 1
    return layer


def dag_shortest_paths(
    graph: MultiDigraph, selector: str, source: int
) -> tuple[list, list]:
    """Single-source shortest paths on a DAG; negative costs allowed.

    Returns (dist, parent) where dist[v] is the minimum total selected cost
    of a source->v path (INF if unreachable) and parent[v] is the arc id of
    the last arc on one optimal path (None at the source / unreachable).
    Ties are broken by the smallest incoming arc id.
    """
    if selector not in COST_SELECTORS:
        raise ValueError(f"unknown cost selector {selector!r}")
    cost = [arc.cost(selector) for arc in graph.arcs]
    dist: list = [INF] * graph.node_count
    parent: list = [None] * graph.node_count
    dist[source] = 0
    for v in topological_order(graph):
        best = dist[v]
        for a in graph.in_arcs(v):
            d = dist[graph.arcs[a].tail]
            if d is not INF and d + cost[a] < best:
                best = d + cost[a]
                parent[v] = a
        dist[v] = best
    return dist, parent


def reconstruct_path(graph: MultiDigraph, parent: list, source: int, target: int):
    """Arc-id path source->target from a parent-arc array, or None if unreachable."""
    if target != source and parent[target] is None:
        return None
    arcs = []
    v = target
    while v != source:
        a = parent[v]
        arcs.append(a)
        v = graph.arcs[a].tail
    arcs.reverse()
    return tuple(arcs)


class HopBoundedTable:
    """Hop-indexed shortest path table from one source.

    ``dist[v][l]`` is the minimum selected cost of a source->v path using at
    most l arcs (INF if none); nonincreasing in l.  Backpointers allow exact
    reconstruction; on cost ties a path with fewer arcs is preferred, then
    smaller arc ids.
    """

    _CARRY = -1
    _NONE = -2

    def __init__(self, graph: MultiDigraph, selector: str, source: int, max_hops: int):
        if selector not in COST_SELECTORS:
            raise ValueError(f"unknown cost selector {selector!r}")
        if max_hops < 0:
            raise ValueError("max_hops must be >= 0")
        self.graph = graph
        self.source = source
        self.max_hops = max_hops
        cost = [arc.cost(selector) for arc in graph.arcs]
        width = max_hops + 1
        dist = [[INF] * width for _ in range(graph.node_count)]
        back = [[self._NONE] * width for _ in range(graph.node_count)]
        dist[source][0] = 0
        for v in topological_order(graph):
            dv = dist[v]
            bv = back[v]
            for l in range(1, width):
                # carry first: reuse the best path with fewer arcs
                best = dv[l - 1]
                bp = self._CARRY if best is not INF else self._NONE
                for a in graph.in_arcs(v):
                    d = dist[graph.arcs[a].tail][l - 1]
                    if d is not INF and d + cost[a] < best:
                        best = d + cost[a]
                        bp = a
                dv[l] = best
                bv[l] = bp
        self.dist = dist
        self._back = back

    def min_hops(self, v: int):
        """Smallest l with dist[v][l] finite, or None if v is unreachable."""
        for l, d in enumerate(self.dist[v]):
            if d is not INF:
                return l
        return None

    def path_to(self, v: int, l: int):
        """One optimal path realizing dist[v][l], or None if it is INF."""
        if self.dist[v][l] is INF:
            return None
        arcs = []
        while True:
            bp = self._back[v][l]
            if bp == self._NONE:
                break
            if bp == self._CARRY:
                l -= 1
                continue
            arcs.append(bp)
            v = self.graph.arcs[bp].tail
            l -= 1
        arcs.reverse()
        return tuple(arcs)


def hop_bounded_table(
    graph: MultiDigraph, selector: str, source: int, max_hops: int
) -> HopBoundedTable:
    return HopBoundedTable(graph, selector, source, max_hops)


def divergence_count(y_arcs, x_arcs) -> int:
    """Number of arc identities used by Y but not by X."""
    return len(set(y_arcs) - set(x_arcs))


def path_error(graph: MultiDigraph, arc_ids, source: int, sink: int):
    """Why ``arc_ids`` is not a valid simple source->sink path, or None if it is."""
    if not arc_ids:
        return "path is empty"
    m = graph.arc_count
    for a in arc_ids:
        if not (0 <= a < m):
            return f"arc id {a} out of range"
    first = graph.arcs[arc_ids[0]]
    if first.tail != source:
        return f"path starts at node {first.tail}, not at source {source}"
    prev_head = first.tail
    visited = set()
    for a in arc_ids:
        arc = graph.arcs[a]
        if arc.tail != prev_head:
            return f"arc {a} starts at {arc.tail}, previous arc ended at {prev_head}"
        if arc.tail in visited:
            return f"node {arc.tail} repeated"
        visited.add(arc.tail)
        prev_head = arc.head
    if prev_head in visited:
        return f"node {prev_head} repeated"
    if prev_head != sink:
        return f"path ends at node {prev_head}, not at sink {sink}"
    return None


def path_cost(graph: MultiDigraph, arc_ids, selector: str) -> int:
    return sum(graph.arcs[a].cost(selector) for a in arc_ids)
