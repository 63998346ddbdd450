"""Seeded random instance families.

Instances are generated with a self-contained splitmix64 generator so
that a (family, seed, parameters) triple yields the same instance on any
platform, or in any other language implementing the same recurrence:

    state = (state + 0x9E3779B97F4A7C15) mod 2^64
    z = state
    z = (z XOR (z >> 30)) * 0xBF58476D1CE4E5B9 mod 2^64
    z = (z XOR (z >> 27)) * 0x94D049BB133111EB mod 2^64
    output = z XOR (z >> 31)

``randint(lo, hi)`` draws one output and reduces it modulo the range
size.  Cost ranges are fixed: first-stage and nominal costs in [1, 100],
deviations in [0, 100].
"""
from __future__ import annotations

from .errors import ConfigError
from .graph import Instance, MultiDigraph

_MASK = (1 << 64) - 1

FAMILIES = ("layered", "dag", "asp")


class SplitMix64:
    """Tiny deterministic PRNG; see the module docstring for the recurrence."""

    def __init__(self, seed: int):
        self._state = seed & _MASK

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def randint(self, lo: int, hi: int) -> int:
        """Uniform-ish integer in [lo, hi], both ends included."""
        if lo > hi:
            raise ValueError(f"empty range [{lo}, {hi}]")
        return lo + self.next_u64() % (hi - lo + 1)


def _costs(rng: SplitMix64):
    return rng.randint(1, 100), rng.randint(1, 100), rng.randint(0, 100)


def _check_k(k: int, nodes: int):
    if not (0 <= k < nodes):
        raise ConfigError(f"k={k} outside 0 <= k < {nodes}")


def _gen_layered(rng, nodes, arcs, k, layers):
    if nodes < 2:
        raise ConfigError("layered family needs at least 2 nodes")
    if layers is None:
        layers = min(nodes, 4)
    if not (2 <= layers <= nodes):
        raise ConfigError(f"layers={layers} outside 2 <= layers <= {nodes}")
    middle = nodes - 2
    if layers == 2 and middle > 0:
        raise ConfigError("layers=2 leaves no layer for the middle nodes")
    _check_k(k, nodes)

    sizes = [1] + [1] * (layers - 2) + [1]
    for _ in range(middle - (layers - 2)):
        sizes[rng.randint(1, layers - 2)] += 1
    layer_nodes = []
    next_id = 1
    for li, size in enumerate(sizes):
        if li == 0:
            layer_nodes.append([0])
        elif li == layers - 1:
            layer_nodes.append([nodes - 1])
        else:
            layer_nodes.append(list(range(next_id, next_id + size)))
            next_id += size

    rows = []
    for a, b in zip(layer_nodes, layer_nodes[1:]):
        # round-robin wiring gives every node an arc on both sides
        for i in range(max(len(a), len(b))):
            rows.append((a[i % len(a)], b[i % len(b)], *_costs(rng)))
    if arcs < len(rows):
        raise ConfigError(
            f"layered family needs at least {len(rows)} arcs for this layout"
        )
    while len(rows) < arcs:
        li = rng.randint(0, layers - 2)
        tail = layer_nodes[li][rng.randint(0, len(layer_nodes[li]) - 1)]
        head = layer_nodes[li + 1][rng.randint(0, len(layer_nodes[li + 1]) - 1)]
        rows.append((tail, head, *_costs(rng)))
    return Instance(MultiDigraph.from_rows(nodes, rows), 0, nodes - 1, k)


def _gen_dag(rng, nodes, arcs, k):
    if nodes < 2:
        raise ConfigError("dag family needs at least 2 nodes")
    _check_k(k, nodes)
    rows = []
    outdeg = [0] * nodes
    for v in range(1, nodes):
        tail = rng.randint(0, v - 1)
        rows.append((tail, v, *_costs(rng)))
        outdeg[tail] += 1
    for v in range(nodes - 1):
        if outdeg[v] == 0:
            rows.append((v, rng.randint(v + 1, nodes - 1), *_costs(rng)))
    if arcs < len(rows):
        raise ConfigError(f"dag family needs at least {len(rows)} arcs here")
    while len(rows) < arcs:
        tail = rng.randint(0, nodes - 2)
        rows.append((tail, rng.randint(tail + 1, nodes - 1), *_costs(rng)))
    return Instance(MultiDigraph.from_rows(nodes, rows), 0, nodes - 1, k)


def _gen_asp(rng, arcs, k):
    """Random series-parallel instance with ``arcs`` arcs.

    Builds a random binary composition tree over the arcs, then assigns
    node ids: source 0, sink 1, one fresh node per series composition.
    k larger than the resulting graph allows is clamped to nodes - 1.
    """
    if arcs < 1:
        raise ConfigError("asp family needs at least 1 arc")
    if k < 0:
        raise ConfigError("k must be >= 0")
    ops: list[tuple] = [("leaf",)] * arcs
    items = list(range(arcs))
    while len(items) > 1:
        i = rng.randint(0, len(items) - 1)
        a = items[i]
        items[i] = items[-1]
        items.pop()
        j = rng.randint(0, len(items) - 1)
        b = items[j]
        kind = "series" if rng.randint(0, 1) == 0 else "parallel"
        ops.append((kind, a, b))
        items[j] = len(ops) - 1

    tails = [0] * arcs
    heads = [0] * arcs
    next_id = 2
    stack = [(items[0], 0, 1)]
    while stack:
        idx, tail, head = stack.pop()
        op = ops[idx]
        if op[0] == "leaf":
            tails[idx] = tail
            heads[idx] = head
        elif op[0] == "parallel":
            stack.append((op[2], tail, head))
            stack.append((op[1], tail, head))
        else:
            mid = next_id
            next_id += 1
            stack.append((op[2], mid, head))
            stack.append((op[1], tail, mid))
    nodes = next_id
    rows = [(tails[i], heads[i], *_costs(rng)) for i in range(arcs)]
    return Instance(MultiDigraph.from_rows(nodes, rows), 0, 1, min(k, nodes - 1))


def generate_instance(
    family: str,
    seed: int,
    *,
    nodes: int | None = None,
    arcs: int | None = None,
    k: int = 1,
    layers: int | None = None,
) -> Instance:
    """Generate one instance of the given family from a seed.

    ``nodes`` and ``arcs`` default to a small size; the asp family takes
    its node count from the composition tree and ignores ``nodes``.
    """
    if family not in FAMILIES:
        raise ConfigError(f"unknown family {family!r}; choose from {FAMILIES}")
    if arcs is None:
        arcs = 12
    if nodes is None:
        nodes = 6
    rng = SplitMix64(seed)
    if family == "layered":
        return _gen_layered(rng, nodes, arcs, k, layers)
    if family == "dag":
        if layers is not None:
            raise ConfigError("layers only applies to the layered family")
        return _gen_dag(rng, nodes, arcs, k)
    if layers is not None:
        raise ConfigError("layers only applies to the layered family")
    return _gen_asp(rng, arcs, k)
