import pytest

from recsp.errors import CyclicGraphError, NotLayeredError, ValidationError
from recsp.graph import (
    INF,
    Arc,
    Instance,
    MultiDigraph,
    compute_layering,
    dag_shortest_paths,
    divergence_count,
    hop_bounded_table,
    on_st_path_mask,
    path_cost,
    path_error,
    reconstruct_path,
    topological_order,
)
from recsp.generator import SplitMix64


def build(n, rows):
    return MultiDigraph.from_rows(n, rows)


def random_dag(rng, n, m):
    rows = []
    for v in range(1, n):
        rows.append((rng.randint(0, v - 1), v, rng.randint(-5, 20),
                     rng.randint(-5, 20), rng.randint(0, 10)))
    while len(rows) < m:
        tail = rng.randint(0, n - 2)
        rows.append((tail, rng.randint(tail + 1, n - 1), rng.randint(-5, 20),
                     rng.randint(-5, 20), rng.randint(0, 10)))
    return build(n, rows)


def test_arc_cost_selectors():
    arc = Arc(0, 0, 1, 5, 3, 2)
    assert arc.first_cost == 5
    assert arc.upper_cost == 5
    assert arc.combined_cost == 10
    assert arc.cost("first") == 5
    assert arc.cost("upper") == 5
    assert arc.cost("combined") == 10
    with pytest.raises(ValueError):
        arc.cost("nominal")


def test_arc_rejects_negative_deviation_and_self_loop():
    with pytest.raises(ValidationError):
        Arc(0, 0, 1, 1, 1, -1)
    with pytest.raises(ValidationError):
        Arc(0, 2, 2, 1, 1, 0)


def test_graph_parallel_arcs_kept_distinct():
    g = build(2, [(0, 1, 1, 1, 0), (0, 1, 2, 2, 0)])
    assert g.arc_count == 2
    assert g.out_arcs(0) == (0, 1)
    assert g.in_arcs(1) == (0, 1)


def test_graph_rejects_bad_endpoints():
    with pytest.raises(ValidationError):
        build(2, [(0, 5, 1, 1, 0)])


def test_topological_order_prefers_small_ids():
    g = build(4, [(0, 3, 1, 1, 0), (1, 3, 1, 1, 0), (2, 3, 1, 1, 0)])
    assert topological_order(g) == [0, 1, 2, 3]


def test_topological_order_detects_cycle():
    arcs = (Arc(0, 0, 1, 1, 1, 0), Arc(1, 1, 2, 1, 1, 0), Arc(2, 2, 0, 1, 1, 0))
    g = MultiDigraph(3, arcs)
    with pytest.raises(CyclicGraphError):
        topological_order(g)


def test_instance_validation():
    g = build(3, [(0, 1, 1, 1, 0), (1, 2, 1, 1, 0)])
    Instance(g, 0, 2, 1)
    with pytest.raises(ValidationError):
        Instance(g, 0, 0, 1)  # source == sink
    with pytest.raises(ValidationError):
        Instance(g, 0, 2, 3)  # k >= node count
    with pytest.raises(ValidationError):
        Instance(g, 0, 2, -1)
    with pytest.raises(ValidationError):
        Instance(g, 2, 0, 1)  # sink unreachable


def test_instance_rejects_cycles_with_cyclic_error():
    arcs = (Arc(0, 0, 1, 1, 1, 0), Arc(1, 1, 0, 1, 1, 0))
    g = MultiDigraph(2, arcs)
    with pytest.raises(CyclicGraphError):
        Instance(g, 0, 1, 0)


def test_on_st_path_mask_drops_dangling_nodes():
    # 3 dangles off the path, 4 hangs above it
    g = build(5, [(0, 1, 1, 1, 0), (1, 2, 1, 1, 0), (1, 3, 1, 1, 0), (4, 1, 1, 1, 0)])
    assert on_st_path_mask(g, 0, 2) == [True, True, True, False, False]


def test_layering_simple_chain():
    g = build(3, [(0, 1, 1, 1, 0), (1, 2, 1, 1, 0)])
    assert compute_layering(Instance(g, 0, 2, 1)) == {0: 1, 1: 2, 2: 3}


def test_layering_ignores_pruned_nodes():
    # arc 3 -> 2 would break the layering but 3 is not on any 0-2 path
    g = build(4, [(0, 1, 1, 1, 0), (1, 2, 1, 1, 0), (3, 2, 1, 1, 0)])
    layer = compute_layering(Instance(g, 0, 2, 1))
    assert layer == {0: 1, 1: 2, 2: 3}


def test_layering_conflict_raises():
    # both a two-arc and a direct route to the sink
    g = build(3, [(0, 1, 1, 1, 0), (1, 2, 1, 1, 0), (0, 2, 1, 1, 0)])
    with pytest.raises(NotLayeredError):
        compute_layering(Instance(g, 0, 2, 1))


def test_dag_shortest_paths_with_negative_costs():
    g = build(4, [(0, 1, 4, 0, 0), (0, 2, 1, 0, 0), (2, 1, -3, 0, 0),
                  (1, 3, 2, 0, 0)])
    dist, parent = dag_shortest_paths(g, "first", 0)
    assert dist == [0, -2, 1, 0]
    assert reconstruct_path(g, parent, 0, 3) == (1, 2, 3)


def test_dag_shortest_paths_unreachable_is_inf():
    g = build(3, [(1, 2, 1, 1, 0)])
    dist, parent = dag_shortest_paths(g, "first", 0)
    assert dist[1] is INF and dist[2] is INF
    assert reconstruct_path(g, parent, 0, 2) is None


def test_dag_shortest_paths_matches_enumeration():
    from recsp.oracle import enumerate_st_paths

    rng = SplitMix64(2024)
    for trial in range(60):
        n = rng.randint(3, 8)
        g = random_dag(rng, n, rng.randint(n, 14))
        for selector in ("first", "upper", "combined"):
            dist, parent = dag_shortest_paths(g, selector, 0)
            for v in range(1, n):
                paths = enumerate_st_paths(g, 0, v)
                if not paths:
                    assert dist[v] is INF
                    continue
                want = min(path_cost(g, p, selector) for p in paths)
                assert dist[v] == want
                got = reconstruct_path(g, parent, 0, v)
                assert path_cost(g, got, selector) == want
                assert path_error(g, got, 0, v) is None


def test_hop_table_matches_enumeration():
    from recsp.oracle import enumerate_st_paths

    rng = SplitMix64(77)
    for trial in range(40):
        n = rng.randint(3, 7)
        g = random_dag(rng, n, rng.randint(n, 12))
        max_hops = rng.randint(1, 4)
        table = hop_bounded_table(g, "upper", 0, max_hops)
        for v in range(1, n):
            paths = enumerate_st_paths(g, 0, v)
            for l in range(max_hops + 1):
                fitting = [p for p in paths if len(p) <= l]
                if not fitting:
                    assert table.dist[v][l] is INF
                    assert table.path_to(v, l) is None
                    continue
                want = min(path_cost(g, p, "upper") for p in fitting)
                assert table.dist[v][l] == want
                got = table.path_to(v, l)
                assert len(got) <= l
                assert path_cost(g, got, "upper") == want
            shortest = min((len(p) for p in paths), default=None)
            if shortest is None or shortest > max_hops:
                assert table.min_hops(v) is None
            else:
                assert table.min_hops(v) == shortest


def test_hop_table_values_nonincreasing_in_allowance():
    rng = SplitMix64(5150)
    for trial in range(30):
        n = rng.randint(3, 7)
        g = random_dag(rng, n, rng.randint(n, 12))
        table = hop_bounded_table(g, "upper", 0, 5)
        for v in range(n):
            for l in range(1, 6):
                assert table.dist[v][l] <= table.dist[v][l - 1]


def test_path_error_cases():
    g = build(4, [(0, 1, 1, 1, 0), (1, 2, 1, 1, 0), (2, 3, 1, 1, 0), (0, 2, 1, 1, 0)])
    assert path_error(g, (0, 1, 2), 0, 3) is None
    assert "empty" in path_error(g, (), 0, 3)
    assert "out of range" in path_error(g, (9,), 0, 3)
    assert "not at source" in path_error(g, (1, 2), 0, 3)
    assert "previous arc ended" in path_error(g, (0, 2), 0, 3)
    assert "not at sink" in path_error(g, (0, 1), 0, 3)


def test_path_error_rejects_repeated_node():
    g = build(3, [(0, 1, 1, 1, 0), (1, 2, 1, 1, 0), (2, 0, 1, 1, 0)])
    # the walk 0 -> 1 -> 2 -> 0 revisits node 0
    assert "repeated" in path_error(g, (0, 1, 2), 0, 0)


def test_divergence_count_is_arc_identity_based():
    assert divergence_count((1, 2, 3), (3, 4)) == 2
    assert divergence_count((1, 2), (1, 2)) == 0
    # parallel arcs with equal costs still count as different identities
    assert divergence_count((5,), (6,)) == 1
