import pytest

from recsp.dispatch import METHODS, solve
from recsp.errors import (
    NotLayeredError,
    NotSeriesParallelError,
    TooManyPathsError,
)
from recsp.generator import SplitMix64, generate_instance
from recsp.graph import Instance, MultiDigraph
from recsp.oracle import solve_bruteforce


def bridge_instance(k=1):
    # the 1 -> 2 bridge defeats both recognizers, so only the general
    # solver (or the oracle) applies
    g = MultiDigraph.from_rows(4, [
        (0, 1, 1, 1, 0), (0, 2, 1, 1, 0), (1, 2, 1, 1, 0),
        (1, 3, 1, 1, 0), (2, 3, 1, 1, 0),
    ])
    return Instance(g, 0, 3, k)


def test_unknown_method_is_rejected():
    with pytest.raises(ValueError):
        solve(bridge_instance(), "quantum")


def test_explicit_method_does_not_fall_back():
    with pytest.raises(NotSeriesParallelError):
        solve(bridge_instance(), "asp")
    with pytest.raises(NotLayeredError):
        solve(bridge_instance(), "layered")


def test_auto_falls_back_to_the_general_solver():
    inst = bridge_instance()
    assert solve(inst).total_cost == solve_bruteforce(inst).total_cost


def test_zero_budget_shortcut_applies_to_every_method():
    g = MultiDigraph.from_rows(2, [(0, 1, 5, 1, 1), (0, 1, 1, 10, 0)])
    inst = Instance(g, 0, 1, 0)
    # combined costs are 5+1+1 = 7 and 1+10+0 = 11, so arc 0 wins
    for method in METHODS:
        sol = solve(inst, method)
        assert sol.total_cost == 7
        assert sol.x_arcs == sol.y_arcs == (0,)


def test_oracle_method_matches_the_fast_solvers():
    rng = SplitMix64(424242)
    for trial in range(30):
        inst = generate_instance("asp", rng.randint(0, 10**9),
                                 arcs=rng.randint(1, 10), k=rng.randint(1, 3))
        assert solve(inst, "oracle").total_cost == solve(inst, "asp").total_cost


def test_oracle_method_propagates_the_path_limit():
    # 17 two-arc gaps in series give 2^17 s-t paths, past the default cap
    rows = []
    for gap in range(17):
        rows.append((gap, gap + 1, 1, 1, 0))
        rows.append((gap, gap + 1, 1, 1, 0))
    inst = Instance(MultiDigraph.from_rows(18, rows), 0, 17, 1)
    with pytest.raises(TooManyPathsError):
        solve(inst, "oracle")
