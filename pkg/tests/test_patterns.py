from __future__ import annotations

import itertools

import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from ent2 import (
    LongCycle,
    SquareAC,
    Triangle3C,
    build_graph,
    canonical_cycle,
    check_conditions,
    find_3c_violation,
    find_ac_violation,
    find_long_cycle,
)
from helpers import (
    ac_graph,
    all_pairs,
    brute_cycle_over,
    complete_graph,
    cycle_graph,
    diamond_graph,
    graph_from_mask,
    path_graph,
    petersen_graph,
    star_graph,
    threec_graph,
)

PROPERTY_SETTINGS = settings(
    max_examples=200, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)


@st.composite
def graphs(draw, max_n: int = 8):
    n = draw(st.integers(min_value=0, max_value=max_n))
    pairs = all_pairs(n)
    mask = draw(st.integers(min_value=0, max_value=(1 << len(pairs)) - 1))
    return graph_from_mask(n, pairs, mask)


def assert_real_cycle(g, witness, bound):
    vs = witness.vertices
    assert len(vs) > bound
    assert len(set(vs)) == len(vs)
    for i, u in enumerate(vs):
        assert g.has_edge(u, vs[(i + 1) % len(vs)])
    assert vs == canonical_cycle(vs)


def test_canonical_cycle_is_rotation_and_reflection_invariant():
    base = (2, 7, 4, 0, 5)
    want = canonical_cycle(base)
    assert want[0] == 0
    seqs = [base[i:] + base[:i] for i in range(len(base))]
    seqs += [tuple(reversed(s)) for s in seqs]
    for s in seqs:
        assert canonical_cycle(s) == want


def test_find_long_cycle_examples():
    assert find_long_cycle(path_graph(6)) is None
    assert find_long_cycle(cycle_graph(4)) is None
    assert find_long_cycle(diamond_graph()) is None
    for k in range(5, 10):
        w = find_long_cycle(cycle_graph(k))
        assert w is not None and len(w.vertices) == k
    w = find_long_cycle(petersen_graph())
    assert w is not None
    assert_real_cycle(petersen_graph(), w, 4)


def test_find_long_cycle_respects_the_bound():
    assert find_long_cycle(cycle_graph(5), 5) is None
    w = find_long_cycle(cycle_graph(6), 5)
    assert w is not None and len(w.vertices) == 6
    assert find_long_cycle(cycle_graph(4), 3) is not None
    with pytest.raises(ValueError):
        find_long_cycle(cycle_graph(4), -1)


def test_find_long_cycle_handles_theta_shaped_blocks():
    # two hubs with many shared neighbors: circumference exactly 4
    g = build_graph(6, [(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (1, 2), (1, 3), (1, 4), (1, 5)])
    assert find_long_cycle(g) is None
    # one extra edge between former degree-2 vertices creates a 5-cycle
    h = build_graph(6, [(0, 2), (0, 3), (0, 4), (0, 5), (1, 2), (1, 3), (1, 4), (1, 5), (2, 3)])
    w = find_long_cycle(h)
    assert w is not None
    assert_real_cycle(h, w, 4)


@PROPERTY_SETTINGS
@given(graphs(), st.integers(min_value=3, max_value=6))
def test_find_long_cycle_matches_brute_force(g, k):
    w = find_long_cycle(g, k)
    assert (w is not None) == brute_cycle_over(g, k)
    if w is not None:
        assert_real_cycle(g, w, k)


def brute_3c(g):
    deg = [len(a) for a in g.adjacency]
    for a, b, c in itertools.combinations(range(g.n), 3):
        if (
            g.has_edge(a, b)
            and g.has_edge(b, c)
            and g.has_edge(a, c)
            and deg[a] > 2
            and deg[b] > 2
            and deg[c] > 2
        ):
            return True
    return False


def brute_ac(g):
    deg = [len(a) for a in g.adjacency]
    for quad in itertools.permutations(range(g.n), 4):
        a, b, c, d = quad
        if a != min(quad):
            continue
        if not (g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(c, d) and g.has_edge(d, a)):
            continue
        pairs = [(a, b), (b, c), (c, d), (d, a)]
        if any(deg[u] > 2 and deg[v] > 2 for u, v in pairs):
            return True
    return False


def test_pattern_finder_examples():
    w = find_3c_violation(threec_graph())
    assert isinstance(w, Triangle3C)
    assert w.vertices == (0, 1, 2)
    assert find_3c_violation(cycle_graph(3)) is None
    assert find_3c_violation(diamond_graph()) is None

    w = find_ac_violation(ac_graph())
    assert isinstance(w, SquareAC)
    assert set(w.pair) <= set(w.vertices)
    assert find_ac_violation(cycle_graph(4)) is None
    # diamond: the high-degree pair 0-2 is a chord, not a cycle edge
    assert find_ac_violation(diamond_graph()) is None


@PROPERTY_SETTINGS
@given(graphs(max_n=7))
def test_3c_finder_matches_brute_force(g):
    w = find_3c_violation(g)
    assert (w is not None) == brute_3c(g)
    if w is not None:
        a, b, c = w.vertices
        assert len({a, b, c}) == 3
        assert g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(a, c)
        for v in w.vertices:
            assert len(g.adjacency[v]) > 2


@PROPERTY_SETTINGS
@given(graphs(max_n=7))
def test_ac_finder_matches_brute_force(g):
    w = find_ac_violation(g)
    assert (w is not None) == brute_ac(g)
    if w is not None:
        vs = w.vertices
        assert len(set(vs)) == 4
        for i, u in enumerate(vs):
            assert g.has_edge(u, vs[(i + 1) % 4])
        u, v = w.pair
        assert len(g.adjacency[u]) > 2 and len(g.adjacency[v]) > 2
        idx_u, idx_v = vs.index(u), vs.index(v)
        assert (idx_u - idx_v) % 4 in (1, 3)  # adjacent on the square


def test_check_conditions_flags_and_witness_order():
    v = check_conditions(cycle_graph(4))
    assert (v.cs_ok, v.no3c_ok, v.noac_ok) == (True, True, True)
    assert v.witness is None

    v = check_conditions(cycle_graph(6))
    assert not v.cs_ok
    assert isinstance(v.witness, LongCycle)

    v = check_conditions(threec_graph())
    assert (v.cs_ok, v.no3c_ok, v.noac_ok) == (True, False, True)
    assert isinstance(v.witness, Triangle3C)

    v = check_conditions(ac_graph())
    assert (v.cs_ok, v.no3c_ok, v.noac_ok) == (True, True, False)
    assert isinstance(v.witness, SquareAC)

    # K4 fails 3C and AC at once; the first failing condition wins
    v = check_conditions(complete_graph(4))
    assert v.cs_ok and not v.no3c_ok and not v.noac_ok
    assert isinstance(v.witness, Triangle3C)


@PROPERTY_SETTINGS
@given(graphs(max_n=7))
def test_check_conditions_matches_finders(g):
    v = check_conditions(g)
    assert v.cs_ok == (find_long_cycle(g, 4) is None)
    assert v.no3c_ok == (find_3c_violation(g) is None)
    assert v.noac_ok == (find_ac_violation(g) is None)
    assert (v.witness is None) == (v.cs_ok and v.no3c_ok and v.noac_ok)


def test_check_conditions_on_edgeless_and_star():
    for g in (build_graph(0, []), build_graph(3, []), star_graph(6)):
        v = check_conditions(g)
        assert v.cs_ok and v.no3c_ok and v.noac_ok
