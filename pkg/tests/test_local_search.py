from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from minorls.graph import Graph, GraphError, GraphSpec, generate
from minorls.local_search import (
    Problem,
    eps_to_r,
    feasibility_table,
    find_improving_swap,
    is_feasible,
    local_search,
    verify_local_optimality,
)
from minorls.local_search import _verify_by_pairs

from test_graph import graphs

KINDS = ["is", "vc", "ds"]


def _naive_first_swap(g, kind, u, r):
    """Canonical order with no pruning at all: every (U1, V1) pair is tried."""
    p = Problem(kind)
    inside = sorted(u)
    outside = [v for v in range(g.n) if v not in u]
    for drive in range(1, r + 1):
        if p.maximize:
            outer = combinations(outside, drive) if drive <= len(outside) else []
            for v1 in outer:
                for k in range(drive):
                    for u1 in combinations(inside, k):
                        if is_feasible(g, p, (u - set(u1)) | set(v1)):
                            return frozenset(u1), frozenset(v1)
        else:
            outer = combinations(inside, drive) if drive <= len(inside) else []
            for u1 in outer:
                for k in range(drive):
                    for v1 in combinations(outside, k):
                        if is_feasible(g, p, (u - set(u1)) | set(v1)):
                            return frozenset(u1), frozenset(v1)
    return None


@st.composite
def feasible_instances(draw, kind, max_n=8):
    g = draw(graphs(max_n=max_n))
    picked = draw(st.sets(st.integers(0, max(g.n - 1, 0)), max_size=g.n)) if g.n else set()
    if kind in ("is", "vc"):
        indep = set()
        for v in sorted(picked):
            if not any(w in indep for w in g.adj[v]):
                indep.add(v)
        u = indep if kind == "is" else set(range(g.n)) - indep
    else:
        u = set(picked)
        for v in range(g.n):
            if v not in u and not any(w in u for w in g.adj[v]):
                u.add(v)
    return g, frozenset(u)


# ---------------------------------------------------------------- feasibility


def test_feasibility_examples():
    tri = generate(GraphSpec("complete", size=3))
    assert is_feasible(tri, "is", {0})
    assert not is_feasible(tri, "vc", {0})
    assert is_feasible(tri, "ds", {0})

    empty = Graph(3)
    assert is_feasible(empty, "is", set())
    assert is_feasible(empty, "vc", set())
    assert not is_feasible(empty, "ds", set())

    p5 = generate(GraphSpec("path", size=5))
    assert all(is_feasible(p5, k, {1, 3}) for k in KINDS)


@given(graphs())
def test_initial_solutions_are_feasible(g):
    for k in KINDS:
        assert is_feasible(g, k, Problem(k).initial(g))


# ---------------------------------------------------------------- swaps


def test_p6_swap_is_canonical_first():
    p6 = generate(GraphSpec("path", size=6))
    u1, v1 = find_improving_swap(p6, "is", {1, 4}, 3)
    # {1,4} is maximal, so no single addition works; the smallest V1 that
    # improves has two vertices and the lexicographically first one is {0, 2}
    assert (u1, v1) == ({1}, {0, 2})
    assert len((frozenset({1, 4}) - u1) | v1) == 3


def test_p6_three_vertex_swap_exists():
    p6 = generate(GraphSpec("path", size=6))
    assert is_feasible(p6, "is", {0, 2, 5})
    assert not verify_local_optimality(p6, "is", {1, 4}, 3)


def test_c5_has_no_single_addition():
    c5 = generate(GraphSpec("cycle", size=5))
    assert find_improving_swap(c5, "is", {0, 2}, 1) is None


def test_triangle_cover_drops_one_vertex():
    tri = generate(GraphSpec("complete", size=3))
    assert find_improving_swap(tri, "vc", {0, 1, 2}, 1) == ({0}, frozenset())


def test_infeasible_start_rejected():
    tri = generate(GraphSpec("complete", size=3))
    with pytest.raises(GraphError):
        find_improving_swap(tri, "is", {0, 1}, 2)
    with pytest.raises(GraphError):
        verify_local_optimality(tri, "vc", {0}, 2)
    with pytest.raises(GraphError):
        local_search(tri, "is", 2, start={0, 1})
    with pytest.raises(GraphError):
        local_search(tri, "is", 0)


@pytest.mark.parametrize("kind", KINDS)
@settings(max_examples=150, deadline=None)
@given(data=st.data())
def test_pruned_swap_matches_naive_enumeration(kind, data):
    g, u = data.draw(feasible_instances(kind))
    r = data.draw(st.integers(1, 3))
    assert find_improving_swap(g, kind, u, r) == _naive_first_swap(g, kind, u, r)


# ---------------------------------------------------------------- search


def test_search_examples():
    k3 = generate(GraphSpec("complete", size=3))
    for r in (1, 2, 3):
        assert len(local_search(k3, "is", r)[0]) == 1

    star = generate(GraphSpec("star", size=5))
    # removing vertex 0 first is the canonical first shrink, after which
    # every leaf is needed; with r = 2 the five leaves give way to the centre
    assert local_search(star, "ds", 1)[0] == {1, 2, 3, 4, 5}
    assert local_search(star, "ds", 2)[0] == {0}

    grid = generate(GraphSpec("grid", rows=4, cols=4))
    assert len(local_search(grid, "vc", grid.n)[0]) == 8


def test_start_override():
    p5 = generate(GraphSpec("path", size=5))
    u, trace = local_search(p5, "ds", 1, start={1, 3})
    assert u == {1, 3} and trace.iterations == 0


@pytest.mark.parametrize("kind", KINDS)
@settings(max_examples=80, deadline=None)
@given(g=graphs(max_n=9), r=st.integers(1, 3))
def test_search_contract(kind, g, r):
    p = Problem(kind)
    u, trace = local_search(g, p, r)
    assert is_feasible(g, p, u)
    assert verify_local_optimality(g, p, u, r)
    assert trace.iterations <= g.n
    assert local_search(g, p, r, start=u)[1].iterations == 0
    prev = len(p.initial(g))
    cur = set(p.initial(g))
    for step in trace.steps:
        assert step.removed <= cur and not (step.added & cur)
        if p.maximize:
            assert len(step.removed) < len(step.added) <= r
            assert step.objective > prev
        else:
            assert len(step.added) < len(step.removed) <= r
            assert step.objective < prev
        cur = (cur - step.removed) | step.added
        assert is_feasible(g, p, cur) and len(cur) == step.objective
        prev = step.objective
    assert cur == u


# ---------------------------------------------------------------- verifier


def test_verify_examples():
    c5 = generate(GraphSpec("cycle", size=5))
    assert verify_local_optimality(c5, "is", {0, 2}, 1)
    assert verify_local_optimality(c5, "is", {0, 2}, 3)
    p3 = generate(GraphSpec("path", size=3))
    assert not verify_local_optimality(p3, "vc", {0, 2}, 2)
    assert verify_local_optimality(p3, "vc", {0, 2}, 1)


@pytest.mark.parametrize("kind", KINDS)
@settings(max_examples=100, deadline=None)
@given(data=st.data())
def test_table_and_pair_verifiers_agree(kind, data):
    g, u = data.draw(feasible_instances(kind))
    r = data.draw(st.integers(1, 3))
    p = Problem(kind)
    by_table = verify_local_optimality(g, p, u, r, table=feasibility_table(g, p))
    assert by_table == _verify_by_pairs(g, p, u, r)
    assert by_table == (_naive_first_swap(g, kind, u, r) is None)


def test_pair_verifier_used_above_table_limit():
    g = generate(GraphSpec("path", size=22))
    u, _ = local_search(g, "is", 2)
    assert verify_local_optimality(g, "is", u, 2)
    assert not verify_local_optimality(g, "is", set(range(0, 22, 3)), 2)


# ---------------------------------------------------------------- eps


def test_eps_to_r_examples():
    assert eps_to_r(1, 5, "is") == 2_592_000 == 144 ** 2 * 125
    assert eps_to_r(0.5, 5, "vc") == 41_472_000
    assert eps_to_r(0.5, 5, "ds") == 41_472_000
    with pytest.raises(GraphError):
        eps_to_r(1.5, 5, "is")
    with pytest.raises(GraphError):
        eps_to_r(0, 5, "is")
    with pytest.raises(GraphError):
        eps_to_r(0.5, 1, "is")


def test_eps_to_r_is_exact_for_decimal_input():
    # 0.1 as a float is slightly above 1/10; the decimal reading keeps the ceiling exact
    assert eps_to_r(0.1, 2, "is") == 144 ** 2 * 8 * 100


def test_unknown_problem():
    with pytest.raises(GraphError):
        Problem("clique")
