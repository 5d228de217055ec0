from itertools import combinations

import pytest
from hypothesis import given, settings

from minorls.exact import (
    enumerate_max_independent_set,
    exact,
    exact_max_independent_set,
    exact_min_dominating_set,
    exact_min_vertex_cover,
)
from minorls.graph import Graph, GraphError, GraphSpec, generate
from minorls.local_search import is_feasible

from test_graph import graphs


def _brute_min(g, kind):
    """Smallest feasible subset by size then lexicographic order."""
    for k in range(g.n + 1):
        for c in combinations(range(g.n), k):
            if is_feasible(g, kind, c):
                return k, frozenset(c)


def test_examples():
    k3 = generate(GraphSpec("complete", size=3))
    c5 = generate(GraphSpec("cycle", size=5))
    grid = generate(GraphSpec("grid", rows=4, cols=4))
    star = generate(GraphSpec("star", size=5))
    p5 = generate(GraphSpec("path", size=5))
    assert exact_max_independent_set(k3).optimum == 1
    assert exact_max_independent_set(c5).optimum == 2
    assert exact_max_independent_set(grid).optimum == 8
    assert exact_min_vertex_cover(k3).optimum == 2
    assert exact_min_vertex_cover(star).witness == {0}
    assert exact_min_vertex_cover(grid).optimum == 8
    assert exact_min_dominating_set(k3).optimum == 1
    assert exact_min_dominating_set(p5).optimum == 2
    assert exact_min_dominating_set(grid).optimum == 4


def test_grid_cover_by_direct_search():
    grid = generate(GraphSpec("grid", rows=4, cols=4))
    assert _brute_min(grid, "vc")[0] == 8


def test_lexicographic_witnesses():
    assert exact_min_dominating_set(generate(GraphSpec("path", size=5))).witness == {0, 3}
    assert exact_max_independent_set(generate(GraphSpec("cycle", size=5))).witness == {0, 2}
    assert exact_max_independent_set(generate(GraphSpec("path", size=4))).witness == {0, 2}


def test_cap_refusal():
    g = generate(GraphSpec("path", size=30))
    for kind in ("is", "vc", "ds"):
        with pytest.raises(GraphError, match="cap"):
            exact(g, kind)
    assert exact(g, "is", cap=30).optimum == 15


def test_empty_graph():
    for kind in ("is", "vc", "ds"):
        res = exact(Graph(0), kind)
        assert res.optimum == 0 and res.witness == frozenset()


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=16))
def test_branch_and_bound_matches_enumeration(g):
    bb = exact_max_independent_set(g)
    ref = enumerate_max_independent_set(g)
    assert bb.optimum == ref.optimum
    assert bb.witness == ref.witness


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=9))
def test_cross_checks(g):
    mis = exact_max_independent_set(g)
    vc = exact_min_vertex_cover(g)
    ds = exact_min_dominating_set(g)
    assert vc.optimum + mis.optimum == g.n
    assert is_feasible(g, "is", mis.witness) and len(mis.witness) == mis.optimum
    assert is_feasible(g, "vc", vc.witness) and len(vc.witness) == vc.optimum
    assert is_feasible(g, "ds", ds.witness) and len(ds.witness) == ds.optimum
    assert (ds.optimum, ds.witness) == _brute_min(g, "ds")
    assert vc.optimum == _brute_min(g, "vc")[0]
    if all(g.degree(v) for v in range(g.n)):
        assert ds.optimum <= vc.optimum
