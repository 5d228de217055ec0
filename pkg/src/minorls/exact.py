"""Exact optima for small graphs, used as ground truth."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .graph import Graph, GraphError, from_mask

DEFAULT_CAP = 26


@dataclass(frozen=True)
class ExactResult:
    optimum: int
    witness: frozenset[int]
    explored: int


def _check_cap(g: Graph, cap: int) -> None:
    if g.n > cap:
        raise GraphError(f"exact solver refuses n={g.n} above cap {cap}")


class _MisSolver:
    """Branch and bound for the independence number on bitmask graphs."""

    def __init__(self, g: Graph):
        self.nbr = g.nbr_mask
        self.explored = 0
        self.memo: dict[int, int] = {}

    def alpha(self, cand: int) -> int:
        if cand == 0:
            return 0
        hit = self.memo.get(cand)
        if hit is not None:
            return hit
        self.explored += 1
        nbr = self.nbr
        # vertices of degree <= 1 inside cand can always be taken
        best_v, best_d = -1, -1
        m = cand
        while m:
            low = m & -m
            v = low.bit_length() - 1
            d = (nbr[v] & cand).bit_count()
            if d <= 1:
                res = 1 + self.alpha(cand & ~low & ~nbr[v])
                self.memo[cand] = res
                return res
            if d > best_d:
                best_v, best_d = v, d
            m ^= low
        bit = 1 << best_v
        take = 1 + self.alpha(cand & ~bit & ~nbr[best_v])
        skip = self.alpha(cand & ~bit)
        res = max(take, skip)
        self.memo[cand] = res
        return res


def exact_max_independent_set(g: Graph, cap: int = DEFAULT_CAP) -> ExactResult:
    """Maximum independent set with the lexicographically smallest witness.

    The optimum comes from branch and bound; the witness is then fixed greedily
    by taking each vertex in increasing id order whenever an optimum survives.
    """
    _check_cap(g, cap)
    solver = _MisSolver(g)
    full = (1 << g.n) - 1
    best = solver.alpha(full)
    chosen = 0
    cand = full
    need = best
    for v in range(g.n):
        if need == 0:
            break
        if not cand >> v & 1:
            continue
        rest = cand & ~(1 << v) & ~solver.nbr[v]
        if 1 + solver.alpha(rest & ~((1 << (v + 1)) - 1)) == need:
            chosen |= 1 << v
            cand = rest
            need -= 1
        else:
            cand &= ~(1 << v)
    return ExactResult(best, from_mask(chosen), solver.explored)


def exact_min_vertex_cover(g: Graph, cap: int = DEFAULT_CAP) -> ExactResult:
    """Minimum vertex cover as the complement of the maximum independent set witness."""
    mis = exact_max_independent_set(g, cap)
    return ExactResult(g.n - mis.optimum, frozenset(range(g.n)) - mis.witness, mis.explored)


def exact_min_dominating_set(g: Graph, cap: int = DEFAULT_CAP) -> ExactResult:
    """Smallest dominating set by increasing size, first in lexicographic order."""
    _check_cap(g, cap)
    full = (1 << g.n) - 1
    closed = [g.nbr_mask[v] | 1 << v for v in range(g.n)]
    explored = 0
    for k in range(g.n + 1):
        for combo in combinations(range(g.n), k):
            explored += 1
            cov = 0
            for v in combo:
                cov |= closed[v]
            if cov == full:
                return ExactResult(k, frozenset(combo), explored)
    raise AssertionError("unreachable: V dominates every graph")


def exact(g: Graph, kind: str, cap: int = DEFAULT_CAP) -> ExactResult:
    from .local_search import as_problem

    kind = as_problem(kind).kind
    if kind == "independent-set":
        return exact_max_independent_set(g, cap)
    if kind == "vertex-cover":
        return exact_min_vertex_cover(g, cap)
    return exact_min_dominating_set(g, cap)


def enumerate_max_independent_set(g: Graph, cap: int = 20) -> ExactResult:
    """Plain enumeration over all ``2**n`` subsets; the reference for the branch and bound."""
    _check_cap(g, cap)
    masks = np.arange(1 << g.n, dtype=np.int64)
    ok = np.ones(1 << g.n, dtype=bool)
    for a, b in g.edges:
        ok &= ~(((masks >> a) & 1).astype(bool) & ((masks >> b) & 1).astype(bool))
    sizes = np.zeros(1 << g.n, dtype=np.int64)
    for v in range(g.n):
        sizes += (masks >> v) & 1
    sizes = np.where(ok, sizes, -1)
    best = int(sizes.max())
    # lexicographic order on sorted tuples: compare by smallest member first
    witnesses = [from_mask(int(m)) for m in masks[sizes == best]]
    witness = min(witnesses, key=lambda s: sorted(s))
    return ExactResult(best, witness, 1 << g.n)
