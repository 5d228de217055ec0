"""Bounded-swap local search for independent set, vertex cover and dominating set.

The search keeps a feasible solution ``U`` and repeatedly exchanges a set
``U1 ⊆ U`` for a set ``V1 ⊆ V∖U``:

* maximisation (independent set) needs ``|U1| < |V1| <= r``, starting from ``∅``;
* minimisation (vertex cover, dominating set) needs ``|V1| < |U1| <= r``,
  starting from ``V``.

Swaps are taken in a canonical order so that runs are reproducible: by size of
the driving set (``V1`` for maximisation, ``U1`` for minimisation), then
lexicographically, then the partner set by size and lexicographically.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable

import numpy as np

from .graph import Graph, GraphError, check_vertex_set, from_mask, to_mask

KINDS = ("independent-set", "vertex-cover", "dominating-set")
ALIASES = {"is": "independent-set", "vc": "vertex-cover", "ds": "dominating-set"}


@dataclass(frozen=True)
class Problem:
    kind: str

    def __post_init__(self):
        kind = ALIASES.get(self.kind, self.kind)
        if kind not in KINDS:
            raise GraphError(f"unknown problem {self.kind!r}; expected one of {KINDS} or {tuple(ALIASES)}")
        object.__setattr__(self, "kind", kind)

    @property
    def maximize(self) -> bool:
        return self.kind == "independent-set"

    def initial(self, g: Graph) -> frozenset[int]:
        return frozenset() if self.maximize else frozenset(range(g.n))

    def improves(self, before: int, after: int) -> bool:
        return after > before if self.maximize else after < before


def as_problem(p: str | Problem) -> Problem:
    return p if isinstance(p, Problem) else Problem(p)


@dataclass(frozen=True)
class Step:
    removed: frozenset[int]
    added: frozenset[int]
    objective: int


@dataclass
class SearchTrace:
    steps: list[Step] = field(default_factory=list)
    termination: str = "local-optimum"

    @property
    def iterations(self) -> int:
        return len(self.steps)

    def objectives(self) -> list[int]:
        return [s.objective for s in self.steps]


# ----------------------------------------------------------------------------
# feasibility


def _independent(g: Graph, mask: int) -> bool:
    nbr = g.nbr_mask
    m = mask
    while m:
        low = m & -m
        if nbr[low.bit_length() - 1] & mask:
            return False
        m ^= low
    return True


def _covers(g: Graph, mask: int) -> bool:
    return all(mask >> u & 1 or mask >> v & 1 for u, v in g.edges)


def _dominates(g: Graph, mask: int) -> bool:
    nbr = g.nbr_mask
    return all(mask >> v & 1 or nbr[v] & mask for v in range(g.n))


def is_feasible(g: Graph, p: str | Problem, u: Iterable[int]) -> bool:
    p = as_problem(p)
    mask = to_mask(check_vertex_set(g, u))
    if p.kind == "independent-set":
        return _independent(g, mask)
    if p.kind == "vertex-cover":
        return _covers(g, mask)
    return _dominates(g, mask)


# ----------------------------------------------------------------------------
# improving swaps


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _first_subset(cands: list[int], k: int, extend, state):
    """Lexicographically first ``k``-subset of ``cands`` accepted by ``extend``.

    ``extend(state, v)`` returns the new state or ``None`` to prune; pruning
    must be monotone (a rejected partial set has no accepted superset).
    Returns ``(chosen, state)`` or ``None``.
    """
    chosen: list[int] = []
    n = len(cands)

    def rec(start: int, st):
        if len(chosen) == k:
            return st
        for i in range(start, n - (k - len(chosen)) + 1):
            nxt = extend(st, cands[i])
            if nxt is None:
                continue
            chosen.append(cands[i])
            res = rec(i + 1, nxt)
            if res is not None:
                return res
            chosen.pop()
        return None

    res = rec(0, state)
    return None if res is None else (list(chosen), res)


def _swap_independent(g: Graph, u: int, r: int):
    nbr = g.nbr_mask
    outside = [v for v in range(g.n) if not u >> v & 1]
    for k in range(1, r + 1):
        # V1 must be independent; U1 is forced to be U ∩ N(V1) and needs |U1| < k
        def extend(st, v, k=k):
            chosen, forced = st
            if nbr[v] & chosen:
                return None
            forced |= nbr[v] & u
            if forced.bit_count() >= k:
                return None
            return chosen | 1 << v, forced

        cands = [v for v in outside if (nbr[v] & u).bit_count() < k]
        if len(cands) < k:
            continue
        hit = _first_subset(cands, k, extend, (0, 0))
        if hit is not None:
            added, forced = hit[1]
            return forced, added
    return None


def _swap_cover(g: Graph, u: int, r: int):
    nbr = g.nbr_mask
    inside = _bits(u)
    outside = ((1 << g.n) - 1) & ~u
    for k in range(1, r + 1):
        # U1 must be independent; V1 is forced to be N(U1) ∖ U and needs |V1| < k
        def extend(st, v, k=k):
            chosen, forced = st
            if nbr[v] & chosen:
                return None
            forced |= nbr[v] & outside
            if forced.bit_count() >= k:
                return None
            return chosen | 1 << v, forced

        cands = [v for v in inside if (nbr[v] & outside).bit_count() < k]
        if len(cands) < k:
            continue
        hit = _first_subset(cands, k, extend, (0, 0))
        if hit is not None:
            removed, forced = hit[1]
            return removed, forced
    return None


def _swap_dominating(g: Graph, u: int, r: int):
    n = g.n
    nbr = g.nbr_mask
    closed = [nbr[v] | 1 << v for v in range(n)]
    inside = _bits(u)
    outside = ((1 << n) - 1) & ~u
    # vertices with a closed neighbour outside U can be re-dominated by V1
    rescuable = 0
    for v in range(n):
        if closed[v] & outside:
            rescuable |= 1 << v

    def lost(removed: int) -> int:
        """Vertices left undominated once ``removed`` leaves U."""
        out = 0
        for w in _bits(_closed_union(closed, removed)):
            if (closed[w] & u & ~removed) == 0:
                out |= 1 << w
        return out

    for k in range(1, r + 1):
        def extend(st, v):
            chosen = st | 1 << v
            if lost(chosen) & ~rescuable:
                return None
            return chosen

        chosen: list[int] = []
        found = _dominating_scan(inside, k, extend, lost, closed, outside, chosen)
        if found is not None:
            return found
    return None


def _closed_union(closed: list[int], mask: int) -> int:
    out = 0
    for v in _bits(mask):
        out |= closed[v]
    return out


def _dominating_scan(inside, k, extend, lost, closed, outside, chosen):
    n = len(inside)

    def rec(start: int, st: int):
        if len(chosen) == k:
            v1 = _min_dominator(lost(st), closed, outside, k - 1)
            return None if v1 is None else (st, v1)
        for i in range(start, n - (k - len(chosen)) + 1):
            nxt = extend(st, inside[i])
            if nxt is None:
                continue
            chosen.append(inside[i])
            res = rec(i + 1, nxt)
            if res is not None:
                return res
            chosen.pop()
        return None

    return rec(0, 0)


def _min_dominator(target: int, closed: list[int], outside: int, limit: int):
    """Lexicographically first smallest ``V1 ⊆ outside`` dominating ``target``, size ``<= limit``."""
    if target == 0:
        return 0
    cands = _bits(_closed_union(closed, target) & outside)
    for size in range(1, limit + 1):
        for combo in combinations(cands, size):
            cov = 0
            for v in combo:
                cov |= closed[v]
            if target & ~cov == 0:
                return to_mask(combo)
    return None


def find_improving_swap(g: Graph, p: str | Problem, u: Iterable[int], r: int):
    """First improving swap ``(U1, V1)`` in canonical order, or ``None``."""
    p = as_problem(p)
    us = check_vertex_set(g, u)
    if r < 1:
        raise GraphError(f"r must be >= 1, got {r}")
    if not is_feasible(g, p, us):
        raise GraphError(f"solution is not feasible for {p.kind}")
    mask = to_mask(us)
    if p.kind == "independent-set":
        hit = _swap_independent(g, mask, r)
    elif p.kind == "vertex-cover":
        hit = _swap_cover(g, mask, r)
    else:
        hit = _swap_dominating(g, mask, r)
    if hit is None:
        return None
    return from_mask(hit[0]), from_mask(hit[1])


def local_search(g: Graph, p: str | Problem, r: int, start: Iterable[int] | None = None):
    """Run the swap search to an ``r``-local optimum.

    Returns ``(solution, trace)``.  ``start`` overrides the initial solution
    (``∅`` when maximising, ``V`` when minimising) and must be feasible.
    """
    p = as_problem(p)
    if r < 1:
        raise GraphError(f"r must be >= 1, got {r}")
    u = p.initial(g) if start is None else check_vertex_set(g, start)
    if not is_feasible(g, p, u):
        raise GraphError(f"start solution is not feasible for {p.kind}")
    trace = SearchTrace()
    while True:
        swap = find_improving_swap(g, p, u, r)
        if swap is None:
            return u, trace
        removed, added = swap
        u = (u - removed) | added
        trace.steps.append(Step(removed, added, len(u)))


# ----------------------------------------------------------------------------
# independent verifier: exhaustive, no pruning


FEASIBILITY_TABLE_MAX_N = 20


def feasibility_table(g: Graph, p: str | Problem) -> np.ndarray:
    """Boolean array over all ``2**n`` vertex subsets (bit ``v`` = vertex ``v``)."""
    p = as_problem(p)
    if g.n > FEASIBILITY_TABLE_MAX_N:
        raise GraphError(f"feasibility table limited to n <= {FEASIBILITY_TABLE_MAX_N}")
    masks = np.arange(1 << g.n, dtype=np.int64)
    member = [(masks >> v) & 1 == 1 for v in range(g.n)]
    ok = np.ones(1 << g.n, dtype=bool)
    if p.kind == "independent-set":
        for a, b in g.edges:
            ok &= ~(member[a] & member[b])
    elif p.kind == "vertex-cover":
        for a, b in g.edges:
            ok &= member[a] | member[b]
    else:
        for v in range(g.n):
            hit = member[v].copy()
            for w in g.adj[v]:
                hit |= member[w]
            ok &= hit
    return ok


_POPCOUNT_CACHE: dict[int, np.ndarray] = {}


def _popcounts(n: int) -> np.ndarray:
    if n not in _POPCOUNT_CACHE:
        masks = np.arange(1 << n, dtype=np.int64)
        pc = np.zeros(1 << n, dtype=np.int64)
        for v in range(n):
            pc += (masks >> v) & 1
        _POPCOUNT_CACHE[n] = pc
    return _POPCOUNT_CACHE[n]


def _swap_sizes(n: int, u: int):
    """``|U∖W|`` and ``|W∖U|`` for every subset ``W`` of the vertices."""
    masks = np.arange(1 << n, dtype=np.int64)
    pc = _popcounts(n)
    full = (1 << n) - 1
    return pc[~masks & u], pc[masks & ~u & full]


def verify_local_optimality(g: Graph, p: str | Problem, u: Iterable[int], r: int, table: np.ndarray | None = None) -> bool:
    """True iff no swap within the size rules yields a better feasible solution.

    Every candidate ``W = (U∖U1) ∪ V1`` is checked; nothing is pruned.  For
    ``n <= 20`` all ``2**n`` subsets are scanned against a feasibility table
    (pass ``table`` to reuse one); larger graphs enumerate swap pairs directly.
    """
    p = as_problem(p)
    us = check_vertex_set(g, u)
    if r < 1:
        raise GraphError(f"r must be >= 1, got {r}")
    if not is_feasible(g, p, us):
        raise GraphError(f"solution is not feasible for {p.kind}")
    if g.n <= FEASIBILITY_TABLE_MAX_N:
        if table is None:
            table = feasibility_table(g, p)
        removed, added = _swap_sizes(g.n, to_mask(us))
        if p.maximize:
            shape = (removed < added) & (added <= r)
        else:
            shape = (added < removed) & (removed <= r)
        return not bool(np.any(shape & table))
    return _verify_by_pairs(g, p, us, r)


def _verify_by_pairs(g: Graph, p: Problem, us: frozenset[int], r: int) -> bool:
    inside = sorted(us)
    outside = [v for v in range(g.n) if v not in us]
    if p.maximize:
        pairs = ((a, b) for b in range(1, r + 1) for a in range(b))
    else:
        pairs = ((a, b) for a in range(1, r + 1) for b in range(a))
    check = {"independent-set": _independent, "vertex-cover": _covers, "dominating-set": _dominates}[p.kind]
    base = to_mask(us)
    for n_out, n_in in pairs:
        if n_out > len(inside) or n_in > len(outside):
            continue
        for u1 in combinations(inside, n_out):
            rest = base & ~to_mask(u1)
            for v1 in combinations(outside, n_in):
                if check(g, rest | to_mask(v1)):
                    return False
    return True


# ----------------------------------------------------------------------------


def eps_to_r(eps: float, h: int, p: str | Problem) -> int:
    """Exchange radius ``ceil(C_h / eps**2)`` with ``C_h = 144**2 h**3`` (times 4 when minimising)."""
    p = as_problem(p)
    e = Fraction(str(eps)) if isinstance(eps, float) else Fraction(eps)
    if not 0 < e <= 1:
        raise GraphError(f"eps must lie in (0, 1], got {eps}")
    if h < 2:
        raise GraphError(f"h must be >= 2, got {h}")
    c = 144 ** 2 * h ** 3 * (1 if p.maximize else 4)
    return math.ceil(c / e ** 2)
