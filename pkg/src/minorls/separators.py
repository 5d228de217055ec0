"""Balanced vertex separators with a structural certificate.

A separator of an ``n``-vertex graph is a partition ``(A, B, X)`` with no edge
between ``A`` and ``B`` and ``|A|, |B| <= 2n/3``.  The strategies here are
heuristics: the structural conditions are always met, while the size bound
``|X| <= h**1.5 * sqrt(n)`` is only measured and recorded.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field

from .graph import Graph, GraphError

STRATEGIES = ("bfs-layer", "greedy-refine")


@dataclass(frozen=True)
class SeparatorStrategy:
    kind: str = "bfs-layer"
    params: dict = field(default_factory=dict, compare=False, hash=False)

    def __post_init__(self):
        if self.kind not in STRATEGIES:
            raise GraphError(f"unknown separator strategy {self.kind!r}; expected one of {STRATEGIES}")


def as_strategy(strategy: str | SeparatorStrategy) -> SeparatorStrategy:
    return strategy if isinstance(strategy, SeparatorStrategy) else SeparatorStrategy(strategy)


@dataclass(frozen=True)
class SeparatorResult:
    a: frozenset[int]
    b: frozenset[int]
    x: frozenset[int]
    size_certified: bool

    @property
    def shrinks(self) -> bool:
        """Both ``A∪X`` and ``B∪X`` are proper subsets of the vertex set."""
        return bool(self.a) and bool(self.b)


def size_bound(n: int, h: int) -> float:
    return h ** 1.5 * math.sqrt(n)


def balance_limit(n: int) -> int:
    """Largest side size allowed by the strategies: ``floor(2n/3)``."""
    return 2 * n // 3


# ----------------------------------------------------------------------------


def _components(g: Graph, alive: list[bool]) -> list[list[int]]:
    seen = [not a for a in alive]
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        stack = [s]
        while stack:
            v = stack.pop()
            for w in g.adj[v]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    stack.append(w)
        comps.append(comp)
    return comps


def _pack(comps: list[list[int]], limit: int):
    """Largest-fit packing into two sides; ``None`` if a side would exceed ``limit``."""
    order = sorted(comps, key=lambda c: (-len(c), min(c)))
    a: list[int] = []
    b: list[int] = []
    for c in order:
        if len(a) <= len(b):
            a.extend(c)
        else:
            b.extend(c)
    if len(a) > limit or len(b) > limit:
        return None
    return a, b


def _bfs_layers(g: Graph, root: int) -> list[list[int]]:
    dist = {root: 0}
    layers = [[root]]
    q = deque([root])
    while q:
        v = q.popleft()
        d = dist[v]
        for w in g.adj[v]:
            if w not in dist:
                dist[w] = d + 1
                if d + 1 == len(layers):
                    layers.append([])
                layers[d + 1].append(w)
                q.append(w)
    return layers


def _split(g: Graph, x: set[int], limit: int):
    alive = [v not in x for v in range(g.n)]
    return _pack(_components(g, alive), limit)


def _bfs_layer(g: Graph):
    """Best BFS-layer separator, or ``None`` if no layer yields a balanced split."""
    n = g.n
    limit = balance_limit(n)
    comps = _components(g, [True] * n)
    packed = _pack(comps, limit)
    if packed is not None and (len(comps) > 1 or n == 0):
        return packed[0], packed[1], []
    big = max(comps, key=lambda c: (len(c), -min(c)))
    layers = _bfs_layers(g, min(big))
    total_before = 0
    candidates = []
    for i, layer in enumerate(layers):
        after = n - total_before - len(layer)
        # smallest layer first; among equals, the one splitting most evenly
        candidates.append((len(layer), abs(after - total_before), i, total_before))
        total_before += len(layer)
    candidates.sort()
    fallback = None
    for size, _, i, before in candidates:
        # layers before i form one connected piece on their own
        if before > limit:
            continue
        split = _split(g, set(layers[i]), limit)
        if split is None:
            continue
        if split[0] and split[1]:
            return split[0], split[1], layers[i]
        if fallback is None:
            fallback = (split[0], split[1], layers[i])
    return fallback


def _high_degree(g: Graph):
    """Remove highest-degree vertices until the rest packs into two nonempty balanced sides."""
    limit = balance_limit(g.n)
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    x: set[int] = set()
    for v in order:
        x.add(v)
        if len(x) == g.n:
            break
        split = _split(g, x, limit)
        if split is not None and split[0] and split[1]:
            return split[0], split[1], sorted(x)
    return None


def _min_degree_star(g: Graph):
    """Separate a minimum-degree vertex ``a`` by its neighbourhood.

    Works on any graph with a non-adjacent pair; excess vertices of the far
    side are moved into ``X`` until balanced.
    """
    limit = balance_limit(g.n)
    for a in sorted(range(g.n), key=lambda v: (g.degree(v), v)):
        rest = [v for v in range(g.n) if v != a and not g.has_edge(a, v)]
        if not rest:
            continue
        x = list(g.adj[a])
        while len(rest) > limit:
            x.append(rest.pop())
        return [a], rest, x
    return None


def _refine(g: Graph, a: list[int], b: list[int], x: list[int]):
    """Move separator vertices into A or B while every invariant still holds."""
    limit = balance_limit(g.n)
    side = [0] * g.n  # 1: A, 2: B, 0: X
    for v in a:
        side[v] = 1
    for v in b:
        side[v] = 2
    count = {1: len(a), 2: len(b)}
    xs = set(x)
    moved = True
    while moved:
        moved = False
        for v in sorted(xs):
            touch = {side[w] for w in g.adj[v]}
            # try the smaller side first
            for s in sorted((1, 2), key=lambda s: count[s]):
                if 3 - s not in touch and count[s] < limit:
                    side[v] = s
                    count[s] += 1
                    xs.discard(v)
                    moved = True
                    break
    aa = [v for v in range(g.n) if side[v] == 1]
    bb = [v for v in range(g.n) if side[v] == 2]
    return aa, bb, sorted(xs)


def find_separator(g: Graph, strategy: str | SeparatorStrategy = "bfs-layer", h: int = 5) -> SeparatorResult:
    """Find a balanced separator of ``g``.

    Tries BFS layering from the smallest id of the largest component, then
    high-degree removal, then the neighbourhood of a minimum-degree vertex,
    and finally ``X = V``.  Splits with both sides nonempty are preferred.
    """
    strategy = as_strategy(strategy)
    if g.n < 1:
        raise GraphError("separator needs at least one vertex")
    if h < 2:
        raise GraphError(f"h must be >= 2, got {h}")
    found = _bfs_layer(g)
    if found is None or not (found[0] and found[1]):
        alt = _high_degree(g) or _min_degree_star(g)
        if alt is not None:
            found = alt
    if found is None:
        found = ([], [], list(range(g.n)))
    a, b, x = found
    if strategy.kind == "greedy-refine":
        a, b, x = _refine(g, a, b, x)
    return SeparatorResult(frozenset(a), frozenset(b), frozenset(x), len(x) <= size_bound(g.n, h))


# ----------------------------------------------------------------------------


@dataclass(frozen=True)
class SeparatorReport:
    partition: bool
    no_cross_edge: bool
    balanced: bool
    size_bound: bool
    crossing_edges: tuple[tuple[int, int], ...] = ()

    @property
    def passed(self) -> bool:
        return self.partition and self.no_cross_edge and self.balanced


def verify_separator(g: Graph, s: SeparatorResult, h: int = 5) -> SeparatorReport:
    """Check a separator; the size bound is reported but does not affect ``passed``."""
    a, b, x = set(s.a), set(s.b), set(s.x)
    everything = a | b | x
    partition = (
        not (a & b) and not (a & x) and not (b & x)
        and everything == set(range(g.n))
    )
    crossing = tuple(
        sorted((u, v) for u, v in g.edges if (u in a and v in b) or (u in b and v in a))
    )
    limit = math.ceil(2 * g.n / 3)
    balanced = len(a) <= limit and len(b) <= limit
    return SeparatorReport(
        partition=partition,
        no_cross_edge=not crossing,
        balanced=balanced,
        size_bound=len(x) <= size_bound(g.n, h),
        crossing_edges=crossing,
    )
