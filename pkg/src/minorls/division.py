"""Divisions of a graph into small pieces with few boundary vertices.

A division is a list of vertex sets (pieces) such that every vertex and edge
lies inside some piece and every interior vertex of a piece has all its
neighbours in that piece.  :func:`build_division` produces one by recursive
separator splitting and records the accounting needed to compare the result
with the closed-form bounds.
"""

from __future__ import annotations

import heapq
import math
from collections import Counter
from dataclasses import dataclass, field

from .graph import Graph, GraphError, check_vertex_set, induced_subgraph
from .separators import SeparatorStrategy, as_strategy, find_separator


class Division:
    """Pieces over one graph; boundaries and interiors are derived."""

    def __init__(self, pieces):
        canon = {frozenset(p) for p in pieces}
        self.pieces: tuple[frozenset[int], ...] = tuple(
            sorted(canon, key=lambda p: (min(p) if p else -1, len(p), sorted(p)))
        )
        mult = Counter(v for p in self.pieces for v in p)
        self.multiplicity = mult
        self.boundaries = tuple(frozenset(v for v in p if mult[v] > 1) for p in self.pieces)
        self.interiors = tuple(p - b for p, b in zip(self.pieces, self.boundaries))

    @property
    def k(self) -> int:
        return len(self.pieces)

    @property
    def boundary_sum(self) -> int:
        return sum(len(b) for b in self.boundaries)

    @property
    def total_size(self) -> int:
        return sum(len(p) for p in self.pieces)

    @property
    def max_piece(self) -> int:
        return max((len(p) for p in self.pieces), default=0)

    def __len__(self) -> int:
        return len(self.pieces)

    def __repr__(self) -> str:
        return f"Division(k={self.k}, max_piece={self.max_piece}, boundary_sum={self.boundary_sum})"


@dataclass(frozen=True)
class SplitRecord:
    m: int
    separator: int
    left: int
    right: int
    size_certified: bool

    @property
    def balanced(self) -> bool:
        """Both parts hold at least a third of the piece."""
        return 3 * self.left >= self.m and 3 * self.right >= self.m


@dataclass
class DivisionStats:
    r: int
    n: int
    max_piece: int
    boundary_sum: int
    beta_observed: int
    separator_sizes: list[int] = field(default_factory=list)
    splits: list[SplitRecord] = field(default_factory=list)
    clique_splits: list[int] = field(default_factory=list)

    @property
    def all_size_certified(self) -> bool:
        return all(s.size_certified for s in self.splits)

    @property
    def all_balanced(self) -> bool:
        return all(s.balanced for s in self.splits)


class DivisionError(GraphError):
    """A separator failed to shrink a piece; carries the partial state."""

    def __init__(self, message: str, piece: frozenset[int], pieces: list[frozenset[int]], stats: DivisionStats):
        super().__init__(message)
        self.piece = piece
        self.pieces = pieces
        self.stats = stats


def build_division(
    g: Graph,
    r: int,
    strategy: str | SeparatorStrategy = "bfs-layer",
    h: int = 5,
    clique_pairs: bool = False,
):
    """Split pieces larger than ``r`` with separators until none remain.

    Starting from the single piece ``V``, the largest oversized piece
    (ties: smallest contained id) is replaced by ``A∪X`` and ``B∪X``.

    Returns ``(Division, DivisionStats)``.  Raises :class:`DivisionError` when a
    split does not produce two strictly smaller pieces.  A clique can never be
    split that way; with ``clique_pairs`` (and ``r >= 2``) an oversized clique
    piece is instead replaced by its edges, which keeps the division valid
    because every vertex of the clique then lies in at least two pieces.
    """
    if r < 1:
        raise GraphError(f"r must be >= 1, got {r}")
    if g.n < 1:
        raise GraphError("cannot divide an empty graph")
    strategy = as_strategy(strategy)
    done: list[frozenset[int]] = []
    splits: list[SplitRecord] = []
    clique_splits: list[int] = []
    heap: list[tuple[int, tuple[int, ...], frozenset[int]]] = []

    def push(p: frozenset[int]):
        if len(p) > r:
            heapq.heappush(heap, (-len(p), tuple(sorted(p)), p))
        else:
            done.append(p)

    push(frozenset(range(g.n)))
    while heap:
        _, _, piece = heapq.heappop(heap)
        sub, idmap = induced_subgraph(g, piece)
        sep = find_separator(sub, strategy, h)
        left = idmap.lift(sep.a | sep.x)
        right = idmap.lift(sep.b | sep.x)
        record = SplitRecord(len(piece), len(sep.x), len(left), len(right), sep.size_certified)
        if not (len(left) < len(piece) and len(right) < len(piece)):
            if clique_pairs and r >= 2 and 2 * sub.m == sub.n * (sub.n - 1):
                members = sorted(piece)
                done.extend(frozenset((a, b)) for i, a in enumerate(members) for b in members[i + 1:])
                clique_splits.append(len(piece))
                continue
            partial = done + [p for _, _, p in heap] + [piece]
            raise DivisionError(
                f"separator did not shrink a piece of {len(piece)} vertices "
                f"(|A|={len(sep.a)}, |B|={len(sep.b)}, |X|={len(sep.x)})",
                piece, partial, _stats(g, r, Division(partial), splits + [record]),
            )
        splits.append(record)
        push(left)
        push(right)
    division = Division(done)
    stats = _stats(g, r, division, splits)
    stats.clique_splits = clique_splits
    return division, stats


def _stats(g: Graph, r: int, d: Division, splits: list[SplitRecord]) -> DivisionStats:
    return DivisionStats(
        r=r,
        n=g.n,
        max_piece=d.max_piece,
        boundary_sum=d.boundary_sum,
        beta_observed=d.total_size - g.n,
        separator_sizes=[s.separator for s in splits],
        splits=list(splits),
    )


@dataclass(frozen=True)
class DivisionReport:
    vertex_cover: bool
    edge_cover: bool
    interior_closure: bool
    derived_consistent: bool
    uncovered_vertices: tuple[int, ...] = ()
    uncovered_edges: tuple[tuple[int, int], ...] = ()
    leaking_interior: tuple[tuple[int, int], ...] = ()  # (piece index, vertex)

    @property
    def passed(self) -> bool:
        return self.vertex_cover and self.edge_cover and self.interior_closure and self.derived_consistent


def verify_division(g: Graph, d: Division) -> DivisionReport:
    pieces = [check_vertex_set(g, p) for p in d.pieces]
    where: dict[int, list[int]] = {}
    for i, p in enumerate(pieces):
        for v in p:
            where.setdefault(v, []).append(i)
    uncovered_v = tuple(v for v in range(g.n) if v not in where)
    uncovered_e = tuple(
        (u, v) for u, v in g.sorted_edges()
        if not any(v in pieces[i] for i in where.get(u, ()))
    )
    leaking = []
    derived_ok = True
    for i, p in enumerate(pieces):
        # v lies in some other piece iff it appears in at least two pieces
        boundary = frozenset(v for v in p if len(where[v]) > 1)
        interior = p - boundary
        if boundary != d.boundaries[i] or interior != d.interiors[i]:
            derived_ok = False
        for v in sorted(interior):
            if any(w not in p for w in g.adj[v]):
                leaking.append((i, v))
    return DivisionReport(
        vertex_cover=not uncovered_v,
        edge_cover=not uncovered_e,
        interior_closure=not leaking,
        derived_consistent=derived_ok,
        uncovered_vertices=uncovered_v,
        uncovered_edges=uncovered_e,
        leaking_interior=tuple(leaking),
    )


def beta_bound(m: int, r: int, h: int) -> float:
    """Closed-form upper bound on the boundary duplication of an ``m``-vertex piece."""
    if r < 1 or h < 2 or m < 0:
        raise GraphError("beta_bound needs r >= 1, h >= 2, m >= 0")
    if 3 * m < r:
        return 0.0
    c = 10 * h ** 1.5
    return c * m / math.sqrt(r / 3) - c * math.sqrt(m)


def lemma_boundary_bound(n: int, r: int, h: int) -> float:
    return 36 * h ** 1.5 * n / math.sqrt(r)


@dataclass(frozen=True)
class BoundCheck:
    name: str
    lhs: float
    rhs: float
    holds: bool
    certified: bool
    in_precondition: bool

    @property
    def strict(self) -> bool:
        """Failure here would contradict a proved statement."""
        return self.certified and self.in_precondition


@dataclass(frozen=True)
class LemmaReport:
    boundary_bound: BoundCheck
    counting: BoundCheck
    beta: BoundCheck

    @property
    def checks(self) -> tuple[BoundCheck, ...]:
        return (self.boundary_bound, self.counting, self.beta)


def check_lemma_bounds(stats: DivisionStats, n: int, h: int) -> LemmaReport:
    """Compare a built division against the quantitative bounds.

    The counting identity ``sum|∂S_i| <= 2 beta`` holds for every division and
    is always in force.  The other two depend on separator quality and on
    ``36 h^3 <= r <= n``; their flags say whether those hypotheses held.
    """
    certified = stats.all_size_certified
    in_range = 36 * h ** 3 <= stats.r <= n
    bsum, beta = stats.boundary_sum, stats.beta_observed
    b1 = lemma_boundary_bound(n, stats.r, h)
    b3 = beta_bound(n, stats.r, h)
    return LemmaReport(
        boundary_bound=BoundCheck("boundary_sum <= 36 h^1.5 n / sqrt(r)", bsum, b1, bsum <= b1, certified, in_range),
        counting=BoundCheck("boundary_sum <= 2 beta", bsum, 2 * beta, bsum <= 2 * beta, True, True),
        beta=BoundCheck("beta <= beta_bound(n, r, h)", beta, b3, beta <= b3, certified and stats.all_balanced, in_range),
    )


def format_division(d: Division) -> str:
    return "".join(" ".join(map(str, sorted(p))) + "\n" for p in d.pieces)


def parse_division(text: str) -> Division:
    pieces = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            pieces.append(frozenset(int(t) for t in line.split()))
        except ValueError:
            raise GraphError(f"line {lineno}: non-integer vertex id in {line!r}") from None
    return Division(pieces)


def format_stats(stats: DivisionStats) -> str:
    rows = [
        ("r", stats.r),
        ("n", stats.n),
        ("max_piece", stats.max_piece),
        ("boundary_sum", stats.boundary_sum),
        ("beta_observed", stats.beta_observed),
        ("splits", len(stats.splits)),
        ("max_separator", max(stats.separator_sizes, default=0)),
        ("all_size_certified", stats.all_size_certified),
        ("all_balanced", stats.all_balanced),
    ]
    return "".join(f"{k}: {v}\n" for k, v in rows)
