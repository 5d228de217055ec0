"""Executable versions of the approximation arguments.

Given a locally optimal solution ``U`` and an optimum ``U*``, the checker
divides the graph spanned by ``U ∪ U*`` (for dominating set: the graph obtained
by contracting every other vertex into a neighbour in ``U``), then verifies
piece by piece that swapping ``U`` for ``U*`` inside the piece keeps the
solution feasible and that local optimality bounds the gain of that swap.
Summing those per-piece facts gives ``gap <= 2 * boundary_sum``.
"""

from __future__ import annotations

import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .division import Division, DivisionError, DivisionStats, build_division, verify_division
from .exact import DEFAULT_CAP, exact
from .graph import Graph, GraphError, GraphSpec, check_vertex_set, contract_edges, generate, induced_subgraph
from .local_search import as_problem, is_feasible, local_search, verify_local_optimality
from .separators import SeparatorStrategy


@dataclass(frozen=True)
class ContractionPlan:
    assignment: dict[int, int]


def build_contracted_graph(g: Graph, u: Iterable[int], ustar: Iterable[int]):
    """Contract every vertex outside ``U ∪ U*`` into its smallest-id neighbour in ``U``.

    Returns ``(G~, IdMap, ContractionPlan)``; the vertices of ``G~`` are exactly
    ``U ∪ U*`` in increasing id order.
    """
    us = check_vertex_set(g, u)
    ss = check_vertex_set(g, ustar)
    if not is_feasible(g, "dominating-set", us):
        raise GraphError("U must be a dominating set to build the contracted graph")
    keep = us | ss
    assignment = {}
    for v in range(g.n):
        if v in keep:
            continue
        assignment[v] = min(w for w in g.adj[v] if w in us)
    gt, idmap = contract_edges(g, assignment)
    return gt, idmap, ContractionPlan(assignment)


@dataclass(frozen=True)
class Inequality:
    label: str
    lhs: int
    rhs: int
    relation: str  # "<=" or ">="

    @property
    def holds(self) -> bool:
        return self.lhs <= self.rhs if self.relation == "<=" else self.lhs >= self.rhs


@dataclass(frozen=True)
class PieceCheck:
    index: int
    piece: frozenset[int]
    replacement: frozenset[int]
    feasible: bool
    exchange: Inequality

    @property
    def passed(self) -> bool:
        return self.feasible and self.exchange.holds


@dataclass
class ProofReport:
    kind: str
    size_u: int
    size_ustar: int
    division: Division
    stats: DivisionStats
    division_graph: str
    division_valid: bool = True
    pieces: list[PieceCheck] = field(default_factory=list)
    chain: list[Inequality] = field(default_factory=list)

    @property
    def boundary_sum(self) -> int:
        return self.division.boundary_sum

    @property
    def gap(self) -> int:
        """Distance from the optimum, non-negative for feasible solutions."""
        return self.size_ustar - self.size_u if self.kind == "independent-set" else self.size_u - self.size_ustar

    @property
    def pieces_passed(self) -> bool:
        return all(pc.passed for pc in self.pieces)

    @property
    def chain_passed(self) -> bool:
        return all(q.holds for q in self.chain)

    @property
    def passed(self) -> bool:
        return self.division_valid and self.pieces_passed and self.chain_passed

    @property
    def implied_eps(self) -> float:
        """The ``eps`` for which ``gap <= eps * |U*|`` follows from the measured boundary."""
        if self.size_ustar == 0:
            return 0.0 if self.boundary_sum == 0 else math.inf
        return 2 * self.boundary_sum / self.size_ustar

    def failures(self) -> list[str]:
        out = [] if self.division_valid else ["division axioms violated"]
        out += [f"piece {pc.index}: replacement infeasible" for pc in self.pieces if not pc.feasible]
        out += [f"piece {pc.index}: {pc.exchange.label}" for pc in self.pieces if not pc.exchange.holds]
        out += [q.label for q in self.chain if not q.holds]
        return out


def check_theorem_chain(
    g: Graph,
    kind,
    u: Iterable[int],
    ustar: Iterable[int],
    r: int,
    strategy: str | SeparatorStrategy = "bfs-layer",
    h: int = 5,
    division_r: int | None = None,
    division_graph: str | None = None,
) -> ProofReport:
    """Divide the solution graph and check every per-piece claim and the summed chain.

    ``u`` must be ``r``-locally optimal (checked).  The division uses
    ``division_r`` (default ``r``).  ``division_graph`` picks ``"induced"``
    (``G[U∪U*]``) or ``"contracted"``; the default is contracted for dominating
    set and induced otherwise.
    """
    p = as_problem(kind)
    us = check_vertex_set(g, u)
    ss = check_vertex_set(g, ustar)
    if not is_feasible(g, p, ss):
        raise GraphError(f"U* is not feasible for {p.kind}")
    if not verify_local_optimality(g, p, us, r):
        raise GraphError(f"U is not {r}-locally optimal for {p.kind}")
    if division_graph is None:
        division_graph = "contracted" if p.kind == "dominating-set" else "induced"
    if division_graph == "contracted":
        host, idmap, _ = build_contracted_graph(g, us, ss)
    elif division_graph == "induced":
        host, idmap = induced_subgraph(g, us | ss)
    else:
        raise GraphError(f"unknown division graph {division_graph!r}")

    valid = True
    if host.n == 0:
        division, stats = Division([]), DivisionStats(division_r or r, 0, 0, 0, 0)
    else:
        local, stats = build_division(host, division_r or r, strategy, h, clique_pairs=True)
        division = Division(idmap.lift(piece) for piece in local.pieces)
        valid = verify_division(host, local).passed
    report = ProofReport(p.kind, len(us), len(ss), division, stats, division_graph, valid)

    for i, (piece, inner) in enumerate(zip(division.pieces, division.interiors)):
        if p.kind == "independent-set":
            repl = (us - piece) | (ss & inner)
            exch = Inequality("|U ∩ S| >= |U* ∩ int(S)|", len(us & piece), len(ss & inner), ">=")
        else:
            repl = (us - inner) | (ss & piece)
            exch = Inequality("|U ∩ int(S)| <= |U* ∩ S|", len(us & inner), len(ss & piece), "<=")
        report.pieces.append(PieceCheck(i, piece, repl, is_feasible(g, p, repl), exch))

    bsum = division.boundary_sum
    if p.kind == "independent-set":
        star_int = sum(len(ss & inner) for inner in division.interiors)
        u_pieces = sum(len(us & piece) for piece in division.pieces)
        report.chain = [
            Inequality("|U*| <= sum|U* ∩ int(S)| + sum|∂S|", len(ss), star_int + bsum, "<="),
            Inequality("sum|U* ∩ int(S)| <= sum|U ∩ S|", star_int, u_pieces, "<="),
            Inequality("sum|U ∩ S| <= |U| + sum|∂S|", u_pieces, len(us) + bsum, "<="),
            Inequality("|U*| <= |U| + 2 sum|∂S|", len(ss), len(us) + 2 * bsum, "<="),
        ]
    else:
        star_pieces = sum(len(ss & piece) for piece in division.pieces)
        u_int = sum(len(us & inner) for inner in division.interiors)
        report.chain = [
            Inequality("|U*| >= sum|U* ∩ S| - sum|∂S|", len(ss), star_pieces - bsum, ">="),
            Inequality("sum|U* ∩ S| >= sum|U ∩ int(S)|", star_pieces, u_int, ">="),
            Inequality("sum|U ∩ int(S)| >= |U| - sum|∂S|", u_int, len(us) - bsum, ">="),
            Inequality("|U*| >= |U| - 2 sum|∂S|", len(ss), len(us) - 2 * bsum, ">="),
        ]
    return report


def cover_ratio_bound(eps) -> tuple[Fraction, Fraction]:
    """``(1 / (1 - eps/2), 1 + eps)``: a gap of ``eps/2 * |U|`` gives ratio at most the first, which is at most the second."""
    e = Fraction(str(eps)) if isinstance(eps, float) else Fraction(eps)
    if not 0 < e < 1:
        raise GraphError(f"eps must lie in (0, 1), got {eps}")
    return 1 / (1 - e / 2), 1 + e


# ----------------------------------------------------------------------------


@dataclass
class InstanceResult:
    spec: GraphSpec
    n: int
    m: int
    size: int
    optimum: int | None
    iterations: int
    seconds: float
    feasible: bool
    boundary_sum: int | None = None
    chain_passed: bool | None = None
    note: str = ""

    @property
    def ratio(self) -> float | None:
        """``|U| / |U*|``; at most 1 when maximising, at least 1 when minimising."""
        if self.optimum is None:
            return None
        if self.optimum == 0:
            return 1.0 if self.size == 0 else math.inf
        return self.size / self.optimum


@dataclass
class ApproximationReport:
    kind: str
    r: int
    instances: list[InstanceResult]

    def ratios(self) -> list[float]:
        return [x.ratio for x in self.instances if x.ratio is not None]

    @property
    def worst_ratio(self) -> float | None:
        rs = self.ratios()
        if not rs:
            return None
        return min(rs) if self.kind == "independent-set" else max(rs)

    @property
    def mean_ratio(self) -> float | None:
        rs = self.ratios()
        return sum(rs) / len(rs) if rs else None

    def to_text(self) -> str:
        lines = [f"# problem={self.kind} r={self.r} instances={len(self.instances)}"]
        for i, x in enumerate(self.instances):
            lines.append(f"[instance {i}] {x.spec.label()}")
            lines.append(f"  n={x.n} m={x.m} size={x.size} optimum={x.optimum} ratio={_fmt(x.ratio)}")
            lines.append(f"  iterations={x.iterations} seconds={x.seconds:.4f} feasible={x.feasible}")
            if x.boundary_sum is not None:
                lines.append(f"  boundary_sum={x.boundary_sum} chain_passed={x.chain_passed}")
            if x.note:
                lines.append(f"  note: {x.note}")
        lines.append(f"# worst_ratio={_fmt(self.worst_ratio)} mean_ratio={_fmt(self.mean_ratio)}")
        lines.append("")
        lines.append(self.to_table())
        return "\n".join(lines)

    def to_table(self) -> str:
        head = ["index", "instance", "n", "m", "size", "optimum", "ratio", "iterations", "seconds", "boundary_sum"]
        rows = ["\t".join(head)]
        for i, x in enumerate(self.instances):
            rows.append("\t".join(map(str, [
                i, x.spec.label(), x.n, x.m, x.size, _fmt(x.optimum), _fmt(x.ratio),
                x.iterations, f"{x.seconds:.4f}", _fmt(x.boundary_sum),
            ])))
        return "\n".join(rows) + "\n"


def _fmt(v) -> str:
    if v is None:
        return "NA"
    if isinstance(v, float):
        return f"{v:.4f}"
    return str(v)


def _run_instance(spec: GraphSpec, kind: str, r: int, strategy, h: int, cap: int) -> InstanceResult:
    g = generate(spec)
    t0 = time.perf_counter()
    sol, trace = local_search(g, kind, r)
    dt = time.perf_counter() - t0
    res = InstanceResult(spec, g.n, g.m, len(sol), None, trace.iterations, dt, is_feasible(g, kind, sol))
    if g.n <= cap:
        opt = exact(g, kind, cap)
        res.optimum = opt.optimum
        try:
            rep = check_theorem_chain(g, kind, sol, opt.witness, r, strategy, h)
        except DivisionError as exc:
            res.note = f"no division at r={r}: {exc}"
        else:
            res.boundary_sum = rep.boundary_sum
            res.chain_passed = rep.passed
    return res


def approximation_report(
    corpus: Sequence[GraphSpec],
    kind,
    r: int,
    strategy: str | SeparatorStrategy = "bfs-layer",
    h: int = 5,
    cap: int = DEFAULT_CAP,
    threads: int = 1,
) -> ApproximationReport:
    """Run local search on each instance and compare with the exact optimum where affordable.

    Instances above ``cap`` report the local optimum only.  With ``threads > 1``
    instances run in worker processes; results keep corpus order.
    """
    kind = as_problem(kind).kind
    jobs = [(spec, kind, r, strategy, h, cap) for spec in corpus]
    if threads > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            out = list(pool.map(_run_instance, *zip(*jobs)))
    else:
        out = [_run_instance(*job) for job in jobs]
    return ApproximationReport(kind, r, out)
