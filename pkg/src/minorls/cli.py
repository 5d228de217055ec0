"""Command-line entry point: ``minorls <subcommand> ...``."""

from __future__ import annotations

import argparse
import json
import sys

from . import analysis, division, graph
from .local_search import as_problem, eps_to_r, is_feasible, local_search, verify_local_optimality
from .exact import DEFAULT_CAP, exact
from .separators import STRATEGIES

PROBLEMS = ("is", "vc", "ds")


def _emit(text: str, path: str | None) -> None:
    if path:
        with open(path, "w") as f:
            f.write(text)
    else:
        sys.stdout.write(text)


def _read_text(path: str) -> str:
    with open(path) as f:
        return f.read()


def read_solution(path: str) -> frozenset[int]:
    ids = []
    for raw in _read_text(path).splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            ids.extend(int(t) for t in line.split())
        except ValueError:
            raise graph.GraphError(f"{path}: non-integer vertex id in {line!r}") from None
    return frozenset(ids)


def format_solution(kind: str, u, header: dict) -> str:
    head = " ".join(f"{k}={v}" for k, v in header.items())
    return f"# {head}\n# size: {len(u)}\n" + " ".join(map(str, sorted(u))) + "\n"


# ----------------------------------------------------------------------------


def cmd_gen(args) -> int:
    spec = graph.GraphSpec(args.family, size=args.size, rows=args.rows, cols=args.cols, p=args.p, seed=args.seed)
    g = graph.generate(spec)
    line = graph.format_spec_line(spec)
    if "seed=" not in line:
        line += f" seed={args.seed}"
    _emit(f"# {line}\n" + graph.serialize_graph(g), args.output)
    return 0


def _radius(args) -> int:
    if args.r is not None and args.eps is not None:
        raise graph.GraphError("give either --r or --eps, not both")
    if args.r is None and args.eps is None:
        raise graph.GraphError("one of --r or --eps is required")
    if args.eps is not None:
        return eps_to_r(args.eps, args.h, args.problem)
    return args.r


def cmd_solve(args) -> int:
    g = graph.read_graph(args.graph)
    r = _radius(args)
    u, trace = local_search(g, args.problem, r)
    kind = as_problem(args.problem).kind
    if args.trace:
        steps = [
            {"removed": sorted(s.removed), "added": sorted(s.added), "objective": s.objective}
            for s in trace.steps
        ]
        with open(args.trace, "w") as f:
            json.dump({"problem": kind, "r": r, "iterations": trace.iterations,
                       "termination": trace.termination, "steps": steps}, f, indent=1)
    if args.format == "json":
        _emit(json.dumps({"problem": kind, "r": r, "size": len(u), "solution": sorted(u),
                          "iterations": trace.iterations}) + "\n", args.output)
    else:
        _emit(format_solution(kind, u, {"problem": kind, "r": r, "iterations": trace.iterations}), args.output)
    return 0


def cmd_exact(args) -> int:
    g = graph.read_graph(args.graph)
    res = exact(g, args.problem, args.cap)
    kind = as_problem(args.problem).kind
    _emit(format_solution(kind, res.witness, {"problem": kind, "exact": True, "explored": res.explored}), args.output)
    return 0


def cmd_divide(args) -> int:
    g = graph.read_graph(args.graph)
    d, stats = division.build_division(g, args.r, args.strategy, args.h)
    lemma = division.check_lemma_bounds(stats, g.n, args.h)
    head = f"strategy: {args.strategy}\nh: {args.h}\n" + division.format_stats(stats)
    for c in lemma.checks:
        head += f"{c.name}: {c.lhs:g} vs {c.rhs:g} holds={c.holds} certified={c.certified} in_precondition={c.in_precondition}\n"
    text = "".join(f"# {line}\n" for line in head.splitlines()) + division.format_division(d)
    _emit(text, args.output)
    return 0


def cmd_verify(args) -> int:
    g = graph.read_graph(args.graph)
    if args.division:
        if args.solution or args.problem:
            raise graph.GraphError("--division cannot be combined with --problem/--solution")
        d = division.parse_division(_read_text(args.division))
        rep = division.verify_division(g, d)
        print(f"vertex_cover: {rep.vertex_cover}")
        print(f"edge_cover: {rep.edge_cover}")
        print(f"interior_closure: {rep.interior_closure}")
        print(f"pieces: {d.k} boundary_sum: {d.boundary_sum}")
        print(f"passed: {rep.passed}")
        return 0 if rep.passed else 1
    if not (args.problem and args.solution and args.r):
        raise graph.GraphError("verify needs --division, or --problem with --solution and --r")
    u = read_solution(args.solution)
    feasible = is_feasible(g, args.problem, u)
    print(f"feasible: {feasible}")
    if not feasible:
        return 1
    optimal = verify_local_optimality(g, args.problem, u, args.r)
    print(f"locally_optimal(r={args.r}): {optimal}")
    return 0 if optimal else 1


def cmd_analyze(args) -> int:
    specs = [graph.parse_spec_line(line) for line in _read_text(args.corpus).splitlines()
             if line.strip() and not line.lstrip().startswith("#")]
    rep = analysis.approximation_report(specs, args.problem, args.r, args.strategy, args.h, threads=args.threads)
    _emit(rep.to_text(), args.output)
    return 0


# ----------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="minorls", description="Local search on minor-free graphs.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a graph")
    p.add_argument("--family", required=True, choices=graph.FAMILIES)
    p.add_argument("--size", type=int, default=0, help="vertices (path/cycle/complete) or leaves (star)")
    p.add_argument("--rows", type=int, default=0)
    p.add_argument("--cols", type=int, default=0)
    p.add_argument("--p", type=float, default=0.0, help="edge deletion probability (subgrid-random)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("solve", help="run local search")
    p.add_argument("--problem", required=True, choices=PROBLEMS)
    p.add_argument("--graph", required=True)
    p.add_argument("--r", type=int)
    p.add_argument("--eps", type=float)
    p.add_argument("--h", type=int, default=5)
    p.add_argument("--trace")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("exact", help="brute-force optimum")
    p.add_argument("--problem", required=True, choices=PROBLEMS)
    p.add_argument("--graph", required=True)
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("divide", help="build a division")
    p.add_argument("--graph", required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--h", type=int, default=5)
    p.add_argument("--strategy", choices=STRATEGIES, default="bfs-layer")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_divide)

    p = sub.add_parser("verify", help="check a division or a local optimum")
    p.add_argument("--graph", required=True)
    p.add_argument("--division")
    p.add_argument("--problem", choices=PROBLEMS)
    p.add_argument("--solution")
    p.add_argument("--r", type=int)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("analyze", help="approximation report over a corpus")
    p.add_argument("--corpus", required=True, help="file with one graph spec per line")
    p.add_argument("--problem", required=True, choices=PROBLEMS)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--h", type=int, default=5)
    p.add_argument("--strategy", choices=STRATEGIES, default="bfs-layer")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_analyze)
    return ap


def run(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (graph.GraphError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
