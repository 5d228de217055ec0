"""Simple undirected graphs over dense integer ids, plus test-instance generators.

Vertex ids are always ``0..n-1``.  Operations that re-index (induced
subgraphs, contraction) return an :class:`IdMap` relating new and original ids.
Vertex sets are plain ``frozenset[int]``; the search code converts them to
integer bitmasks internally.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

VertexSet = frozenset


class GraphError(ValueError):
    """Invalid graph input or operation arguments."""


class ParseError(GraphError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class Graph:
    """Immutable simple undirected graph on vertices ``0..n-1``."""

    __slots__ = ("n", "edges", "adj", "nbr_mask")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise GraphError(f"vertex count must be non-negative, got {n}")
        canon = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            e = (u, v) if u < v else (v, u)
            if e in canon:
                raise GraphError(f"duplicate edge {e}")
            canon.add(e)
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in canon:
            adj[u].append(v)
            adj[v].append(u)
        self.n = n
        self.edges = frozenset(canon)
        self.adj = tuple(tuple(sorted(a)) for a in adj)
        masks = []
        for a in self.adj:
            m = 0
            for w in a:
                m |= 1 << w
            masks.append(m)
        self.nbr_mask = tuple(masks)

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.n)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.nbr_mask[u] >> v & 1)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def check_vertex_set(g: Graph, s: Iterable[int]) -> frozenset[int]:
    """Return ``s`` as a frozenset, raising if any member is not a vertex of ``g``."""
    fs = frozenset(int(v) for v in s)
    bad = [v for v in fs if not 0 <= v < g.n]
    if bad:
        raise GraphError(f"vertex ids out of range for n={g.n}: {sorted(bad)}")
    return fs


def to_mask(s: Iterable[int]) -> int:
    m = 0
    for v in s:
        m |= 1 << v
    return m


def from_mask(mask: int) -> frozenset[int]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return frozenset(out)


# ----------------------------------------------------------------------------
# edge-list text format


def parse_graph(text: str | bytes) -> Graph:
    """Parse the edge-list format.

    Optional header ``p <n> <m>``, then one ``u v`` pair per line.  Lines
    starting with ``#`` and blank lines are skipped.  The vertex count is the
    larger of the declared count and ``max id + 1``; an id beyond a declared
    count is still an error.
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    declared: int | None = None
    seen: set[tuple[int, int]] = set()
    edges: list[tuple[int, int]] = []
    top = -1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if declared is not None or edges:
                raise ParseError(lineno, "header must come first and appear once")
            if len(parts) != 3:
                raise ParseError(lineno, f"malformed header {line!r}")
            try:
                declared, _ = int(parts[1]), int(parts[2])
            except ValueError:
                raise ParseError(lineno, f"malformed header {line!r}") from None
            if declared < 0:
                raise ParseError(lineno, "negative vertex count")
            continue
        if len(parts) != 2:
            raise ParseError(lineno, f"expected two vertex ids, got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(lineno, f"non-integer vertex id in {line!r}") from None
        if u < 0 or v < 0:
            raise ParseError(lineno, "negative vertex id")
        if u == v:
            raise ParseError(lineno, f"self-loop at vertex {u}")
        if declared is not None and max(u, v) >= declared:
            raise ParseError(lineno, f"vertex id {max(u, v)} exceeds declared count {declared}")
        e = (min(u, v), max(u, v))
        if e in seen:
            raise ParseError(lineno, f"duplicate edge {e}")
        seen.add(e)
        edges.append(e)
        top = max(top, e[1])
    n = max(top + 1, declared or 0)
    return Graph(n, edges)


def serialize_graph(g: Graph) -> str:
    lines = [f"p {g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"


def read_graph(path) -> Graph:
    with open(path, "rb") as f:
        return parse_graph(f.read())


def write_graph(g: Graph, path) -> None:
    with open(path, "w") as f:
        f.write(serialize_graph(g))


# ----------------------------------------------------------------------------
# subgraphs and contraction


@dataclass(frozen=True)
class IdMap:
    """Correspondence between a derived graph's ids and the original ids."""

    to_original: tuple[int, ...]
    to_new: Mapping[int, int] = field(repr=False)

    @classmethod
    def from_originals(cls, originals: Iterable[int]) -> IdMap:
        orig = tuple(originals)
        return cls(orig, {o: i for i, o in enumerate(orig)})

    def lift(self, s: Iterable[int]) -> frozenset[int]:
        """Map new ids back to original ids."""
        return frozenset(self.to_original[v] for v in s)

    def project(self, s: Iterable[int]) -> frozenset[int]:
        """Map original ids to new ids; ids without an image are dropped."""
        return frozenset(self.to_new[v] for v in s if v in self.to_new)


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, IdMap]:
    """``G[s]`` re-indexed in increasing order of original id."""
    members = sorted(check_vertex_set(g, s))
    idmap = IdMap.from_originals(members)
    pos = idmap.to_new
    edges = []
    for u in members:
        iu = pos[u]
        for w in g.adj[u]:
            if w > u and w in pos:
                edges.append((iu, pos[w]))
    return Graph(len(members), edges), idmap


def contract_edges(g: Graph, assignment: Mapping[int, int]) -> tuple[Graph, IdMap]:
    """Contract every ``c`` in ``assignment`` into its survivor ``assignment[c]``.

    Each contracted vertex merges into its survivor, so an edge between two
    contracted vertices becomes an edge between their survivors.  Parallel
    edges are merged and self-loops dropped.
    """
    for c, s in assignment.items():
        if not (0 <= c < g.n and 0 <= s < g.n):
            raise GraphError(f"assignment {c}->{s} out of range")
        if not g.has_edge(c, s):
            raise GraphError(f"assignment {c}->{s} is not an edge")
        if s in assignment:
            raise GraphError(f"survivor {s} is itself contracted")
    survivors = [v for v in range(g.n) if v not in assignment]
    idmap = IdMap.from_originals(survivors)
    image = {v: idmap.to_new[assignment.get(v, v)] for v in range(g.n)}
    edges = set()
    for u, v in g.edges:
        a, b = image[u], image[v]
        if a != b:
            edges.add((a, b) if a < b else (b, a))
    return Graph(len(survivors), edges), idmap


# ----------------------------------------------------------------------------
# generators

FAMILIES = ("path", "cycle", "grid", "subgrid-random", "complete", "star")

_MASK64 = (1 << 64) - 1


def splitmix64(x: int) -> int:
    x = (x + 0x9E3779B97F4A7C15) & _MASK64
    z = x
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


class XorShift64Star:
    """xorshift64* (Vigna 2016) seeded through one splitmix64 step.

    Kept self-contained so generated corpora are bit-identical across
    implementations: ``x ^= x >> 12; x ^= x << 25; x ^= x >> 27`` then output
    ``x * 0x2545F4914F6CDD1D mod 2**64``; floats take the top 53 bits.
    """

    def __init__(self, seed: int):
        self.state = splitmix64(seed & _MASK64) or 1

    def next_u64(self) -> int:
        x = self.state
        x ^= x >> 12
        x ^= (x << 25) & _MASK64
        x ^= x >> 27
        self.state = x
        return (x * 0x2545F4914F6CDD1D) & _MASK64

    def random(self) -> float:
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))


@dataclass(frozen=True)
class GraphSpec:
    """Recipe for a generated graph.

    ``size`` is the vertex count for path/cycle/complete and the leaf count
    for star; ``rows``/``cols`` apply to grid and subgrid-random.
    """

    family: str
    size: int = 0
    rows: int = 0
    cols: int = 0
    p: float = 0.0
    seed: int = 0

    def validate(self) -> None:
        if self.family not in FAMILIES:
            raise GraphError(f"unknown family {self.family!r}; expected one of {FAMILIES}")
        if self.family in ("grid", "subgrid-random"):
            if self.rows < 1 or self.cols < 1:
                raise GraphError("grid dimensions must be >= 1")
        elif self.family == "cycle":
            if self.size < 3:
                raise GraphError("cycle length must be >= 3")
        elif self.size < 1:
            raise GraphError(f"{self.family} size must be >= 1")
        if not 0.0 <= self.p <= 1.0:
            raise GraphError(f"deletion probability must be in [0, 1], got {self.p}")

    def label(self) -> str:
        if self.family == "grid":
            return f"grid {self.rows}x{self.cols}"
        if self.family == "subgrid-random":
            return f"subgrid-random {self.rows}x{self.cols} p={self.p:g} seed={self.seed}"
        return f"{self.family} {self.size}"


def grid_edges(rows: int, cols: int) -> list[tuple[int, int]]:
    """Grid edges in row-major order: for each vertex, right edge then down edge."""
    out = []
    for i in range(rows):
        for j in range(cols):
            v = i * cols + j
            if j + 1 < cols:
                out.append((v, v + 1))
            if i + 1 < rows:
                out.append((v, v + cols))
    return out


def generate(spec: GraphSpec) -> Graph:
    spec.validate()
    f = spec.family
    if f == "path":
        return Graph(spec.size, [(i, i + 1) for i in range(spec.size - 1)])
    if f == "cycle":
        k = spec.size
        return Graph(k, [(i, (i + 1) % k) for i in range(k)])
    if f == "complete":
        k = spec.size
        return Graph(k, [(i, j) for i in range(k) for j in range(i + 1, k)])
    if f == "star":
        return Graph(spec.size + 1, [(0, i) for i in range(1, spec.size + 1)])
    edges = grid_edges(spec.rows, spec.cols)
    if f == "subgrid-random":
        rng = XorShift64Star(spec.seed)
        edges = [e for e in edges if not rng.random() < spec.p]
    return Graph(spec.rows * spec.cols, edges)


def parse_spec_line(line: str) -> GraphSpec:
    """Parse ``family key=value ...`` (e.g. ``subgrid-random rows=4 cols=5 p=0.2 seed=3``)."""
    parts = line.split()
    if not parts:
        raise GraphError("empty graph spec")
    kw: dict = {}
    for tok in parts[1:]:
        key, sep, val = tok.partition("=")
        if not sep or key not in ("size", "rows", "cols", "p", "seed"):
            raise GraphError(f"bad spec token {tok!r}")
        kw[key] = float(val) if key == "p" else int(val)
    spec = GraphSpec(parts[0], **kw)
    spec.validate()
    return spec


def format_spec_line(spec: GraphSpec) -> str:
    if spec.family in ("grid", "subgrid-random"):
        s = f"{spec.family} rows={spec.rows} cols={spec.cols}"
        if spec.family == "subgrid-random":
            s += f" p={spec.p!r} seed={spec.seed}"
        return s
    return f"{spec.family} size={spec.size}"
