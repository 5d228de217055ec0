"""
Separators and divisions
========================

Split a grid with a balanced separator, then recurse into an r-division and
compare the boundary it produces with the closed-form bounds.
"""

import math

from minorls import GraphSpec, build_division, check_lemma_bounds, find_separator, generate, verify_separator
from minorls.division import beta_bound, lemma_boundary_bound

g = generate(GraphSpec("grid", rows=16, cols=16))

# One separator: a BFS layer of the grid, a single diagonal.
s = find_separator(g, "bfs-layer", h=5)
print(f"|A|={len(s.a)} |B|={len(s.b)} |X|={len(s.x)} bound={5 ** 1.5 * math.sqrt(g.n):.1f}")
print("valid:", verify_separator(g, s, 5).passed)

# Recursing until each piece has at most r vertices.  Vertices of separators
# land in several pieces; beta counts the duplication.
for r in (16, 64, 144):
    d, stats = build_division(g, r)
    lemma = check_lemma_bounds(stats, g.n, 5)
    print(
        f"r={r:3d}: pieces={d.k:3d} boundary={d.boundary_sum:4d} beta={stats.beta_observed:4d} "
        f"beta_bound={beta_bound(g.n, r, 5):8.1f} lemma={lemma_boundary_bound(g.n, r, 5):8.1f}"
    )

# The greedy-refine strategy starts from the BFS layer and moves separator
# vertices out where it can, so its separators are never larger.
noisy = generate(GraphSpec("subgrid-random", rows=20, cols=20, p=0.3, seed=8))
for strategy in ("bfs-layer", "greedy-refine"):
    d, stats = build_division(noisy, 40, strategy)
    print(f"{strategy:13s}: separator total={sum(stats.separator_sizes)} boundary={d.boundary_sum}")
