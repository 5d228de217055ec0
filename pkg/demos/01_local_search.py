"""
Swap local search on small graphs
=================================

Run the three searches, watch their traces, and compare with the exact optimum.
"""

from minorls import GraphSpec, exact, generate, local_search, verify_local_optimality

# A 4x6 grid with a quarter of its edges deleted; the seed fixes the instance.
g = generate(GraphSpec("subgrid-random", rows=4, cols=6, p=0.25, seed=3))
print(f"graph: n={g.n} m={g.m}")

# Larger r means a larger swap neighbourhood, so local optima get closer to the optimum.
for kind in ("is", "vc", "ds"):
    best = exact(g, kind).optimum
    for r in (1, 2, 3):
        u, trace = local_search(g, kind, r)
        assert verify_local_optimality(g, kind, u, r)
        print(f"{kind} r={r}: |U|={len(u):2d} optimum={best:2d} steps={trace.iterations}")

# A trace records every accepted swap.  Dominating set starts from all of V
# and each step trades a set of vertices for a strictly smaller one.
u, trace = local_search(g, "ds", 2)
for step in trace.steps[:5]:
    print(f"  drop {sorted(step.removed)} add {sorted(step.added)} -> {step.objective}")

# The canonical order matters: on a star, r = 1 removes the centre first and
# then needs every leaf, while r = 2 can trade two leaves for the centre.
star = generate(GraphSpec("star", size=5))
print("star, r=1:", sorted(local_search(star, "ds", 1)[0]))
print("star, r=2:", sorted(local_search(star, "ds", 2)[0]))
