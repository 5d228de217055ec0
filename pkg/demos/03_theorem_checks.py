"""
Checking the approximation argument on instances
================================================

For a local optimum U and an optimum U*, divide the graph spanned by both,
swap U for U* inside each piece, and confirm the counting chain that bounds
the gap by twice the boundary.
"""

from minorls import GraphSpec, check_theorem_chain, exact, generate, local_search
from minorls.analysis import approximation_report

g = generate(GraphSpec("subgrid-random", rows=3, cols=4, p=0.3, seed=61))
for kind in ("is", "vc", "ds"):
    u, _ = local_search(g, kind, 2)
    ustar = exact(g, kind).witness
    rep = check_theorem_chain(g, kind, u, ustar, r=2)
    print(f"{rep.kind}: |U|={rep.size_u} |U*|={rep.size_ustar} boundary={rep.boundary_sum} passed={rep.passed}")
    for q in rep.chain:
        print(f"    {q.label:36s} {q.lhs:3d} {q.relation} {q.rhs:3d}")

# The same comparison over a corpus, as a tab-separated table.
corpus = [GraphSpec("subgrid-random", rows=4, cols=5, p=0.25, seed=s) for s in range(8)]
print(approximation_report(corpus, "vc", r=2).to_table())
