"""
Why dominating set needs the contracted graph
=============================================

On the path 0-1-2-3-4 both {0, 3} and {1, 4} are minimum dominating sets, and
vertex 2 lies in neither.  Dividing the graph induced on their union loses the
edges through 2, and swapping inside one piece leaves 2 undominated.
Contracting 2 into its neighbour 3 first keeps the edge 1-3, and the division
of that graph behaves.
"""

from minorls import GraphSpec, build_contracted_graph, check_theorem_chain, generate

g = generate(GraphSpec("path", size=5))
u, ustar = {0, 3}, {1, 4}

gt, idmap, plan = build_contracted_graph(g, u, ustar)
print("contractions:", plan.assignment)
print("contracted edges:", sorted(tuple(idmap.to_original[v] for v in e) for e in gt.sorted_edges()))

for variant in ("induced", "contracted"):
    rep = check_theorem_chain(g, "ds", u, ustar, r=2, division_graph=variant)
    print(f"\n{variant}: pieces {[sorted(p) for p in rep.division.pieces]}")
    for pc in rep.pieces:
        print(f"  piece {sorted(pc.piece)} -> replacement {sorted(pc.replacement)} dominating={pc.feasible}")
    print("  passed:", rep.passed)
