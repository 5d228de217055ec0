"""Regenerate connected_n8.g6: every connected 8-vertex graph up to isomorphism.

Each connected graph on 8 vertices has a non-cut vertex, so extending every
connected 7-vertex graph from the networkx atlas by one vertex with a nonempty
neighbourhood reaches all of them; duplicates are removed by isomorphism tests
inside buckets of cheap invariants.  Output order is generation order.
"""

import sys
from pathlib import Path

import networkx as nx
from networkx.algorithms.graph_hashing import weisfeiler_lehman_graph_hash


def connected_graphs_8():
    base = [g for g in nx.graph_atlas_g() if g.number_of_nodes() == 7 and nx.is_connected(g)]
    buckets: dict = {}
    out = []
    for g in base:
        for nb in range(1, 1 << 7):
            h = g.copy()
            h.add_node(7)
            h.add_edges_from((7, i) for i in range(7) if nb >> i & 1)
            key = (
                h.number_of_edges(),
                tuple(sorted(d for _, d in h.degree())),
                weisfeiler_lehman_graph_hash(h, iterations=3),
            )
            seen = buckets.setdefault(key, [])
            if any(nx.is_isomorphic(h, x) for x in seen):
                continue
            seen.append(h)
            out.append(h)
    return out


if __name__ == "__main__":
    target = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).with_name("connected_n8.g6")
    lines = [nx.to_graph6_bytes(g, header=False).decode().strip() for g in connected_graphs_8()]
    target.write_text("\n".join(lines) + "\n")
    print(f"wrote {len(lines)} graphs to {target}")
