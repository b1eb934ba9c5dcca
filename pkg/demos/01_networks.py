"""
Building the networks
=====================

Butterfly, Benes and augmented Benes networks, their sizes, and what the
extra same-level edges do to distances.
"""

from benesnet import all_pairs_distances, make_augmented_benes, make_benes, make_butterfly

for n in range(1, 6):
    sizes = []
    for make in (make_butterfly, make_benes, make_augmented_benes):
        g = make(n).graph
        sizes.append(f"{make(n).name}: {g.vertex_count:4d} v {g.edge_count:5d} e")
    print(f"n={n}  " + "   ".join(sizes))

# A vertex is named by its column in binary and its level.
net = make_augmented_benes(2)
print()
print("neighbours of", net.labels.render(0), "in BB*(2):")
print("  ", [net.labels.render(u) for u in net.graph.adjacency[0]])

# The diameter stays 2n, but typical distances shrink.
for make in (make_benes, make_augmented_benes):
    oracle = all_pairs_distances(make(4).graph)
    d = oracle.dist
    print(f"{make(4).name}(4): diameter {oracle.diameter}, mean distance {d.sum() / (d.size - d.shape[0]):.3f}")
