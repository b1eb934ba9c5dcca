"""
Cut classes and quotient graphs
===============================

The Djokovic-Winkler relation on BB(n) is not transitive, but its closure
gives exactly n classes.  Each class collapses the network to a small
weighted graph.
"""

from collections import Counter

from benesnet import make_augmented_benes, make_benes, quotient, theta_star_classes
from benesnet.thetacuts import middle_out_order, theta_is_transitive

n = 3
for make in (make_benes, make_augmented_benes):
    net = make(n)
    part = theta_star_classes(net.graph)
    print(f"{net.name}({n}): {len(part)} classes, transitive relation: {theta_is_transitive(net.graph, partition=part)}")
    for i, c in enumerate(middle_out_order(net, part), 1):
        q = quotient(net.graph, part, c).graph
        weights = Counter(zip(q.w_v, q.s_v))
        print(f"  class {i}: {len(part.classes[c])} cut edges -> {q.vertex_count} vertices, {q.edge_count} edges")
        for (w, s), k in sorted(weights.items()):
            print(f"      {k:3d} x (w_v={w}, s_v={s})")
