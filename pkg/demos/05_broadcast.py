"""
Broadcasting on BB*(n)
======================

Furthest-distance-first broadcasting from the boundary levels, compared
with the e(S)+2 / e(S)+3 round bound.  Beyond n = 3 the bound is reported,
not promised.
"""

from collections import Counter

from benesnet import broadcast_sweep, make_augmented_benes
from benesnet.broadcast import broadcast_from, check_tree_conditions

summary = Counter((r[0], r[3], r[4], r[5], r[6]) for r in broadcast_sweep(range(1, 6)))
print(" n  e(S)  rounds  bound  within  sources")
for (n, ecc, rounds, bound, ok), count in sorted(summary.items()):
    print(f"{n:2d}  {ecc:4d}  {rounds:6d}  {bound:5d}  {str(ok):>6s}  {count:7d}")

net = make_augmented_benes(2)
trace = broadcast_from(net, "00,0")
print()
for r, sends in enumerate(trace.rounds, 1):
    print(f"round {r}: " + ", ".join(f"{net.labels.render(a)}->{net.labels.render(b)}" for a, b in sends))
print(check_tree_conditions(net, trace))
