"""
Efficiency parameters
=====================

Measured by BFS, compared with the formulas, and BB* over BB as a ratio.
"""

from benesnet.netparams import PARAMETER_NAMES, comparison_sweep

rows, ratios = comparison_sweep(range(2, 9))
mismatch = [r for r in rows if r[3] != r[4]]
print("measured == formula everywhere:", not mismatch)

print()
print("n  " + "  ".join(f"{p:>18s}" for p in PARAMETER_NAMES))
by_n = {}
for _, n, p, r, _ in ratios:
    by_n.setdefault(n, {})[p] = r
for n, vals in by_n.items():
    print(f"{n}  " + "  ".join(f"{float(vals[p]):18.4f}" for p in PARAMETER_NAMES))
