"""
Seven descriptors, three ways
=============================

Brute force over the distance table, the sum over cut-class quotients, and
the closed-form polynomials must agree to the last digit.
"""

import time

from benesnet import DESCRIPTOR_NAMES, all_descriptors, closed_forms, cut_method_descriptors, make_network

for name in ("bb", "bba"):
    for n in (2, 3, 4, 5):
        g = make_network(name, n).graph
        t0 = time.perf_counter()
        brute = all_descriptors(g)
        t1 = time.perf_counter()
        cuts = cut_method_descriptors(g)
        t2 = time.perf_counter()
        closed = closed_forms(name, n)
        t3 = time.perf_counter()
        same = brute == cuts == closed
        print(f"{name}({n})  agree={same}  brute {t1 - t0:.3f}s  cuts {t2 - t1:.3f}s  closed {t3 - t2:.5f}s")

print()
d = closed_forms("bba", 6)
for key in DESCRIPTOR_NAMES:
    print(f"{key:6s} {d[key]}")

# closed forms are free at any size
big = closed_forms("bb", 40)
print("\nW(BB(40)) has", len(str(big.wiener)), "digits")
