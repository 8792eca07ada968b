#!/usr/bin/env python3
"""Root spaces of the derivation algebra, tabulated per exponent.

A root space at exponent v collects the coefficient vectors b for which
sum_i b_i t^v t_i d_i preserves the semigroup ring.  Ordinary roots
carry the full space, exceptional roots a single axis line, and mixed
roots (only possible beyond the Buchsbaum case) something slanted.
"""

from semiroot import AffineSemigroup, root_space, root_table

cusp_line = AffineSemigroup([(2, 0), (3, 0), (0, 1)])
print("cusp x line, all roots of total degree <= 2:")
for lam, rs in root_table(cusp_line, 2).sorted_items():
    print(f"  {list(lam)}: dim {rs.dimension:>2}  {rs.kind.value:<12}"
          f" basis {[list(b) for b in rs.space.basis]}")

print()
duple = AffineSemigroup([(0, 2), (1, 1), (2, 0)])
print("degree-2 cone: the exceptional ladder (-1,1), (-1,3), ...")
for m in range(4):
    rs = root_space(duple, (-1, 1 + 2 * m))
    print(f"  (-1,{1 + 2 * m}): {rs.kind.value}, axis {rs.axis}")

print()
deg10_cone = AffineSemigroup([(0, 10), (3, 7), (7, 3), (8, 2), (10, 0)])
rs = root_space(deg10_cone, (9, 11))
print("degree-10 cone at (9,11): a mixed root outside every axis line")
print("  dimension", rs.dimension, "basis", [list(b) for b in rs.space.basis])
print("  (7, -3) pairs to zero against the only escaping generator (3,7):",
      7 * 3 - 3 * 7)
