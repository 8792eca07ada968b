#!/usr/bin/env python3
"""Degree-zero derivations of the Lie algebra are inner, at desk scale.

The solver collects every grade-preserving candidate action on the
windowed root basis, imposes the derivation identity over all bracket
pairs, and solves exactly over Q.  The inner space is what the adjoint
action of the Cartan part produces; after projecting away the window
boundary the two spaces coincide.
"""

from semiroot import AffineSemigroup, degree_zero_cocycles

cases = [
    ("numerical <2,3>", AffineSemigroup([(2,), (3,)]), 12),
    ("numerical <3,5>", AffineSemigroup([(3,), (5,)]), 14),
    ("cusp x line", AffineSemigroup([(2, 0), (3, 0), (0, 1)]), 8),
    ("degree-2 cone", AffineSemigroup([(0, 2), (1, 1), (2, 0)]), 8),
]

for name, sg, degree in cases:
    sol = degree_zero_cocycles(sg, degree)
    print(f"{name} (window {degree}, core {sol.core_degree}):")
    print(f"  unknowns {len(sol.unknown_index)},"
          f" solution dim {sol.solution_space.dimension},"
          f" inner dim {sol.inner_dimension}")
    print(f"  solutions collapse to inner on the core:"
          f" {sol.restricted_equal}")

# the inner space is literally ad of the Cartan basis: the unknown at
# (v, i, i) takes the value v_k for the k-th Cartan direction
sol = degree_zero_cocycles(AffineSemigroup([(2,), (3,)]), 6)
print()
print("unknown index for <2,3> at window 6:")
print(" ", sol.unknown_index)
print("inner basis row:", sol.inner_space.basis)
