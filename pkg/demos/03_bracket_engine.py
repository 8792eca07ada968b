#!/usr/bin/env python3
"""Exact brackets of monomial derivations and algebra membership."""

from fractions import Fraction

from semiroot import AffineSemigroup, Derivation, RingElement, in_derivation_algebra

D = Derivation.monomial

# the classic commutator producing a Cartan difference
x = D(2, (-1, 1), 1)
y = D(2, (1, -1), 2)
print("[t2/t1 t1 d1, t1/t2 t2 d2] =", x.bracket(y))

# Cartan elements scale by the exponent
h = D(2, (0, 0), 1)
z = D(2, (3, 1), 2)
print("[t1 d1, t^(3,1) t2 d2] =", h.bracket(z))

# alternating and Jacobi, spot-checked exactly
w = x + Fraction(2, 3) * z
print("[w, w] =", w.bracket(w))
jac = (
    x.bracket(y).bracket(z)
    + y.bracket(z).bracket(x)
    + z.bracket(x).bracket(y)
)
print("Jacobi sum =", jac)

# evaluation on ring elements
f = RingElement.monomial(2, (0, 1))
print("t^(1,0) t2 d2 applied to t^(0,1):", D(2, (1, 0), 2).apply(f).terms)

# membership: the slanted combination lies in the derivation algebra of
# the degree-10 cone, neither summand does
cone = AffineSemigroup([(0, 10), (3, 7), (7, 3), (8, 2), (10, 0)])
combo = D(2, (9, 11), 1, 7) - D(2, (9, 11), 2, 3)
print("7 D1 - 3 D2 at (9,11):",
      in_derivation_algebra(cone, combo).status.value)
alone = in_derivation_algebra(cone, D(2, (9, 11), 1))
print("D1 alone:", alone.status.value, "violated member:", alone.witness)
