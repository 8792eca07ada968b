#!/usr/bin/env python3
"""Window fingerprints: what the derivation algebra can and cannot see.

The fingerprint maps each root exponent to its root-space dimension on a
degree window.  Cohen-Macaulay semigroups of rank two are pinned down by
it; semigroups sharing a Cohen-Macaulayfication are not, and rank-1
semigroups sharing a stabilizer monoid are not either.
"""

from semiroot import (
    AffineSemigroup,
    fingerprint,
    fingerprints_equal,
    ordinary_from_fingerprint,
)

# two degree-6 cones differing by one interior generator
all6 = [(i, 6 - i) for i in range(7)]
s1 = AffineSemigroup([g for g in all6 if g != (3, 3)])
s2 = AffineSemigroup([g for g in all6 if g != (2, 4)])
f1, f2 = fingerprint(s1, 8), fingerprint(s2, 8)
print("degree-6 twins equal fingerprints:", fingerprints_equal(f1, f2))
print("yet (2,4) separates them:", s1.contains((2, 4)), s2.contains((2, 4)))
print("and (6,6) is twice a member only on one side:",
      (6, 6) in {tuple(2 * x for x in v) for v in s2.enumerate_box(6)},
      (6, 6) in {tuple(2 * x for x in v) for v in s1.enumerate_box(6)})

print()
# rank-1 twins: equal stabilizer monoids force equal fingerprints
pairs = [((2, 3), (3, 4, 5)), ((3, 7, 8), (4, 5, 7))]
for a, b in pairs:
    sa = AffineSemigroup([(g,) for g in a])
    sb = AffineSemigroup([(g,) for g in b])
    print(f"<{a}> vs <{b}>:",
          fingerprints_equal(fingerprint(sa, 12), fingerprint(sb, 12)))

print()
# for a Cohen-Macaulay cone the full-dimensional exponents ARE the members
duple = AffineSemigroup([(0, 2), (1, 1), (2, 0)])
window = ordinary_from_fingerprint(fingerprint(duple, 4))
members = sorted(v for v in duple.enumerate_box(4) if sum(v) <= 4)
print("degree-2 cone: ordinary window == member window:",
      list(window) == members)

# for the merely-Buchsbaum graded cone the window shows the
# Cohen-Macaulayfication instead of the semigroup itself
graded = AffineSemigroup(
    [(i, 4 - i) for i in range(5)] + [(i, 6 - i) for i in range(7)]
)
window = ordinary_from_fingerprint(fingerprint(graded, 8))
print("graded cone window contains (1,1) although the cone does not:",
      (1, 1) in window, graded.contains((1, 1)))
