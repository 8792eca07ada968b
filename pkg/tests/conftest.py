"""Shared corpus of semigroups used throughout the suite."""

import pytest

from semiroot import AffineSemigroup


def deg10_cone():
    """Rank-2 cone whose ring is not Buchsbaum (all generators of degree 10)."""
    return AffineSemigroup([(0, 10), (3, 7), (7, 3), (8, 2), (10, 0)])


def cusp_line():
    """Product of a cuspidal curve semigroup with a free line."""
    return AffineSemigroup([(2, 0), (3, 0), (0, 1)])


def duple(d: int):
    """Cone over the degree-d rational normal curve."""
    return AffineSemigroup([(i, d - i) for i in range(d + 1)])


def graded_cone(d: int, l: int):
    """All lattice points of total degree m*d with m >= l (Buchsbaum, not CM)."""
    gens = []
    for total in range(d * l, d * (2 * l - 1) + 1, d):
        gens.extend((i, total - i) for i in range(total + 1))
    return AffineSemigroup(gens)


def hexic_pair():
    """Degree-6 generator sets differing by one interior point."""
    all6 = [(i, 6 - i) for i in range(7)]
    s1 = AffineSemigroup([g for g in all6 if g != (3, 3)])
    s2 = AffineSemigroup([g for g in all6 if g != (2, 4)])
    return s1, s2


def numerical(*gens):
    return AffineSemigroup([(g,) for g in gens])


@pytest.fixture
def corpus():
    """Name -> semigroup map covering every worked example."""
    s1, s2 = hexic_pair()
    return {
        "deg10_cone": deg10_cone(),
        "cusp_line": cusp_line(),
        "duple2": duple(2),
        "duple3": duple(3),
        "graded_cone_2_2": graded_cone(2, 2),
        "graded_cone_2_3": graded_cone(2, 3),
        "hexic1": s1,
        "hexic2": s2,
        "n23": numerical(2, 3),
        "n345": numerical(3, 4, 5),
        "n378": numerical(3, 7, 8),
        "n457": numerical(4, 5, 7),
        "n35": numerical(3, 5),
        "full_line": numerical(1),
        "full_plane": AffineSemigroup([(1, 0), (0, 1)]),
        "mixed_unit": AffineSemigroup([(1, 0), (1, 1), (0, 2)]),
    }
