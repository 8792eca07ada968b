"""Root geometry of the derivation algebra of a semigroup ring.

The algebra of derivations of k[S] decomposes over the monomial torus
action into root spaces indexed by lattice vectors v.  Writing a basis
derivation along axis i with exponent v, a coefficient vector b lies in
the root space at v exactly when v + g stays in S for every generator g
with <b, g> != 0 (every member s with <b, s> != 0 decomposes through
such a generator, so the universal condition reduces to finitely many
generator constraints).  Root spaces are therefore exact rational
kernels, and the box-scan variant kept here as an oracle can only agree
once its box covers the generators.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass

from . import lattice
from .classify import stabilizes
from .errors import DimensionMismatchError
from .lattice import IntVector, RationalSubspace
from .semigroup import AffineSemigroup, vadd, vsub


class RootKind(enum.Enum):
    ORDINARY = "ordinary"
    EXCEPTIONAL = "exceptional"
    MIXED = "mixed"
    EMPTY = "empty"


@dataclass(frozen=True)
class RootSpace:
    """Coefficient space of the derivations living at one exponent."""

    lam: IntVector
    space: RationalSubspace
    kind: RootKind
    axis: int | None = None  # set for EXCEPTIONAL

    @property
    def dimension(self) -> int:
        return self.space.dimension


@dataclass(frozen=True)
class RootTable:
    """All nonzero root spaces with total degree at most `degree_bound`."""

    degree_bound: int
    entries: dict[IntVector, RootSpace]

    def sorted_items(self):
        return sorted(self.entries.items())

    def __contains__(self, lam) -> bool:
        return tuple(lam) in self.entries


def is_axis_root(sg: AffineSemigroup, v, axis: int) -> bool:
    """Whether v + s is in S for every member s with nonzero axis coordinate.

    Exact by generator reduction: a member with nonzero i-th coordinate
    contains a generator with nonzero i-th coordinate as a summand.
    """
    sg._check_axis(axis)
    v = tuple(int(x) for x in v)
    if len(v) != sg.n:
        raise DimensionMismatchError(
            f"vector of length {len(v)} in dimension {sg.n}"
        )
    return all(
        sg.contains(vadd(v, g)) for g in sg.generators if g[axis - 1] != 0
    )


def _admissible_axes(n: int, v: IntVector) -> tuple[int, ...]:
    """Axes i for which t^v t_i d_i is a polynomial derivation."""
    if any(x < -1 for x in v):
        return ()
    negatives = [i + 1 for i, x in enumerate(v) if x == -1]
    if len(negatives) > 1:
        return ()
    if negatives:
        return (negatives[0],)
    return tuple(range(1, n + 1))


def _classify_space(
    sg: AffineSemigroup, v: IntVector, space: RationalSubspace
) -> RootSpace:
    if space.dimension == 0:
        return RootSpace(v, space, RootKind.EMPTY)
    if all(x >= 0 for x in v) and space.dimension == sg.n:
        return RootSpace(v, space, RootKind.ORDINARY)
    if space.dimension == 1:
        row = space.basis[0]
        units = [i + 1 for i, x in enumerate(row) if x]
        if len(units) == 1 and row[units[0] - 1] == 1:
            return RootSpace(v, space, RootKind.EXCEPTIONAL, axis=units[0])
    return RootSpace(v, space, RootKind.MIXED)


def root_space(
    sg: AffineSemigroup, v, bound: int | None = None
) -> RootSpace:
    """Exact root space at v, with kind classification.

    The optional `bound` is accepted for interface compatibility with the
    box-scan formulation; the generator constraints already determine the
    space exactly, so the result is independent of it (stabilization at any
    larger box is automatic).
    """
    del bound
    v = tuple(int(x) for x in v)
    if len(v) != sg.n:
        raise DimensionMismatchError(
            f"vector of length {len(v)} in dimension {sg.n}"
        )
    axes = _admissible_axes(sg.n, v)
    if not axes:
        return RootSpace(v, RationalSubspace(sg.n, ()), RootKind.EMPTY)
    constraints = [g for g in sg.generators if not sg.contains(vadd(v, g))]
    for j in range(1, sg.n + 1):
        if j not in axes:
            constraints.append(tuple(int(k == j - 1) for k in range(sg.n)))
    space = lattice.solve_rational_kernel(constraints, sg.n)
    return _classify_space(sg, v, space)


def root_space_box_scan(sg: AffineSemigroup, v, bound: int) -> RootSpace:
    """Definitional variant: constraints from all box members, not generators.

    Downward-correct only (the true space is contained in the result); used
    as an independent oracle against `root_space`.
    """
    v = tuple(int(x) for x in v)
    axes = _admissible_axes(sg.n, v)
    if not axes:
        return RootSpace(v, RationalSubspace(sg.n, ()), RootKind.EMPTY)
    constraints = [
        s for s in sg.enumerate_box(bound) if not sg.contains(vadd(v, s))
    ]
    for j in range(1, sg.n + 1):
        if j not in axes:
            constraints.append(tuple(int(k == j - 1) for k in range(sg.n)))
    space = lattice.solve_rational_kernel(constraints, sg.n)
    return _classify_space(sg, v, space)


def _candidate_exponents(n: int, degree: int):
    """Lattice vectors of total degree <= degree that admit derivations.

    Either all entries nonnegative, or exactly one entry equal to -1.
    """
    seen = set()
    for v in _nonneg_vectors_up_to(n, degree):
        seen.add(v)
        yield v
    for axis in range(n):
        for rest in _nonneg_vectors_up_to(n - 1, degree + 1):
            v = rest[:axis] + (-1,) + rest[axis:]
            if v not in seen:
                seen.add(v)
                yield v


def _nonneg_vectors_up_to(n: int, degree: int):
    if degree < 0:
        return
    if n == 0:
        yield ()
        return
    for head in range(degree + 1):
        for tail in _nonneg_vectors_up_to(n - 1, degree - head):
            yield (head,) + tail


def root_table(sg: AffineSemigroup, degree: int, bound: int | None = None) -> RootTable:
    """All nonzero root spaces with total degree at most `degree`."""
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    entries = {}
    for v in _candidate_exponents(sg.n, degree):
        rs = root_space(sg, v, bound)
        if rs.dimension > 0:
            entries[v] = rs
    return RootTable(degree, dict(sorted(entries.items())))


def is_exceptional_root(sg: AffineSemigroup, v, axis: int) -> bool:
    """Axis root that is not a stabilizing shift (window-free predicate)."""
    v = tuple(int(x) for x in v)
    if any(x < -1 for x in v):
        return False
    if v[axis - 1] < -1 or any(
        x < 0 for i, x in enumerate(v) if i != axis - 1
    ):
        return False
    if all(x >= 0 for x in v) and stabilizes(sg, v):
        return False
    return is_axis_root(sg, v, axis)


def exceptional_roots(
    sg: AffineSemigroup, axis: int, degree: int
) -> tuple[IntVector, ...]:
    """Exceptional roots for one axis with total degree <= degree, sorted."""
    sg._check_axis(axis)
    found = []
    for rest in _nonneg_vectors_up_to(sg.n, degree + 1):
        v = rest[: axis - 1] + (rest[axis - 1] - 1,) + rest[axis:]
        if sum(v) > degree:
            continue
        if is_exceptional_root(sg, v, axis):
            found.append(v)
    return tuple(sorted(found))


def exceptional_generators(
    sg: AffineSemigroup, axis: int, degree: int
) -> tuple[IntVector, ...]:
    """Module generators of the exceptional roots along one axis.

    The exceptional roots are stable under adding the axis elements of the
    other coordinates; a root is a generator when stepping back by any such
    axis element leaves the exceptional set.  Minimality is checked with
    the window-free predicate, so it does not depend on `degree`.
    """
    alphas = sg.axis_elements().alphas
    gens = []
    for v in exceptional_roots(sg, axis, degree):
        if not any(
            is_exceptional_root(sg, vsub(v, alphas[j - 1]), axis)
            for j in range(1, sg.n + 1)
            if j != axis
        ):
            gens.append(v)
    return tuple(gens)


def regenerate_exceptional(
    sg: AffineSemigroup, axis: int, degree: int
) -> tuple[IntVector, ...]:
    """Span of the exceptional generators under the other axis elements.

    Reproduces the exceptional roots inside the window when the window is
    honest; used as a completeness check.
    """
    alphas = [
        sg.axis_elements().alphas[j - 1]
        for j in range(1, sg.n + 1)
        if j != axis
    ]
    base = exceptional_generators(sg, axis, degree)
    span = set()
    frontier = list(base)
    while frontier:
        v = frontier.pop()
        if v in span or sum(v) > degree:
            continue
        span.add(v)
        for alpha in alphas:
            w = vadd(v, alpha)
            if sum(w) <= degree and w not in span:
                frontier.append(w)
    return tuple(sorted(span))
