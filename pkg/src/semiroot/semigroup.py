"""Affine semigroups in N^n with exact membership.

An `AffineSemigroup` is defined by its generators; membership of an
arbitrary integer vector is decided by dynamic programming over the box
[0, v] and cached.  The cache only ever grows and every entry is final,
so concurrent queries are safe: recomputation is idempotent and
answer-deterministic.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd

from . import lattice
from .errors import (
    DimensionMismatchError,
    EmptyGeneratorsError,
    NegativeEntryError,
    NotNumericalError,
    NotSimplicialError,
    ZeroGeneratorError,
)
from .lattice import IntVector

CACHE_CELL_LIMIT = 1 << 22  # refuse DP boxes beyond ~4M cells


def vadd(a: IntVector, b: IntVector) -> IntVector:
    return tuple(x + y for x, y in zip(a, b))


def vsub(a: IntVector, b: IntVector) -> IntVector:
    return tuple(x - y for x, y in zip(a, b))


def unit_vector(n: int, axis: int) -> IntVector:
    """Standard basis vector; axes are 1-based throughout the package."""
    return tuple(int(i == axis - 1) for i in range(n))


@dataclass(frozen=True)
class AxisData:
    """Minimal positive multiples of each coordinate axis inside S."""

    alphas: tuple[IntVector, ...]
    a: tuple[int, ...]


@dataclass(frozen=True)
class NumericalProfile:
    """Gap data of a rank-1 semigroup with gcd-1 generators."""

    multiplicity: int
    frobenius: int
    conductor: int
    gaps: tuple[int, ...]
    apery: tuple[int, ...]


@dataclass(frozen=True)
class StandardReport:
    """Checklist for standard position and simpliciality.

    `normalization_implied` records that the saturation condition is not
    computed directly: axis elements pin the cone to the full orthant, in
    which case full group rank makes the normalization equal the orthant
    points of the group.
    """

    axis_elements_exist: tuple[bool, ...]
    projections_numerical: tuple[bool, ...]
    face_ranks_ok: tuple[bool, ...]
    faces_distinct: bool
    group_rank_full: bool

    @property
    def normalization_implied(self) -> bool:
        return all(self.axis_elements_exist) and self.group_rank_full

    @property
    def is_standard_simplicial(self) -> bool:
        return (
            all(self.axis_elements_exist)
            and all(self.projections_numerical)
            and all(self.face_ranks_ok)
            and self.faces_distinct
            and self.group_rank_full
        )


class AffineSemigroup:
    """Finitely generated subsemigroup of N^n containing 0."""

    def __init__(self, generators):
        gens = tuple(tuple(int(x) for x in g) for g in generators)
        if not gens:
            raise EmptyGeneratorsError("at least one generator required")
        n = len(gens[0])
        if n == 0:
            raise EmptyGeneratorsError("generators must have positive length")
        for g in gens:
            if len(g) != n:
                raise DimensionMismatchError("generators of unequal length")
            if any(x < 0 for x in g):
                raise NegativeEntryError(f"generator {g} has a negative entry")
            if not any(g):
                raise ZeroGeneratorError("zero vector is implicit, not a generator")
        self.n = n
        self.generators: tuple[IntVector, ...] = tuple(sorted(set(gens)))
        self._members: dict[IntVector, bool] = {tuple([0] * n): True}
        self._filled: IntVector = tuple([0] * n)
        self._hnf = None

    def __repr__(self):
        return f"AffineSemigroup({list(map(list, self.generators))})"

    def __eq__(self, other):
        return (
            isinstance(other, AffineSemigroup)
            and self.generators == other.generators
        )

    def __hash__(self):
        return hash(self.generators)

    @property
    def max_coordinate(self) -> int:
        return max(x for g in self.generators for x in g)

    # -- membership -----------------------------------------------------

    def _fill_box(self, corner: IntVector) -> None:
        target = tuple(max(a, b) for a, b in zip(corner, self._filled))
        if target == self._filled:
            return
        cells = 1
        for c in target:
            cells *= c + 1
        if cells > CACHE_CELL_LIMIT:
            raise MemoryError(f"membership box {target} too large")
        members = self._members
        gens = self.generators
        # lexicographic order guarantees v - g was decided before v
        for v in itertools.product(*(range(c + 1) for c in target)):
            if v in members:
                continue
            members[v] = any(
                all(x >= y for x, y in zip(v, g)) and members[vsub(v, g)]
                for g in gens
            )
        self._filled = target

    def contains(self, v) -> bool:
        """Exact membership of an arbitrary integer vector."""
        v = tuple(int(x) for x in v)
        if len(v) != self.n:
            raise DimensionMismatchError(
                f"vector of length {len(v)} in dimension {self.n}"
            )
        if any(x < 0 for x in v):
            return False
        cached = self._members.get(v)
        if cached is not None:
            return cached
        self._fill_box(v)
        return self._members[v]

    def group_contains(self, v) -> bool:
        """Membership in the generated subgroup of Z^n (cached HNF solve)."""
        v = tuple(int(x) for x in v)
        if len(v) != self.n:
            raise DimensionMismatchError(
                f"vector of length {len(v)} in dimension {self.n}"
            )
        if self._hnf is None:
            self._hnf, _ = lattice.hermite_normal_form(self.generators)
        return lattice.hnf_solves(self._hnf, v)

    # -- enumeration ----------------------------------------------------

    def enumerate_box(self, bound: int) -> tuple[IntVector, ...]:
        """All members with every coordinate <= bound, lex sorted."""
        if bound < 0:
            raise ValueError("bound must be nonnegative")
        corner = tuple([bound] * self.n)
        self._fill_box(corner)
        return tuple(
            v
            for v in itertools.product(*(range(bound + 1) for _ in range(self.n)))
            if self._members[v]
        )

    def face_elements(self, axis: int, bound: int) -> tuple[IntVector, ...]:
        """Members with i-th coordinate 0 and all coordinates <= bound."""
        self._check_axis(axis)
        return tuple(
            v for v in self.enumerate_box(bound) if v[axis - 1] == 0
        )

    def _check_axis(self, axis: int) -> None:
        if not 1 <= axis <= self.n:
            raise ValueError(f"axis {axis} out of range 1..{self.n}")

    # -- axis data and standardness --------------------------------------

    def axis_elements(self) -> AxisData:
        """Minimal a_i with a_i * e_i in S, for every axis."""
        alphas, mins = [], []
        for axis in range(1, self.n + 1):
            on_axis = [
                g[axis - 1]
                for g in self.generators
                if all(x == 0 for j, x in enumerate(g) if j != axis - 1)
            ]
            if not on_axis:
                raise NotSimplicialError(axis)
            a = next(
                m
                for m in range(1, self.max_coordinate + 1)
                if self.contains(tuple(m * x for x in unit_vector(self.n, axis)))
            )
            alphas.append(tuple(a * x for x in unit_vector(self.n, axis)))
            mins.append(a)
        return AxisData(tuple(alphas), tuple(mins))

    def standard_simplicial_report(self) -> StandardReport:
        """Checklist report; never raises."""
        n = self.n
        axis_ok = []
        for axis in range(1, n + 1):
            axis_ok.append(
                any(
                    all(x == 0 for j, x in enumerate(g) if j != axis - 1)
                    for g in self.generators
                )
            )
        projections = []
        for axis in range(1, n + 1):
            g0 = 0
            for g in self.generators:
                g0 = gcd(g0, g[axis - 1])
            projections.append(g0 == 1)
        face_gens = [
            tuple(g for g in self.generators if g[axis - 1] == 0)
            for axis in range(1, n + 1)
        ]
        # the face semigroup equals the subsemigroup generated by the
        # generators lying on the face (coordinates are nonnegative)
        if n == 1:
            ranks_ok = (True,)  # the only face is {0}, rank 0 = n - 1
        else:
            ranks_ok = tuple(
                bool(fg) and lattice.lattice_rank(fg) == n - 1 for fg in face_gens
            )
        distinct = len(set(face_gens)) == n
        rank_full = lattice.lattice_rank(self.generators) == n
        return StandardReport(
            tuple(axis_ok), tuple(projections), tuple(ranks_ok), distinct, rank_full
        )

    def is_standard_simplicial(self) -> bool:
        return self.standard_simplicial_report().is_standard_simplicial

    # -- rank-1 utilities -------------------------------------------------

    def numerical_profile(self, sieve_bound: int | None = None) -> NumericalProfile:
        """Gap data for n = 1 with coprime generators.

        The sieve runs to (max generator)^2 by default, a safe bound on the
        largest gap for coprime generators, stopping early once a full run of
        `multiplicity` consecutive members certifies the tail.
        """
        if self.n != 1:
            raise NotNumericalError(f"rank-1 required, got dimension {self.n}")
        values = sorted(g[0] for g in self.generators)
        g0 = 0
        for v in values:
            g0 = gcd(g0, v)
        if g0 != 1:
            raise NotNumericalError(f"generators have gcd {g0}")
        multiplicity = values[0]
        limit = sieve_bound if sieve_bound is not None else values[-1] ** 2
        limit = max(limit, values[-1])
        member = [False] * (limit + 1)
        member[0] = True
        gaps = []
        run = 0
        top = 0
        for x in range(1, limit + 1):
            member[x] = any(v <= x and member[x - v] for v in values)
            run = run + 1 if member[x] else 0
            top = x
            if run >= multiplicity:
                break
        if run < multiplicity:
            # a run of `multiplicity` members certifies the whole tail; the
            # default (max generator)^2 always produces one for gcd 1
            raise ValueError(
                f"sieve bound {limit} too small to certify the gap set"
            )
        frobenius = -1
        for x in range(1, top + 1):
            if not member[x]:
                gaps.append(x)
                frobenius = x
        conductor = frobenius + 1

        def is_member(x: int) -> bool:
            return x >= conductor or (0 <= x <= top and member[x])

        apery = []
        for residue in range(multiplicity):
            apery.append(
                next(
                    w
                    for w in itertools.count(residue, multiplicity)
                    if is_member(w)
                )
            )
        return NumericalProfile(
            multiplicity, frobenius, conductor, tuple(gaps), tuple(apery)
        )
