"""Ring-theoretic classification of a semigroup ring from its semigroup.

The Cohen-Macaulay and Buchsbaum properties are decided through two
combinatorial sets:

* the *defect* S'\\S, where S' collects the lattice points of the group
  that some face element translates into S (one search per face, the
  intersection over all faces);
* the *stabilizing shifts*: vectors v with v + m in S for every nonzero
  member m.  Testing the generators suffices, because every nonzero
  member decomposes as a generator plus a member.

The defect search is an existential scan inside a coordinate box, so
emptiness is only certified up to the bound; verdicts carry that bound
and reports recheck at twice the bound for a stabilization flag.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass

from .errors import NotNumericalError, NotStandardError
from .lattice import IntVector
from .semigroup import AffineSemigroup, StandardReport, vadd


class Status(enum.Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN_UP_TO_BOUND = "unknown_up_to_bound"

    @property
    def is_yes(self) -> bool:
        return self is Status.YES

    @property
    def is_no(self) -> bool:
        return self is Status.NO


@dataclass(frozen=True)
class Verdict:
    """Three-valued answer stamped with the search bound it used.

    A NO always carries a witness.  Bound 0 means the answer was decided
    exactly, with no enumeration involved.
    """

    status: Status
    bound: int = 0
    witness: IntVector | None = None
    note: str = ""

    def __post_init__(self):
        if self.status is Status.NO and self.witness is None:
            raise ValueError("a NO verdict requires a witness")


def default_bound(sg: AffineSemigroup) -> int:
    """Box bound used when none is given: 2 * n * (max generator entry)."""
    return 2 * sg.n * sg.max_coordinate


def require_standard(sg: AffineSemigroup) -> None:
    report = sg.standard_simplicial_report()
    if not report.is_standard_simplicial:
        raise NotStandardError(
            f"semigroup is not standard simplicial: {report}"
        )


def stabilizes(sg: AffineSemigroup, v) -> bool:
    """Whether v + m stays in S for every nonzero member m.

    Exact: testing the generators is enough, since any nonzero member is
    a generator plus a member and S is closed under addition.
    """
    v = tuple(int(x) for x in v)
    if any(x < 0 for x in v):
        return False
    return all(sg.contains(vadd(v, g)) for g in sg.generators)


def pushed_into_by_face(
    sg: AffineSemigroup, v, face_axis: int, bound: int
) -> Verdict:
    """Search for a face element (i-th coordinate 0) translating v into S.

    One-sided: YES carries the face element found (0 included, so members
    answer YES immediately); exhaustion of the box yields
    UNKNOWN_UP_TO_BOUND, never NO.
    """
    v = tuple(int(x) for x in v)
    for s in sg.face_elements(face_axis, bound):
        if sg.contains(vadd(v, s)):
            return Verdict(Status.YES, bound, s)
    return Verdict(Status.UNKNOWN_UP_TO_BOUND, bound)


def cm_defect(sg: AffineSemigroup, bound: int | None = None) -> tuple[IntVector, ...]:
    """Nonmembers of the box [0, bound]^n moved into S across every face.

    Candidates are restricted to the group generated by S.  Sorted.
    """
    require_standard(sg)
    if bound is None:
        bound = default_bound(sg)
    found = []
    for v in _box_vectors(sg.n, bound):
        if sg.contains(v) or not sg.group_contains(v):
            continue
        if all(
            pushed_into_by_face(sg, v, axis, bound).status.is_yes
            for axis in range(1, sg.n + 1)
        ):
            found.append(v)
    return tuple(found)


def _box_vectors(n: int, bound: int):
    return itertools.product(*(range(bound + 1) for _ in range(n)))


def is_cohen_macaulay(sg: AffineSemigroup, bound: int | None = None) -> Verdict:
    """YES iff the defect box scan comes back empty (YES is bound-stamped)."""
    if bound is None:
        bound = default_bound(sg)
    defect = cm_defect(sg, bound)
    if defect:
        return Verdict(Status.NO, bound, defect[0], "least defect element")
    return Verdict(Status.YES, bound, note="defect empty within box")


def is_buchsbaum(sg: AffineSemigroup, bound: int | None = None) -> Verdict:
    """Checks that every defect element is a stabilizing shift.

    The NO witness is the least point of (S'\\S) + (S\\{0}) outside S,
    i.e. the direct counterexample to the defining inclusion.
    """
    if bound is None:
        bound = default_bound(sg)
    defect = cm_defect(sg, bound)
    violations = []
    for v in defect:
        for g in sg.generators:
            if not sg.contains(vadd(v, g)):
                violations.append(vadd(v, g))
    if violations:
        return Verdict(
            Status.NO, bound, min(violations), "defect shift escaping S"
        )
    return Verdict(Status.YES, bound, note="all defect elements stabilize")


def pseudo_members(sg: AffineSemigroup, bound: int | None = None) -> tuple[IntVector, ...]:
    """Stabilizing shifts in the box that are not members, sorted.

    For a numerical semigroup these are the pseudo-Frobenius numbers.
    """
    if bound is None:
        bound = default_bound(sg)
    return tuple(
        v
        for v in _box_vectors(sg.n, bound)
        if not sg.contains(v) and stabilizes(sg, v)
    )


def is_gorenstein_numerical(sg: AffineSemigroup) -> bool:
    """Symmetry about the largest gap: x in S iff c-1-x not in S."""
    profile = sg.numerical_profile()
    c = profile.conductor
    return all(
        sg.contains((x,)) != sg.contains((c - 1 - x,)) for x in range(c)
    )


def cm_type_numerical(sg: AffineSemigroup) -> int:
    """Number of pseudo-Frobenius numbers; 1 for the full semigroup N."""
    profile = sg.numerical_profile()
    if not profile.gaps:
        return 1
    return sum(1 for x in profile.gaps if stabilizes(sg, (x,)))


@dataclass(frozen=True)
class ClassificationReport:
    standard_simplicial: StandardReport
    cohen_macaulay: Verdict
    buchsbaum: Verdict
    cm_defect: tuple[IntVector, ...]
    pseudo_members: tuple[IntVector, ...]
    bound: int
    stabilized: bool
    gorenstein: bool | None = None
    cm_type: int | None = None


def classification_report(
    sg: AffineSemigroup, bound: int | None = None, recheck: bool = True
) -> ClassificationReport:
    """Full classification at the given box bound.

    With `recheck`, the defect scan is repeated at twice the bound and
    `stabilized` records whether the defect set was unchanged.
    """
    if bound is None:
        bound = default_bound(sg)
    standard = sg.standard_simplicial_report()
    defect = cm_defect(sg, bound)
    cm = is_cohen_macaulay(sg, bound)
    bb = is_buchsbaum(sg, bound)
    stable = True
    if recheck:
        stable = cm_defect(sg, 2 * bound) == defect
    gorenstein = None
    cm_type = None
    if sg.n == 1:
        try:
            gorenstein = is_gorenstein_numerical(sg)
            cm_type = cm_type_numerical(sg)
        except NotNumericalError:
            pass
    return ClassificationReport(
        standard_simplicial=standard,
        cohen_macaulay=cm,
        buchsbaum=bb,
        cm_defect=defect,
        pseudo_members=pseudo_members(sg, bound),
        bound=bound,
        stabilized=stable,
        gorenstein=gorenstein,
        cm_type=cm_type,
    )
