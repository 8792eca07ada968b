"""Invariants of the derivation algebra and semigroup reconstruction.

The fingerprint of a semigroup is the map (root exponent -> root space
dimension) on a degree window; equal fingerprints up to a coordinate
permutation witness isomorphic derivation algebras at window scale.  For
a Gorenstein numerical semigroup the fingerprint data reduces to its
stabilizer monoid S ∪ {largest gap}, from which the semigroup itself is
recovered and verified.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .classify import is_gorenstein_numerical, stabilizes
from .errors import BoundMismatchError, NotNumericalError, NotRealizableError
from .lattice import IntVector
from .roots import root_table
from .semigroup import AffineSemigroup


@dataclass(frozen=True)
class Fingerprint:
    """Sorted (exponent, dimension) pairs of the nonzero root spaces."""

    n: int
    degree_bound: int
    dims: tuple[tuple[IntVector, int], ...]


def fingerprint(sg: AffineSemigroup, degree: int) -> Fingerprint:
    table = root_table(sg, degree)
    dims = tuple((lam, rs.dimension) for lam, rs in table.sorted_items())
    return Fingerprint(sg.n, degree, dims)


def fingerprints_equal(f1: Fingerprint, f2: Fingerprint) -> bool:
    """Equality as dimension maps, up to a coordinate permutation."""
    if f1.n != f2.n or f1.degree_bound != f2.degree_bound:
        raise BoundMismatchError(
            "fingerprints taken at different dimensions or windows"
        )
    target = set(f2.dims)
    for perm in itertools.permutations(range(f1.n)):
        permuted = {
            (tuple(lam[p] for p in perm), dim) for lam, dim in f1.dims
        }
        if permuted == target:
            return True
    return False


def ordinary_from_fingerprint(f: Fingerprint) -> tuple[IntVector, ...]:
    """Exponents carrying a full-dimensional root space, sorted.

    These are exactly the stabilizing shifts visible in the window; for a
    Cohen-Macaulay semigroup of rank >= 2 they are the members themselves.
    """
    return tuple(lam for lam, dim in f.dims if dim == f.n)


# -- numerical semigroup enumeration ------------------------------------


def enumerate_numerical_gap_sets(max_frobenius: int):
    """All gap sets of numerical semigroups whose gaps are <= max_frobenius.

    Depth-first over 1..max_frobenius: an integer that is a sum of two
    smaller members is forced to be a member, otherwise both branches are
    explored.  Yields sorted gap tuples; () is the full semigroup N.
    """

    def walk(m: int, members: int, gaps: list[int]):
        if m > max_frobenius:
            yield tuple(gaps)
            return
        forced = any(
            (members >> x) & 1 and (members >> (m - x)) & 1
            for x in range(1, m // 2 + 1)
        )
        yield from walk(m + 1, members | (1 << m), gaps)
        if not forced:
            gaps.append(m)
            yield from walk(m + 1, members, gaps)
            gaps.pop()

    yield from walk(1, 1, [])


def is_symmetric_gap_set(gaps) -> bool:
    """Whether x is a member iff frobenius - x is a gap, for 0 <= x <= F."""
    gaps = set(gaps)
    if not gaps:
        return False
    frobenius = max(gaps)
    return all(
        (x in gaps) != ((frobenius - x) in gaps) for x in range(frobenius + 1)
    )


def numerical_semigroup_from_gaps(gaps) -> AffineSemigroup:
    """Minimal-generator presentation of N minus the given gap set."""
    gaps = set(gaps)
    if not gaps:
        return AffineSemigroup([(1,)])
    frobenius = max(gaps)

    def member(x: int) -> bool:
        return x >= 0 and x not in gaps

    multiplicity = next(x for x in range(1, frobenius + 2) if member(x))
    gens = [
        x
        for x in range(1, frobenius + multiplicity + 1)
        if member(x)
        and not any(member(y) and member(x - y) for y in range(1, x))
    ]
    return AffineSemigroup([(g,) for g in gens])


# -- Gorenstein reconstruction -------------------------------------------


def gorenstein_reconstruct(stilde: AffineSemigroup) -> AffineSemigroup:
    """Recover the Gorenstein numerical semigroup with stabilizer `stilde`.

    A Gorenstein (symmetric) numerical semigroup S has stabilizer monoid
    S ∪ {F} with F its largest gap; conversely the stabilizer determines
    c = conductor + multiplicity and S is the stabilizer minus c - 1.  The
    candidate is rebuilt from minimal generators and verified (symmetry
    plus stabilizer round trip); failure raises NotRealizableError.
    """
    if stilde.n != 1:
        raise NotNumericalError("reconstruction needs a rank-1 semigroup")
    profile = stilde.numerical_profile()
    if not profile.gaps:
        return AffineSemigroup([(2,), (3,)])
    a = profile.multiplicity
    c = profile.conductor + a
    removed = c - 1

    def target_member(x: int) -> bool:
        return x != removed and x >= 0 and stilde.contains((x,))

    gens = [
        x
        for x in range(1, c + 2 * a + 1)
        if target_member(x)
        and not any(
            target_member(y) and target_member(x - y) for y in range(1, x)
        )
    ]
    candidate = AffineSemigroup([(g,) for g in gens])
    _verify_reconstruction(candidate, stilde, c + 2 * a)
    return candidate


def _verify_reconstruction(
    candidate: AffineSemigroup, stilde: AffineSemigroup, horizon: int
) -> None:
    if not is_gorenstein_numerical(candidate):
        raise NotRealizableError(
            "candidate is not symmetric; input is not the stabilizer "
            "of any Gorenstein numerical semigroup"
        )
    for x in range(horizon + 1):
        # members stabilize by closure, so this is the full stabilizer monoid
        if stabilizes(candidate, (x,)) != stilde.contains((x,)):
            raise NotRealizableError(
                f"stabilizer of the candidate differs from the input at {x}"
            )
