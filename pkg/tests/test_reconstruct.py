"""Fingerprints and Gorenstein reconstruction."""

import itertools

import pytest

from semiroot import (
    AffineSemigroup,
    BoundMismatchError,
    NotRealizableError,
    enumerate_numerical_gap_sets,
    fingerprint,
    fingerprints_equal,
    gorenstein_reconstruct,
    is_symmetric_gap_set,
    numerical_semigroup_from_gaps,
    ordinary_from_fingerprint,
)
from conftest import cusp_line, duple, graded_cone, hexic_pair, numerical


def test_fingerprint_hexic_pair():
    s1, s2 = hexic_pair()
    assert fingerprints_equal(fingerprint(s1, 8), fingerprint(s2, 8))


def test_fingerprint_rank1_twins():
    assert fingerprints_equal(
        fingerprint(numerical(2, 3), 6), fingerprint(numerical(3, 4, 5), 6)
    )
    assert fingerprints_equal(
        fingerprint(numerical(3, 7, 8), 10), fingerprint(numerical(4, 5, 7), 10)
    )


def test_fingerprint_distinguishes():
    assert not fingerprints_equal(
        fingerprint(cusp_line(), 4), fingerprint(duple(2), 4)
    )
    f = fingerprint(cusp_line(), 4)
    assert fingerprints_equal(f, f)


def test_fingerprint_bound_mismatch():
    with pytest.raises(BoundMismatchError):
        fingerprints_equal(fingerprint(duple(2), 4), fingerprint(duple(2), 6))


def test_fingerprint_permutation_invariance():
    sg = cusp_line()
    swapped = AffineSemigroup([(0, 2), (0, 3), (1, 0)])
    assert fingerprints_equal(fingerprint(sg, 5), fingerprint(swapped, 5))


def test_fingerprint_equivalence_relation(corpus):
    names = ["cusp_line", "duple2", "graded_cone_2_2", "hexic1", "hexic2"]
    prints = {name: fingerprint(corpus[name], 6) for name in names}
    for a, b in itertools.product(names, repeat=2):
        ab = fingerprints_equal(prints[a], prints[b])
        ba = fingerprints_equal(prints[b], prints[a])
        assert ab == ba
    for a, b, c in itertools.product(names, repeat=3):
        if fingerprints_equal(prints[a], prints[b]) and fingerprints_equal(
            prints[b], prints[c]
        ):
            assert fingerprints_equal(prints[a], prints[c])


def test_ordinary_from_fingerprint_cm_recovers_members():
    for sg in (cusp_line(), duple(2), duple(3)):
        window = ordinary_from_fingerprint(fingerprint(sg, 4))
        members = tuple(
            sorted(v for v in sg.enumerate_box(4) if sum(v) <= 4)
        )
        assert window == members


def test_ordinary_from_fingerprint_buchsbaum_recovers_cm_closure():
    # the graded cone and its Cohen-Macaulayfication share the window
    recovered = ordinary_from_fingerprint(fingerprint(graded_cone(2, 2), 8))
    closure = duple(2)
    expected = tuple(
        sorted(v for v in closure.enumerate_box(8) if sum(v) <= 8)
    )
    assert recovered == expected
    assert (1, 1) in recovered  # not a member of the cone itself


def test_ordinary_from_fingerprint_line():
    window = ordinary_from_fingerprint(fingerprint(numerical(2, 3), 5))
    assert window == ((0,), (1,), (2,), (3,), (4,), (5,))


def test_squaring_obstruction_hexic_pair():
    s1, s2 = hexic_pair()
    assert s1.contains((2, 4)) and not s2.contains((2, 4))
    assert fingerprints_equal(fingerprint(s1, 8), fingerprint(s2, 8))
    # (6,6) is twice a member of s2 but not twice any member of s1
    assert s2.contains((3, 3))
    doubles_s1 = {
        tuple(2 * x for x in v) for v in s1.enumerate_box(6)
    }
    assert (6, 6) not in doubles_s1
    assert (6, 6) in {tuple(2 * x for x in v) for v in s2.enumerate_box(6)}


def test_reconstruct_examples():
    assert gorenstein_reconstruct(numerical(1)).generators == ((2,), (3,))
    assert gorenstein_reconstruct(numerical(3, 5, 6, 7)).generators == (
        (3,),
        (5,),
    )
    assert gorenstein_reconstruct(numerical(2, 3)).generators == ((2,), (5,))


def test_reconstruct_not_realizable():
    with pytest.raises(NotRealizableError):
        gorenstein_reconstruct(numerical(3, 7, 8))


def test_reconstruct_requires_numerical():
    from semiroot import NotNumericalError

    with pytest.raises(NotNumericalError):
        gorenstein_reconstruct(cusp_line())
    with pytest.raises(NotNumericalError):
        gorenstein_reconstruct(AffineSemigroup([(2,), (4,)]))


def test_reconstruct_oracle_small():
    # exhaustive oracle: the unique symmetric semigroup with the right
    # stabilizer monoid, over all semigroups with Frobenius <= 10
    targets = {}
    for gaps in enumerate_numerical_gap_sets(10):
        if not gaps or not is_symmetric_gap_set(gaps):
            continue
        frobenius = max(gaps)
        stilde = tuple(g for g in gaps if g != frobenius)
        targets.setdefault(stilde, []).append(gaps)
    for stilde_gaps, candidates in targets.items():
        assert len(candidates) == 1  # uniqueness
        recovered = gorenstein_reconstruct(
            numerical_semigroup_from_gaps(stilde_gaps)
        )
        assert recovered.numerical_profile().gaps == candidates[0]


def test_round_trip_frobenius_30_exhaustive():
    count = 0
    for gaps in enumerate_numerical_gap_sets(30):
        if not gaps or not is_symmetric_gap_set(gaps):
            continue
        frobenius = max(gaps)
        stilde = numerical_semigroup_from_gaps(
            tuple(g for g in gaps if g != frobenius)
        )
        recovered = gorenstein_reconstruct(stilde)
        assert recovered.numerical_profile().gaps == gaps
        count += 1
    assert count == 292
