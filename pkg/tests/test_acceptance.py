"""Acceptance suite: one test per criterion, one PASS/FAIL line each.

Run with `pytest tests/test_acceptance.py -v -s` to see the lines.
"""

import random
import time
from contextlib import contextmanager
from fractions import Fraction

from oracles import definitional_axis_root, definitional_stabilizes

from semiroot import (
    Derivation,
    Status,
    cm_type_numerical,
    degree_zero_cocycles,
    derived_cartan_dimension,
    enumerate_numerical_gap_sets,
    exceptional_generators,
    exceptional_roots,
    fingerprint,
    fingerprints_equal,
    gorenstein_reconstruct,
    in_derivation_algebra,
    is_axis_root,
    is_buchsbaum,
    is_cohen_macaulay,
    is_gorenstein_numerical,
    is_product_along_line,
    is_symmetric_gap_set,
    numerical_semigroup_from_gaps,
    regenerate_exceptional,
    root_space,
    root_table,
    stabilizes,
)
from semiroot.semigroup import vadd
from conftest import (
    cusp_line,
    deg10_cone,
    duple,
    graded_cone,
    hexic_pair,
    numerical,
)


@contextmanager
def criterion(number, description):
    try:
        yield
    except Exception:
        print(f"FAIL  criterion {number}: {description}")
        raise
    print(f"PASS  criterion {number}: {description}")


def test_criterion_1_non_buchsbaum_cone():
    with criterion(1, "degree-10 cone: shifts, Buchsbaum witness, root space"):
        cone = deg10_cone()
        lam = (9, 11)
        assert not cone.contains(vadd(lam, (3, 7)))
        for g in ((0, 10), (7, 3), (8, 2), (10, 0)):
            assert cone.contains(vadd(lam, g))
        verdict = is_buchsbaum(cone, 24)
        assert verdict.status is Status.NO
        assert verdict.witness == (9, 11)
        rs = root_space(cone, lam)
        assert rs.dimension == 1
        assert rs.space.basis == ((7, -3),)


def test_criterion_2_rational_normal_cones():
    with criterion(2, "degree-d cones: CM, exceptional families d=2,3"):
        for d in (2, 3):
            cone = duple(d)
            assert is_cohen_macaulay(cone, 6 * d).status is Status.YES
            assert exceptional_generators(cone, 1, 3 * d) == ((-1, 1),)
            assert exceptional_generators(cone, 2, 3 * d) == ((1, -1),)
            first = tuple(
                sorted(
                    (-1, 1 + m * d)
                    for m in range(3 * d + 2)
                    if -1 + 1 + m * d <= 3 * d
                )
            )
            second = tuple(
                sorted(
                    (1 + m * d, -1)
                    for m in range(3 * d + 2)
                    if m * d <= 3 * d
                )
            )
            assert exceptional_roots(cone, 1, 3 * d) == first
            assert exceptional_roots(cone, 2, 3 * d) == second


def test_criterion_3_cusp_line():
    with criterion(3, "cusp x line: CM, exceptional generators, regeneration"):
        cusp = cusp_line()
        assert is_cohen_macaulay(cusp).status is Status.YES
        assert exceptional_generators(cusp, 1, 6) == ((1, 0),)
        assert exceptional_generators(cusp, 2, 6) == ((0, -1), (3, -1))
        for axis in (1, 2):
            assert regenerate_exceptional(cusp, axis, 6) == exceptional_roots(
                cusp, axis, 6
            )


def test_criterion_4_graded_cone_fingerprints():
    with criterion(4, "graded cone (d=2): Buchsbaum not CM, window data of the closure"):
        closure = duple(2)
        for l in (2, 3):
            cone = graded_cone(2, l)
            assert is_buchsbaum(cone, 12).status is Status.YES
            assert is_cohen_macaulay(cone, 12).status is Status.NO
            assert fingerprints_equal(
                fingerprint(cone, 8), fingerprint(closure, 8)
            )


def test_criterion_5_hexic_pair():
    with criterion(5, "degree-6 pair: equal window data, distinct semigroups"):
        s1, s2 = hexic_pair()
        assert fingerprints_equal(fingerprint(s1, 8), fingerprint(s2, 8))
        for sg in (s1, s2):
            assert exceptional_generators(sg, 1, 8) == ((-1, 7),)
            assert exceptional_generators(sg, 2, 8) == ((7, -1),)
        assert s1.contains((2, 4)) and not s2.contains((2, 4))
        doubles = lambda sg: {
            tuple(2 * x for x in v) for v in sg.enumerate_box(6)
        }
        assert (6, 6) in doubles(s2)
        assert (6, 6) not in doubles(s1)


def test_criterion_6_rank1_twins():
    with criterion(6, "rank-1 twins: window data, types, Gorenstein"):
        n23, n345 = numerical(2, 3), numerical(3, 4, 5)
        n378, n457 = numerical(3, 7, 8), numerical(4, 5, 7)
        assert fingerprints_equal(fingerprint(n23, 12), fingerprint(n345, 12))
        assert fingerprints_equal(fingerprint(n378, 12), fingerprint(n457, 12))
        assert [cm_type_numerical(s) for s in (n23, n345, n378, n457)] == [
            1,
            2,
            2,
            2,
        ]
        flags = [is_gorenstein_numerical(s) for s in (n23, n345, n378, n457)]
        assert flags == [True, False, False, False]


def test_criterion_7_gorenstein_round_trip():
    with criterion(7, "round trip over all symmetric semigroups, Frobenius <= 30"):
        started = time.perf_counter()
        pool = symmetric = 0
        for gaps in enumerate_numerical_gap_sets(30):
            if not gaps:
                continue
            pool += 1
            if not is_symmetric_gap_set(gaps):
                continue
            symmetric += 1
            frobenius = max(gaps)
            stilde = numerical_semigroup_from_gaps(
                tuple(g for g in gaps if g != frobenius)
            )
            recovered = gorenstein_reconstruct(stilde)
            assert recovered.numerical_profile().gaps == gaps
        elapsed = time.perf_counter() - started
        assert pool >= 2000 and pool == 130502
        assert symmetric == 292
        assert elapsed < 30, f"took {elapsed:.1f}s"


def test_criterion_8_inner_derivations():
    with criterion(8, "degree-0 cocycles collapse to inner on four rings"):
        started = time.perf_counter()
        cases = (
            (numerical(2, 3), 12),
            (numerical(3, 5), 14),
            (cusp_line(), 8),
            (duple(2), 8),
        )
        for sg, degree in cases:
            sol = degree_zero_cocycles(sg, degree)
            assert sol.restricted_equal, (sg.generators, degree)
            assert sol.inner_dimension == sg.n
        elapsed = time.perf_counter() - started
        assert elapsed < 30, f"took {elapsed:.1f}s"


def _random_sparse_derivation(rng, n):
    terms = {}
    for _ in range(rng.randint(1, 4)):
        axis = rng.randint(1, n)
        lam = tuple(
            rng.randint(-1 if i == axis - 1 else 0, 4) for i in range(n)
        )
        coeff = Fraction(rng.randint(-5, 5), rng.randint(1, 3))
        key = (lam, axis)
        terms[key] = terms.get(key, Fraction(0)) + coeff
    return Derivation(n, terms)


def test_criterion_9_property_suites(corpus):
    with criterion(9, "seeded property suites: Jacobi, Leibniz, grading, reduction"):
        rng = random.Random(20240)
        derivations = []
        for _ in range(200):
            n = rng.randint(1, 3)
            derivations.append(
                (
                    _random_sparse_derivation(rng, n),
                    _random_sparse_derivation(rng, n),
                    _random_sparse_derivation(rng, n),
                )
            )
        from semiroot import RingElement

        for x, y, z in derivations:
            jac = (
                x.bracket(y).bracket(z)
                + y.bracket(z).bracket(x)
                + z.bracket(x).bracket(y)
            )
            assert jac.is_zero()
            f = RingElement.monomial(
                x.n, tuple(rng.randint(0, 4) for _ in range(x.n))
            )
            assert x.bracket(y).apply(f) == x.apply(y.apply(f)) - y.apply(
                x.apply(f)
            )

        for name, sg in corpus.items():
            table = root_table(sg, 5)
            roots = sorted(table.entries)
            for _ in range(100):
                lam, mu = rng.choice(roots), rng.choice(roots)
                x = _combo(rng, sg.n, lam, table)
                y = _combo(rng, sg.n, mu, table)
                z = x.bracket(y)
                assert in_derivation_algebra(sg, z).status is Status.YES, name
                target = vadd(lam, mu)
                assert all(s == target for s in z.support())

        for name, sg in corpus.items():
            box = 2 * sg.max_coordinate
            for _ in range(100):
                v = tuple(rng.randint(-1, box) for _ in range(sg.n))
                nonneg = tuple(abs(x) for x in v)
                assert stabilizes(sg, nonneg) == definitional_stabilizes(
                    sg, nonneg, box
                ), name
                for axis in range(1, sg.n + 1):
                    assert is_axis_root(sg, v, axis) == definitional_axis_root(
                        sg, v, axis, box
                    ), name


def _combo(rng, n, lam, table):
    out = Derivation.zero(n)
    for row in table.entries[lam].space.basis:
        c = Fraction(rng.randint(-2, 2))
        if c:
            for axis, entry in enumerate(row, start=1):
                if entry:
                    out = out + Derivation.monomial(n, lam, axis, c * entry)
    return out


def test_criterion_10_split_line_trichotomy(corpus):
    with criterion(10, "split-line trichotomy across the corpus"):
        for name, sg in corpus.items():
            splits = is_product_along_line(sg)
            table = root_table(sg, 4)
            has_negative = any(sum(lam) < 0 for lam in table.entries)
            full_cartan = derived_cartan_dimension(sg, 4) == sg.n
            assert splits == has_negative == full_cartan, (
                name,
                splits,
                has_negative,
                full_cartan,
            )
