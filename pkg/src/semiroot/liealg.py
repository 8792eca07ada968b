"""Sparse exact brackets of monomial derivations and the cocycle solver.

A derivation is stored as a rational linear combination of the monomial
derivations t^v t_i d/dt_i (keys are (exponent, axis) pairs).  Brackets,
evaluation on ring elements, and membership in the derivation algebra of
a semigroup ring are all exact.

`degree_zero_cocycles` sets up the grade-preserving Lie-algebra
derivation equations over a degree window and solves them over Q,
comparing the solution space against the adjoint (inner) derivations
after projecting away the window boundary.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from . import lattice
from .classify import Status, Verdict, require_standard
from .errors import DimensionMismatchError, NoRootsError
from .lattice import IntVector, RationalSubspace
from .roots import RootTable, is_axis_root, root_table
from .semigroup import AffineSemigroup, unit_vector, vadd


def _term_valid(n: int, lam: IntVector, axis: int) -> bool:
    """t^lam t_axis d_axis is polynomial iff lam + e_axis is nonnegative."""
    return all(
        x + (1 if i == axis - 1 else 0) >= 0 for i, x in enumerate(lam)
    ) and 1 <= axis <= n


class RingElement:
    """Sparse Laurent combination of monomials t^s."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=None):
        self.n = n
        clean = {}
        for s, c in (terms or {}).items():
            s = tuple(int(x) for x in s)
            if len(s) != n:
                raise DimensionMismatchError(f"monomial {s} in dimension {n}")
            c = Fraction(c)
            if c:
                clean[s] = clean.get(s, Fraction(0)) + c
        self.terms = {s: c for s, c in sorted(clean.items()) if c}

    @classmethod
    def monomial(cls, n: int, s, coeff=1) -> "RingElement":
        return cls(n, {tuple(s): Fraction(coeff)})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        return (
            isinstance(other, RingElement)
            and self.n == other.n
            and self.terms == other.terms
        )

    def __add__(self, other):
        merged = dict(self.terms)
        for s, c in other.terms.items():
            merged[s] = merged.get(s, Fraction(0)) + c
        return RingElement(self.n, merged)

    def __sub__(self, other):
        merged = dict(self.terms)
        for s, c in other.terms.items():
            merged[s] = merged.get(s, Fraction(0)) - c
        return RingElement(self.n, merged)

    def __repr__(self):
        return f"RingElement({self.terms})"


class Derivation:
    """Sparse rational combination of monomial derivations."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=None):
        self.n = n
        clean = {}
        for (lam, axis), c in (terms or {}).items():
            lam = tuple(int(x) for x in lam)
            axis = int(axis)
            if len(lam) != n:
                raise DimensionMismatchError(f"exponent {lam} in dimension {n}")
            if not _term_valid(n, lam, axis):
                raise ValueError(
                    f"monomial derivation at {lam} along axis {axis} "
                    "is not polynomial"
                )
            c = Fraction(c)
            if c:
                key = (lam, axis)
                clean[key] = clean.get(key, Fraction(0)) + c
        self.terms = {k: c for k, c in sorted(clean.items()) if c}

    @classmethod
    def monomial(cls, n: int, lam, axis: int, coeff=1) -> "Derivation":
        return cls(n, {(tuple(lam), axis): Fraction(coeff)})

    @classmethod
    def zero(cls, n: int) -> "Derivation":
        return cls(n, {})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        return (
            isinstance(other, Derivation)
            and self.n == other.n
            and self.terms == other.terms
        )

    def __add__(self, other):
        self._check(other)
        merged = dict(self.terms)
        for k, c in other.terms.items():
            merged[k] = merged.get(k, Fraction(0)) + c
        return Derivation(self.n, merged)

    def __sub__(self, other):
        self._check(other)
        merged = dict(self.terms)
        for k, c in other.terms.items():
            merged[k] = merged.get(k, Fraction(0)) - c
        return Derivation(self.n, merged)

    def __rmul__(self, scalar):
        c = Fraction(scalar)
        return Derivation(self.n, {k: c * v for k, v in self.terms.items()})

    def _check(self, other):
        if not isinstance(other, Derivation) or other.n != self.n:
            raise DimensionMismatchError("mixed dimensions in derivation op")

    def support(self) -> tuple[IntVector, ...]:
        """Exponents carrying at least one nonzero term, sorted."""
        return tuple(sorted({lam for lam, _ in self.terms}))

    def components(self) -> dict[IntVector, tuple[Fraction, ...]]:
        """Coefficient vector (by axis) for each exponent in the support."""
        comps: dict[IntVector, list[Fraction]] = {}
        for (lam, axis), c in self.terms.items():
            comps.setdefault(lam, [Fraction(0)] * self.n)[axis - 1] = c
        return {lam: tuple(v) for lam, v in sorted(comps.items())}

    def bracket(self, other: "Derivation") -> "Derivation":
        """Lie bracket, termwise on monomial derivations.

        [t^a t_i d_i, t^b t_j d_j] = b_i t^{a+b} t_j d_j - a_j t^{a+b} t_i d_i.
        """
        self._check(other)
        merged: dict[tuple[IntVector, int], Fraction] = {}
        for (a, i), ca in self.terms.items():
            for (b, j), cb in other.terms.items():
                c = ca * cb
                s = vadd(a, b)
                if b[i - 1]:
                    key = (s, j)
                    merged[key] = merged.get(key, Fraction(0)) + c * b[i - 1]
                if a[j - 1]:
                    key = (s, i)
                    merged[key] = merged.get(key, Fraction(0)) - c * a[j - 1]
        return Derivation(self.n, {k: v for k, v in merged.items() if v})

    def apply(self, f: RingElement) -> RingElement:
        """Evaluate on a ring element: t^a t_i d_i sends t^s to s_i t^{a+s}."""
        if f.n != self.n:
            raise DimensionMismatchError("mixed dimensions in apply")
        out: dict[IntVector, Fraction] = {}
        for (a, i), c in self.terms.items():
            for s, cs in f.terms.items():
                if s[i - 1]:
                    key = vadd(a, s)
                    out[key] = out.get(key, Fraction(0)) + c * cs * s[i - 1]
        return RingElement(self.n, out)

    def __repr__(self):
        parts = [f"{c}*D[{list(lam)},{ax}]" for (lam, ax), c in self.terms.items()]
        return " + ".join(parts) if parts else "0"


def in_derivation_algebra(
    sg: AffineSemigroup, d: Derivation, bound: int | None = None
) -> Verdict:
    """Exact membership of a derivation in the algebra of the semigroup ring.

    Componentwise per exponent: the coefficient vector must be orthogonal
    to every generator whose shift leaves S.  A NO carries the violated
    generator (a member) as witness; the note names the offending exponent.
    """
    if d.n != sg.n:
        raise DimensionMismatchError("derivation dimension mismatch")
    for lam, coeffs in d.components().items():
        for g in sg.generators:
            pairing = sum(c * x for c, x in zip(coeffs, g))
            if pairing and not sg.contains(vadd(lam, g)):
                return Verdict(
                    Status.NO,
                    bound or 0,
                    g,
                    f"component at {lam} moves the member {g} out of S",
                )
    return Verdict(Status.YES, bound or 0)


def is_product_along_line(sg: AffineSemigroup) -> bool:
    """Whether S splits off a free axis after permuting coordinates.

    Equivalent to some negative unit vector being an axis root: stepping
    down along that axis then maps every member with nonzero coordinate
    back into S, which forces both the unit vector to be a member and
    every generator to project into S along that axis.
    """
    require_standard(sg)
    for axis in range(1, sg.n + 1):
        minus_unit = tuple(-x for x in unit_vector(sg.n, axis))
        if is_axis_root(sg, minus_unit, axis):
            # the unit vector itself must then be a member
            assert sg.contains(unit_vector(sg.n, axis))
            return True
    return False


def derived_cartan_dimension(sg: AffineSemigroup, degree: int) -> int:
    """Dimension of the degree-zero part hit by brackets of opposite roots.

    Spans the vectors -<b,v>*c - <c,v>*b over basis pairs b, c of the root
    spaces at v and -v taken from the degree window.
    """
    require_standard(sg)
    table = root_table(sg, degree)
    vectors = []
    for lam, rs in table.entries.items():
        neg = tuple(-x for x in lam)
        partner = table.entries.get(neg)
        if partner is None or lam > neg:
            continue
        for b in rs.space.basis:
            for c in partner.space.basis:
                pairing_b = sum(x * y for x, y in zip(b, lam))
                pairing_c = sum(x * y for x, y in zip(c, lam))
                vec = [
                    -pairing_b * cx - pairing_c * bx for bx, cx in zip(b, c)
                ]
                if any(vec):
                    vectors.append(vec)
    if not vectors:
        return 0
    return lattice.subspace_from_span(vectors, sg.n).dimension


@dataclass(frozen=True)
class CocycleSolution:
    """Solution of the grade-preserving derivation equations on a window.

    `unknown_index` orders the matrix coefficients b[(v, i, m)] of a
    candidate map sending the basis derivation at (v, i) to the
    combination over m.  `restricted_equal` compares the solution space
    with the inner derivations after projecting to exponents of total
    degree at most `core_degree` (window-boundary unknowns are
    underconstrained by construction and must be ignored).
    """

    degree_bound: int
    core_degree: int
    unknown_index: tuple[tuple[IntVector, int, int], ...]
    solution_space: RationalSubspace
    inner_space: RationalSubspace
    restricted_equal: bool

    @property
    def inner_dimension(self) -> int:
        return self.inner_space.dimension


def _monomial_axes(sg: AffineSemigroup, table: RootTable) -> dict:
    """Axes carrying a monomial derivation, per root; validates the shape."""
    axes_of = {}
    for lam, rs in table.entries.items():
        axes = tuple(
            i for i in range(1, sg.n + 1) if is_axis_root(sg, lam, i)
        )
        if len(axes) != rs.dimension:
            raise ValueError(
                f"root space at {lam} is not spanned by monomial "
                "derivations; the cocycle solver needs the Buchsbaum shape"
            )
        axes_of[lam] = axes
    return axes_of


def cocycle_equations(sg: AffineSemigroup, degree: int):
    """Unknown index and normalized integer equations for the window.

    Returns (unknowns, equations) where each equation is a tuple of
    (unknown position, integer coefficient) pairs, gcd-reduced with
    positive leading coefficient, deduplicated and sorted.
    """
    table = root_table(sg, degree)
    axes_of = _monomial_axes(sg, table)
    roots = sorted(axes_of)
    unknowns = [
        (lam, i, m) for lam in roots for i in axes_of[lam] for m in axes_of[lam]
    ]
    if not unknowns:
        raise NoRootsError(f"no root spaces at degree {degree}")
    position = {u: k for k, u in enumerate(unknowns)}
    basis_elems = [(lam, i) for lam in roots for i in axes_of[lam]]

    equations = set()
    for p, (lam, i) in enumerate(basis_elems):
        for mu, j in basis_elems[p:]:
            if (lam, i) == (mu, j):
                continue
            nu = vadd(lam, mu)
            if sum(nu) > degree:
                continue
            if nu not in table.entries:
                # the window contract only imposes pairs whose bracket
                # lands on a root inside the window
                continue
            axes_nu = axes_of[nu]
            rows: dict[int, dict[int, Fraction]] = {}

            def put(axis, unknown, coeff):
                if coeff:
                    row = rows.setdefault(axis, {})
                    k = position[unknown]
                    row[k] = row.get(k, 0) + coeff

            mu_i = mu[i - 1]
            lam_j = lam[j - 1]
            # image of the bracket under the candidate map
            if i == j:
                net = mu_i - lam[i - 1]
                if net:
                    for m in axes_nu:
                        put(m, (nu, i, m), net)
            else:
                if mu_i:
                    for m in axes_nu:
                        put(m, (nu, j, m), mu_i)
                if lam_j:
                    for m in axes_nu:
                        put(m, (nu, i, m), -lam_j)
            # bracket of the image with the untouched side (moved left)
            for m in axes_of[lam]:
                if mu[m - 1]:
                    put(j, (lam, i, m), -mu[m - 1])
                if lam_j:
                    put(m, (lam, i, m), lam_j)
            for m in axes_of[mu]:
                if mu_i:
                    put(m, (mu, j, m), -mu_i)
                if lam[m - 1]:
                    put(i, (mu, j, m), lam[m - 1])
            for row in rows.values():
                cleaned = {k: v for k, v in row.items() if v}
                if cleaned:
                    equations.add(_normalize_equation(cleaned))
    return tuple(unknowns), tuple(sorted(equations, key=lambda e: (len(e), e)))


def _normalize_equation(row: dict[int, int]):
    g = 0
    for v in row.values():
        g = gcd(g, v)
    items = sorted(row.items())
    if g:
        items = [(k, v // g) for k, v in items]
    if items[0][1] < 0:
        items = [(k, -v) for k, v in items]
    return tuple(items)


def _sparse_kernel(equations, width: int) -> list[list[Fraction]]:
    """Kernel basis of a sparse integer system, fraction-free forward pass.

    Pivoting is lexicographic on unknown positions; rows are kept primitive
    integer.  Back-substitution then produces one rational kernel vector
    per free position.
    """
    pivots: dict[int, dict[int, int]] = {}
    for eq in equations:
        row = dict(eq)
        while row:
            lead = min(row)
            pivot = pivots.get(lead)
            if pivot is None:
                g = 0
                for v in row.values():
                    g = gcd(g, v)
                pivots[lead] = {k: v // g for k, v in row.items()}
                break
            a, b = row[lead], pivot[lead]
            merged = {k: v * b for k, v in row.items()}
            for k, v in pivot.items():
                merged[k] = merged.get(k, 0) - v * a
            row = {k: v for k, v in merged.items() if v}
            if row:
                g = 0
                for v in row.values():
                    g = gcd(g, v)
                if g > 1:
                    row = {k: v // g for k, v in row.items()}
    free = [k for k in range(width) if k not in pivots]
    kernel = []
    for f in free:
        vec = [Fraction(0)] * width
        vec[f] = Fraction(1)
        for lead in sorted(pivots, reverse=True):
            pivot = pivots[lead]
            acc = Fraction(0)
            for k, v in pivot.items():
                if k != lead:
                    acc += v * vec[k]
            vec[lead] = -acc / pivot[lead]
        kernel.append(vec)
    return kernel


def degree_zero_cocycles(sg: AffineSemigroup, degree: int) -> CocycleSolution:
    """Solve the grade-preserving derivation equations on a degree window.

    The inner space is spanned by the adjoint actions of the degree-zero
    basis derivations: ad(D_k) scales the basis derivation at (v, i) by
    v_k, i.e. b[(v, i, i)] = v_k and zero off-diagonal.
    """
    require_standard(sg)
    unknowns, equations = cocycle_equations(sg, degree)
    width = len(unknowns)
    kernel = _sparse_kernel(equations, width)
    solution = lattice.subspace_from_span(kernel, width)
    inner_rows = []
    for k in range(sg.n):
        row = [Fraction(0)] * width
        for pos, (lam, i, m) in enumerate(unknowns):
            if i == m:
                row[pos] = Fraction(lam[k])
        inner_rows.append(row)
    inner = lattice.subspace_from_span(inner_rows, width)
    core_degree = degree // 2
    core_cols = [
        pos for pos, (lam, _, _) in enumerate(unknowns) if sum(lam) <= core_degree
    ]
    proj_solution = _project(solution, core_cols)
    proj_inner = _project(inner, core_cols)
    return CocycleSolution(
        degree_bound=degree,
        core_degree=core_degree,
        unknown_index=tuple(unknowns),
        solution_space=solution,
        inner_space=inner,
        restricted_equal=proj_solution == proj_inner,
    )


def _project(space: RationalSubspace, cols: list[int]) -> RationalSubspace:
    rows = [[row[c] for c in cols] for row in space.basis]
    return lattice.subspace_from_span(rows, len(cols))
