"""Exact integer and rational linear algebra.

Everything here is arbitrary precision: integer rows for lattice work
(Hermite normal form, group membership, rank) and `fractions.Fraction`
rows for rational kernels.  All outputs are canonical so results can be
compared structurally: HNF pivots are positive with reduced columns, and
subspace bases are reduced-echelon rows scaled to primitive integer
vectors with positive leading entry.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import DimensionMismatchError

IntVector = tuple[int, ...]
IntMatrix = tuple[IntVector, ...]


def _as_matrix(rows) -> IntMatrix:
    rows = tuple(tuple(int(x) for x in r) for r in rows)
    if not rows:
        raise ValueError("empty matrix")
    width = len(rows[0])
    if any(len(r) != width for r in rows):
        raise DimensionMismatchError("rows of unequal length")
    return rows


def hermite_normal_form(rows) -> tuple[IntMatrix, IntMatrix]:
    """Row-style Hermite normal form.

    Returns (h, u) with u unimodular and u @ rows == h.  Nonzero rows of h
    come first with strictly increasing pivot columns, pivots positive, and
    entries above each pivot reduced into [0, pivot).  Zero rows keep h the
    same shape as the input.
    """
    m = [list(r) for r in _as_matrix(rows)]
    nrows, ncols = len(m), len(m[0])
    u = [[int(i == j) for j in range(nrows)] for i in range(nrows)]
    row = 0
    for col in range(ncols):
        if row == nrows:
            break
        # euclidean elimination below the working row
        while True:
            nonzero = [i for i in range(row, nrows) if m[i][col] != 0]
            if not nonzero:
                break
            piv = min(nonzero, key=lambda i: (abs(m[i][col]), i))
            if piv != row:
                m[row], m[piv] = m[piv], m[row]
                u[row], u[piv] = u[piv], u[row]
            done = True
            for i in range(row + 1, nrows):
                if m[i][col] != 0:
                    q = m[i][col] // m[row][col]
                    for j in range(ncols):
                        m[i][j] -= q * m[row][j]
                    for j in range(nrows):
                        u[i][j] -= q * u[row][j]
                    if m[i][col] != 0:
                        done = False
            if done:
                break
        if m[row][col] != 0:
            if m[row][col] < 0:
                m[row] = [-x for x in m[row]]
                u[row] = [-x for x in u[row]]
            for i in range(row):
                q = m[i][col] // m[row][col]
                if q:
                    for j in range(ncols):
                        m[i][j] -= q * m[row][j]
                    for j in range(nrows):
                        u[i][j] -= q * u[row][j]
            row += 1
    return tuple(tuple(r) for r in m), tuple(tuple(r) for r in u)


def lattice_rank(generators) -> int:
    """Rank of the subgroup of Z^n generated by the given vectors."""
    h, _ = hermite_normal_form(generators)
    return sum(1 for r in h if any(r))


def group_contains(generators, v) -> bool:
    """Whether v lies in the subgroup of Z^n generated by the vectors."""
    gens = _as_matrix(generators)
    v = tuple(int(x) for x in v)
    if len(v) != len(gens[0]):
        raise DimensionMismatchError(
            f"vector of length {len(v)} against dimension {len(gens[0])}"
        )
    h, _ = hermite_normal_form(gens)
    return hnf_solves(h, v)


def hnf_solves(h: IntMatrix, v: IntVector) -> bool:
    """Integer back-substitution of v against an HNF basis h."""
    residual = list(v)
    for hrow in h:
        pivot_col = next((j for j, x in enumerate(hrow) if x), None)
        if pivot_col is None:
            continue
        q, r = divmod(residual[pivot_col], hrow[pivot_col])
        if r:
            return False
        if q:
            for j in range(pivot_col, len(residual)):
                residual[j] -= q * hrow[j]
    return not any(residual)


def _primitive(row) -> IntVector:
    """Scale a rational row to a primitive integer vector, leading entry > 0."""
    denom = 1
    for x in row:
        denom = denom * x.denominator // gcd(denom, x.denominator)
    ints = [int(x * denom) for x in row]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g:
        ints = [x // g for x in ints]
    lead = next((x for x in ints if x), 0)
    if lead < 0:
        ints = [-x for x in ints]
    return tuple(ints)


def rational_rref(rows: list[list[Fraction]]) -> list[list[Fraction]]:
    """Reduced row echelon form over Q; zero rows dropped.

    Pivoting is lexicographic (first nonzero column, first available row),
    never by magnitude — arithmetic is exact so there is nothing to balance.
    """
    m = [list(r) for r in rows]
    if not m:
        return []
    ncols = len(m[0])
    echelon: list[list[Fraction]] = []
    row = 0
    for col in range(ncols):
        piv = next((i for i in range(row, len(m)) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[row], m[piv] = m[piv], m[row]
        inv = Fraction(1) / m[row][col]
        m[row] = [x * inv for x in m[row]]
        for i in range(len(m)):
            if i != row and m[i][col] != 0:
                factor = m[i][col]
                m[i] = [a - factor * b for a, b in zip(m[i], m[row])]
        row += 1
        if row == len(m):
            break
    for r in m[:row]:
        echelon.append(r)
    return echelon


@dataclass(frozen=True)
class RationalSubspace:
    """A subspace of Q^n in canonical form.

    The basis rows are the reduced echelon basis scaled to primitive integer
    vectors (positive leading entry), so equal subspaces compare equal.
    """

    ambient: int
    basis: tuple[IntVector, ...]

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def contains_vector(self, v) -> bool:
        residual = [Fraction(x) for x in v]
        for row in self.basis:
            pivot_col = next(j for j, x in enumerate(row) if x)
            if residual[pivot_col] != 0:
                factor = residual[pivot_col] / row[pivot_col]
                residual = [a - factor * b for a, b in zip(residual, row)]
        return not any(residual)

    def is_subspace_of(self, other: "RationalSubspace") -> bool:
        return all(other.contains_vector(row) for row in self.basis)


def subspace_from_span(rows, ambient: int) -> RationalSubspace:
    """Canonical subspace spanned by the given rational rows."""
    frac_rows = [[Fraction(x) for x in r] for r in rows if any(r)]
    echelon = rational_rref(frac_rows)
    return RationalSubspace(ambient, tuple(_primitive(r) for r in echelon))


def solve_rational_kernel(constraints, ambient: int) -> RationalSubspace:
    """The subspace {b in Q^n : <b, s> = 0 for every constraint row s}."""
    rows = [[Fraction(x) for x in r] for r in constraints]
    for r in rows:
        if len(r) != ambient:
            raise DimensionMismatchError(
                f"constraint of length {len(r)} in dimension {ambient}"
            )
    echelon = rational_rref([r for r in rows if any(r)])
    pivot_cols = []
    for r in echelon:
        pivot_cols.append(next(j for j, x in enumerate(r) if x))
    free_cols = [j for j in range(ambient) if j not in pivot_cols]
    basis = []
    for free in free_cols:
        vec = [Fraction(0)] * ambient
        vec[free] = Fraction(1)
        for r, piv in zip(echelon, pivot_cols):
            vec[piv] = -r[free]
        basis.append(vec)
    return subspace_from_span(basis, ambient)
