"""Vanishing conditions, exact elimination and Hilbert functions of point sets."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

from .errors import DuplicatePointError, InternalConsistencyError
from .geometry import ProjPoint
from .poly import HomPoly, Monomial, evaluate, monomial_count, monomials


@dataclass(frozen=True)
class ExactMatrix:
    """Rows indexed by points, columns by degree-k monomials in graded-lex order."""

    rows: tuple[tuple[Fraction, ...], ...]
    ncols: int
    columns: tuple[Monomial, ...] = ()

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], ncols: int | None = None) -> ExactMatrix:
        rows = tuple(tuple(Fraction(v) for v in r) for r in rows)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged matrix")
        return cls(rows, ncols)

    def rank(self) -> int:
        return integer_rank(self.rows, self.ncols)

    def nullity(self) -> int:
        return self.ncols - self.rank()

    def times(self, v: Sequence) -> tuple[Fraction, ...]:
        return tuple(sum((a * b for a, b in zip(row, v)), Fraction(0)) for row in self.rows)


def _powers(t, k: int) -> list:
    out = [t**0]
    for _ in range(k):
        out.append(out[-1] * t)
    return out


def veronese(p: ProjPoint, k: int) -> tuple[Fraction, ...]:
    """Degree-k monomials evaluated at the normalised coordinates of p."""
    px, py, pz = (_powers(t, k) for t in p.coords)
    return tuple(px[a] * py[b] * pz[c] for a, b, c in monomials(k))


def integer_veronese(p: ProjPoint, k: int) -> list[int]:
    """Veronese row at the primitive integer representative of p (same row up to scale)."""
    x, y, z = p.coords
    D = lcm(x.denominator, y.denominator, z.denominator)
    ints = [t.numerator * (D // t.denominator) for t in (x, y, z)]
    g = gcd(*ints)
    px, py, pz = (_powers(t // g, k) for t in ints)
    return [px[a] * py[b] * pz[c] for a, b, c in monomials(k)]


def vanishing_matrix(X: Sequence[ProjPoint], k: int) -> ExactMatrix:
    if k < 0:
        raise ValueError("degree must be nonnegative")
    return ExactMatrix(tuple(veronese(p, k) for p in X), monomial_count(k), monomials(k))


def _integer_rows(rows: Sequence[Sequence]) -> list[list[int]]:
    """Scale each row by the lcm of its denominators (rank and null space unchanged)."""
    out = []
    for row in rows:
        row = [Fraction(v) for v in row]
        den = lcm(*(v.denominator for v in row)) if row else 1
        out.append([v.numerator * (den // v.denominator) for v in row])
    return out


def rref(rows: Sequence[Sequence[Fraction]], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form and pivot columns.

    Elimination runs fraction-free on integer-scaled rows, dividing each
    updated row by the gcd of its entries, with the smallest-magnitude
    candidate chosen as pivot.  Rows are normalised to pivot 1 at the end;
    the RREF is unique, so the pivot rule never changes the result.
    """
    M = _integer_rows(rows)
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == len(M):
            break
        candidates = [i for i in range(r, len(M)) if M[i][c]]
        if not candidates:
            continue
        best = min(candidates, key=lambda i: abs(M[i][c]))
        M[r], M[best] = M[best], M[r]
        top = M[r]
        p = top[c]
        for i in range(len(M)):
            a = M[i][c]
            if i != r and a:
                row = [p * u - a * t for u, t in zip(M[i], top)]
                g = gcd(*row)
                M[i] = [v // g for v in row] if g > 1 else row
        pivots.append(c)
        r += 1
    R = [[Fraction(v, M[i][pc]) for v in M[i]] for i, pc in enumerate(pivots)]
    return R, pivots


def null_space(M: ExactMatrix | Sequence[Sequence], ncols: int | None = None) -> list[tuple[Fraction, ...]]:
    """Basis of the right null space.

    One vector per free column, in increasing column order; the free entry
    is 1 and the pivot entries are read off the reduced rows.
    """
    if not isinstance(M, ExactMatrix):
        M = ExactMatrix.from_rows(M, ncols)
    R, pivots = rref(M.rows, M.ncols)
    pivot_set = set(pivots)
    basis = []
    for f in range(M.ncols):
        if f in pivot_set:
            continue
        v = [Fraction(0)] * M.ncols
        v[f] = Fraction(1)
        for row, pc in zip(R, pivots):
            v[pc] = -row[f]
        basis.append(tuple(v))
    return basis


def integer_rank(rows: Sequence[Sequence[Fraction]], ncols: int) -> int:
    """Rank by fraction-free (Bareiss) elimination on integer-scaled rows."""
    return _bareiss_rank(_integer_rows(rows), ncols)


def _bareiss_rank(rows: list[list[int]], ncols: int) -> int:
    M = [row for row in rows if any(row)]
    rank, prev = 0, 1
    for c in range(ncols):
        if rank == len(M):
            break
        candidates = [i for i in range(rank, len(M)) if M[i][c]]
        if not candidates:
            continue
        best = min(candidates, key=lambda i: abs(M[i][c]))
        M[rank], M[best] = M[best], M[rank]
        p, top = M[rank][c], M[rank]
        for i in range(rank + 1, len(M)):
            a = M[i][c]
            M[i] = [(p * u - a * t) // prev for u, t in zip(M[i], top)]
        prev = p
        rank += 1
    return rank


@dataclass(frozen=True)
class LinearReport:
    """Degree-k slice of the vanishing ideal of a finite point set."""

    degree: int
    rank: int
    nullity: int
    basis: tuple[HomPoly, ...]

    @property
    def hilbert(self) -> int:
        return self.rank


def curves_through(X: Sequence[ProjPoint], k: int) -> LinearReport:
    """All degree-k forms vanishing on X, as a basis, with rank and nullity."""
    ncols = monomial_count(k)
    # row scaling leaves the null space alone, so integer rows are used
    vectors = null_space([integer_veronese(p, k) for p in X], ncols)
    basis = tuple(HomPoly.from_coefficients(k, v) for v in vectors)
    for P in basis:
        for p in X:
            if evaluate(P, p) != 0:
                raise InternalConsistencyError(f"basis curve {P} does not vanish at {p}")
    nullity = len(basis)
    return LinearReport(k, ncols - nullity, nullity, basis)


def hilbert(X: Sequence[ProjPoint], k: int) -> int:
    """Number of independent conditions X imposes on degree-k forms."""
    if k < 0:
        return 0
    return _bareiss_rank([integer_veronese(p, k) for p in X], monomial_count(k))


@dataclass(frozen=True)
class IndependenceReport:
    degree: int
    size: int
    rank: int
    rank_with_extra: int

    @property
    def independent(self) -> bool:
        return self.rank == self.size

    @property
    def minimally_redundant(self) -> bool:
        return self.independent and self.rank_with_extra == self.size


def independence_report(X: Sequence[ProjPoint], extra: ProjPoint, k: int) -> IndependenceReport:
    X = list(X)
    if extra in X:
        raise DuplicatePointError(f"{extra} already belongs to the point set")
    return IndependenceReport(k, len(X), hilbert(X, k), hilbert(X + [extra], k))
