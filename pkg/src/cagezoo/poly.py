"""Exact homogeneous polynomials in x, y, z over the rationals.

Scalars are :class:`fractions.Fraction` values.  A :class:`HomPoly` carries
its degree explicitly, so the zero polynomial of degree 3 and the zero
polynomial of degree 2 are different objects, and sums are only defined
between polynomials of equal degree.

Monomials are exponent triples ``(a, b, c)`` standing for ``x^a y^b z^c``
and are ordered graded-lexicographically: within a fixed degree, larger
``a`` first, then larger ``b``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import lcm
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence

from .errors import (
    DegreeMismatchError,
    DegreeOverflowError,
    InvalidDivisorError,
    InvalidPointError,
)

Scalar = Fraction
Monomial = tuple[int, int, int]

_VARS = ("x", "y", "z")


def as_scalar(value) -> Fraction:
    """Convert ints, Fractions and ``"num/den"`` strings to a Fraction.

    Floats are rejected: silently importing a binary rounding error would
    defeat the point of exact verification.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, (int, str)):
        return Fraction(value)
    if isinstance(value, float):
        raise TypeError(f"refusing inexact float scalar {value!r}")
    # numpy integers, gmpy2 values and the like
    return Fraction(value)


@lru_cache(maxsize=None)
def monomials(k: int) -> tuple[Monomial, ...]:
    """All degree-k exponent triples in graded-lex order."""
    if k < 0:
        return ()
    return tuple((a, b, k - a - b) for a in range(k, -1, -1) for b in range(k - a, -1, -1))


def monomial_count(k: int) -> int:
    return (k + 1) * (k + 2) // 2 if k >= 0 else 0


@lru_cache(maxsize=None)
def _monomial_index(k: int) -> dict[Monomial, int]:
    return {m: i for i, m in enumerate(monomials(k))}


class HomPoly:
    """Homogeneous polynomial of a fixed degree with rational coefficients.

    Instances are immutable and hashable.  ``terms`` never stores zero
    coefficients and is kept in graded-lex order.
    """

    __slots__ = ("degree", "_terms", "_hash", "_scaled")

    def __init__(self, degree: int, terms: Mapping[Monomial, object] | None = None):
        if degree < 0:
            raise DegreeMismatchError(f"negative degree {degree}")
        cleaned: dict[Monomial, Fraction] = {}
        for mono, coeff in (terms or {}).items():
            mono = tuple(int(e) for e in mono)
            if len(mono) != 3 or min(mono) < 0:
                raise DegreeMismatchError(f"bad exponent triple {mono}")
            if sum(mono) != degree:
                raise DegreeMismatchError(f"monomial {mono} does not have degree {degree}")
            c = as_scalar(coeff)
            if c:
                cleaned[mono] = cleaned.get(mono, Fraction(0)) + c
        index = _monomial_index(degree)
        ordered = sorted(((m, c) for m, c in cleaned.items() if c), key=lambda mc: index[mc[0]])
        self.degree = degree
        self._terms = dict(ordered)
        self._hash = None
        self._scaled = None

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, degree: int) -> HomPoly:
        return cls(degree)

    @classmethod
    def constant(cls, value) -> HomPoly:
        return cls(0, {(0, 0, 0): value})

    @classmethod
    def linear(cls, a, b, c) -> HomPoly:
        """The linear form ``a*x + b*y + c*z``."""
        return cls(1, {(1, 0, 0): a, (0, 1, 0): b, (0, 0, 1): c})

    @classmethod
    def monomial(cls, mono: Monomial, coeff=1) -> HomPoly:
        return cls(sum(mono), {tuple(mono): coeff})

    @classmethod
    def from_coefficients(cls, degree: int, coeffs: Sequence) -> HomPoly:
        """Inverse of :meth:`coefficients`."""
        monos = monomials(degree)
        if len(coeffs) != len(monos):
            raise DegreeMismatchError(
                f"expected {len(monos)} coefficients for degree {degree}, got {len(coeffs)}"
            )
        return cls(degree, dict(zip(monos, coeffs)))

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> Mapping[Monomial, Fraction]:
        return MappingProxyType(self._terms)

    def coefficient(self, mono: Monomial) -> Fraction:
        return self._terms.get(tuple(mono), Fraction(0))

    def coefficients(self) -> tuple[Fraction, ...]:
        """Dense coefficient vector over :func:`monomials` of this degree."""
        return tuple(self._terms.get(m, Fraction(0)) for m in monomials(self.degree))

    def is_zero(self) -> bool:
        return not self._terms

    def leading_coefficient(self) -> Fraction:
        for c in self._terms.values():
            return c
        return Fraction(0)

    def monic(self) -> HomPoly:
        """Scale so that the graded-lex leading coefficient is 1."""
        lead = self.leading_coefficient()
        if lead in (0, 1):
            return self
        return self * (1 / lead)

    def is_proportional(self, other: HomPoly) -> bool:
        """True when both define the same curve (nonzero scalar multiples)."""
        if self.degree != other.degree or self.is_zero() or other.is_zero():
            return False
        if self._terms.keys() != other._terms.keys():
            return False
        a, b = self.leading_coefficient(), other.leading_coefficient()
        return all(c * b == other._terms[m] * a for m, c in self._terms.items())

    # -- arithmetic -------------------------------------------------------

    def _check_degree(self, other: HomPoly) -> None:
        if self.degree != other.degree:
            raise DegreeMismatchError(
                f"cannot add polynomials of degrees {self.degree} and {other.degree}"
            )

    def __add__(self, other: HomPoly) -> HomPoly:
        if not isinstance(other, HomPoly):
            return NotImplemented
        self._check_degree(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, Fraction(0)) + c
        return HomPoly(self.degree, out)

    def __neg__(self) -> HomPoly:
        return HomPoly(self.degree, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other: HomPoly) -> HomPoly:
        if not isinstance(other, HomPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other) -> HomPoly:
        if isinstance(other, HomPoly):
            return multiply(self, other)
        try:
            s = as_scalar(other)
        except (TypeError, ValueError):
            return NotImplemented
        return HomPoly(self.degree, {m: c * s for m, c in self._terms.items()})

    def __rmul__(self, other) -> HomPoly:
        return self.__mul__(other)

    def __pow__(self, n: int) -> HomPoly:
        out = HomPoly.constant(1)
        for _ in range(n):
            out = multiply(out, self)
        return out

    def __call__(self, *point) -> Fraction:
        if len(point) == 1:
            point = point[0]
        return evaluate(self, point)

    # -- identity ---------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, HomPoly):
            return NotImplemented
        return self.degree == other.degree and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.degree, tuple(self._terms.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"HomPoly({self.degree}, {self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for mono, c in self._terms.items():
            factors = []
            for name, e in zip(_VARS, mono):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            body = "*".join(factors)
            mag = abs(c)
            if not body:
                term = str(mag)
            elif mag == 1:
                term = body
            else:
                term = f"{mag}*{body}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, term))
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, term in parts[1:]:
            text += f" {sign} {term}"
        return text


X = HomPoly.linear(1, 0, 0)
Y = HomPoly.linear(0, 1, 0)
Z = HomPoly.linear(0, 0, 1)


def homogenize(affine_terms: Mapping[tuple[int, int], object], d: int) -> HomPoly:
    """Turn ``{(a, b): coeff}`` for ``x^a y^b`` into a degree-d form in x, y, z."""
    terms = {}
    for (a, b), coeff in affine_terms.items():
        if a < 0 or b < 0:
            raise DegreeOverflowError(f"negative exponent in {(a, b)}")
        if a + b > d:
            raise DegreeOverflowError(f"monomial x^{a} y^{b} exceeds degree {d}")
        terms[(a, b, d - a - b)] = coeff
    return HomPoly(d, terms)


def dehomogenize(P: HomPoly) -> dict[tuple[int, int], Fraction]:
    """Set z = 1."""
    return {(a, b): c for (a, b, _), c in P.terms.items()}


def _check_point(v) -> tuple[Fraction, Fraction, Fraction]:
    if len(v) != 3:
        raise InvalidPointError(f"expected a coordinate triple, got {v!r}")
    x, y, z = (as_scalar(t) for t in v)
    if not (x or y or z):
        raise InvalidPointError("(0, 0, 0) is not a projective point")
    return x, y, z


def _scaled_terms(P: HomPoly) -> tuple[int, list[tuple[int, int, int, int]]]:
    if P._scaled is None:
        den = lcm(*(c.denominator for c in P._terms.values())) if P._terms else 1
        P._scaled = (
            den,
            [(a, b, c, q.numerator * (den // q.denominator)) for (a, b, c), q in P._terms.items()],
        )
    return P._scaled


def evaluate(P: HomPoly, v) -> Fraction:
    """Evaluate P at a coordinate triple (or anything exposing ``coords``).

    Runs in integers: with D the common denominator of the coordinates and
    L that of the coefficients, P(v) = (L*P)(D*v) / (L * D^deg).
    """
    x, y, z = _check_point(getattr(v, "coords", v))
    D = lcm(x.denominator, y.denominator, z.denominator)
    X, Y, Z = (t.numerator * (D // t.denominator) for t in (x, y, z))
    L, terms = _scaled_terms(P)
    n = P.degree
    px = [X**i for i in range(n + 1)]
    py = [Y**i for i in range(n + 1)]
    pz = [Z**i for i in range(n + 1)]
    total = sum(q * px[a] * py[b] * pz[c] for a, b, c, q in terms)
    return Fraction(total, L * D**n)


def multiply(P: HomPoly, Q: HomPoly) -> HomPoly:
    out: dict[Monomial, Fraction] = {}
    for (a1, b1, c1), p in P.terms.items():
        for (a2, b2, c2), q in Q.terms.items():
            m = (a1 + a2, b1 + b2, c1 + c2)
            out[m] = out.get(m, Fraction(0)) + p * q
    return HomPoly(P.degree + Q.degree, out)


def product(polys: Iterable[HomPoly]) -> HomPoly:
    out = HomPoly.constant(1)
    for P in polys:
        out = multiply(out, P)
    return out


def _swap_to_front(mono: Monomial, var: int) -> Monomial:
    if var == 0:
        return mono
    m = list(mono)
    m[0], m[var] = m[var], m[0]
    return tuple(m)


def divide_by_linear(P: HomPoly, L: HomPoly) -> HomPoly | None:
    """Exact quotient ``P / L`` for a linear form L, or None if L does not divide P.

    L is written as ``alpha*(v - r)`` where v is its first variable with a
    nonzero coefficient and r is a linear form in the other two.  Horner
    division by ``v - r`` leaves the remainder ``P|_{v=r}``, i.e. P reduced
    modulo L; L divides P exactly when that remainder vanishes identically.
    """
    if L.degree != 1:
        raise InvalidDivisorError(f"divisor must be linear, got degree {L.degree}")
    if L.is_zero():
        raise InvalidDivisorError("division by the zero form")
    coeffs = L.coefficients()  # (x, y, z) in graded-lex order
    var = next(i for i, c in enumerate(coeffs) if c)
    alpha = coeffs[var]
    # Work in swapped variables so that v is the first coordinate.
    swapped = {_swap_to_front(m, var): c for m, c in P.terms.items()}
    rest = list(coeffs)
    rest[0], rest[var] = rest[var], rest[0]
    r = HomPoly.linear(0, -rest[1] / alpha, -rest[2] / alpha)

    n = P.degree
    slices = [dict() for _ in range(n + 1)]
    for (a, b, c), coeff in swapped.items():
        slices[a][(0, b, c)] = coeff
    P_i = [HomPoly(n - i, slices[i]) for i in range(n + 1)]

    if n == 0:
        return None if not P.is_zero() else HomPoly.zero(0)
    q = [None] * n
    q[n - 1] = P_i[n]
    for i in range(n - 1, 0, -1):
        q[i - 1] = P_i[i] + r * q[i]
    remainder = P_i[0] + r * q[0]
    if not remainder.is_zero():
        return None

    out: dict[Monomial, Fraction] = {}
    for i, qi in enumerate(q):
        for (a, b, c), coeff in qi.terms.items():
            out[_swap_to_front((a + i, b, c), var)] = coeff / alpha
    return HomPoly(n - 1, out)


def gradient(P: HomPoly) -> tuple[HomPoly, HomPoly, HomPoly]:
    """Formal partial derivatives (P_x, P_y, P_z).

    A constant has the zero triple of degree-0 polynomials as its gradient.
    """
    if P.degree == 0:
        return (HomPoly.zero(0),) * 3
    parts = []
    for var in range(3):
        out = {}
        for mono, c in P.terms.items():
            e = mono[var]
            if e:
                m = list(mono)
                m[var] -= 1
                out[tuple(m)] = c * e
        parts.append(HomPoly(P.degree - 1, out))
    return tuple(parts)


def gradient_at(P: HomPoly, v) -> tuple[Fraction, Fraction, Fraction]:
    """Gradient of P evaluated at a point."""
    if P.degree == 0:
        return (Fraction(0),) * 3
    return tuple(evaluate(g, v) for g in gradient(P))
