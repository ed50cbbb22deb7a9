"""Projective points and lines, cages of lines, and rational conic points."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterator, Sequence

from .errors import (
    CoincidentLinesError,
    GenerationError,
    InvalidPointError,
    NonGenericCageError,
    PreconditionError,
    SingularPointError,
)
from .poly import HomPoly, as_scalar, evaluate, gradient_at, product

Triple = tuple[Fraction, Fraction, Fraction]


def _normalize(v) -> Triple:
    coords = tuple(as_scalar(t) for t in v)
    if len(coords) != 3:
        raise InvalidPointError(f"expected three coordinates, got {len(coords)}")
    lead = next((c for c in coords if c), None)
    if lead is None:
        raise InvalidPointError("(0, 0, 0) is not a projective point")
    return tuple(c / lead for c in coords)


def cross(u: Sequence, v: Sequence) -> Triple:
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def dot(u: Sequence, v: Sequence) -> Fraction:
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


def det3(rows: Sequence[Sequence]) -> Fraction:
    return dot(rows[0], cross(rows[1], rows[2]))


@dataclass(frozen=True)
class ProjPoint:
    """A point of the projective plane; first nonzero coordinate scaled to 1."""

    coords: Triple

    def __init__(self, *coords):
        if len(coords) == 1:
            coords = tuple(coords[0])
        object.__setattr__(self, "coords", _normalize(coords))

    @classmethod
    def affine(cls, x, y) -> ProjPoint:
        return cls(x, y, 1)

    @property
    def is_finite(self) -> bool:
        return self.coords[2] != 0

    def affine_coords(self) -> tuple[Fraction, Fraction]:
        x, y, z = self.coords
        if not z:
            raise InvalidPointError(f"{self} is at infinity")
        return x / z, y / z

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.coords)

    def __repr__(self) -> str:
        return "[" + ":".join(str(c) for c in self.coords) + "]"


@dataclass(frozen=True)
class Line:
    """A line ``a*x + b*y + c*z = 0``; first nonzero coefficient scaled to 1."""

    coeffs: Triple

    def __init__(self, *coeffs):
        if len(coeffs) == 1:
            c = coeffs[0]
            coeffs = c.coefficients() if isinstance(c, HomPoly) else tuple(c)
        try:
            coeffs = _normalize(coeffs)
        except InvalidPointError:
            raise InvalidPointError("the zero form does not define a line") from None
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def through(cls, p: ProjPoint, q: ProjPoint) -> Line:
        c = cross(p.coords, q.coords)
        if not any(c):
            raise CoincidentLinesError(f"{p} and {q} do not span a line")
        return cls(c)

    @property
    def form(self) -> HomPoly:
        return HomPoly.linear(*self.coeffs)

    def __call__(self, p) -> Fraction:
        return dot(self.coeffs, getattr(p, "coords", p))

    def contains(self, p: ProjPoint) -> bool:
        return self(p) == 0

    def point_pair(self) -> tuple[ProjPoint, ProjPoint]:
        """Two distinct points spanning the line."""
        pts = []
        for e in ((1, 0, 0), (0, 1, 0), (0, 0, 1)):
            c = cross(self.coeffs, e)
            if any(c):
                p = ProjPoint(c)
                if p not in pts:
                    pts.append(p)
            if len(pts) == 2:
                return pts[0], pts[1]
        raise AssertionError("a line always has two distinct points")  # pragma: no cover

    def points(self) -> Iterator[ProjPoint]:
        """Rational points ``p + t*q`` for t = 0, 1, -1, 2, -2, ...; then q."""
        p, q = self.point_pair()
        yield p
        t = 1
        while True:
            for s in (t, -t):
                yield ProjPoint(tuple(a + s * b for a, b in zip(p.coords, q.coords)))
            t += 1

    def __repr__(self) -> str:
        return f"Line({self.form})"


def intersect_lines(L1: Line, L2: Line) -> ProjPoint:
    c = cross(L1.coeffs, L2.coeffs)
    if not any(c):
        raise CoincidentLinesError(f"{L1} and {L2} coincide")
    return ProjPoint(c)


def collinear(pts: Sequence[ProjPoint]) -> bool:
    """Exact test that all points lie on one line (coordinate matrix rank <= 2)."""
    pts = list(pts)
    if len(pts) < 3:
        raise PreconditionError("collinearity needs at least three points")
    distinct = list(dict.fromkeys(pts))
    if len(distinct) <= 2:
        return True
    L = Line.through(distinct[0], distinct[1])
    return all(L.contains(p) for p in distinct[2:])


@dataclass(frozen=True)
class Cage:
    """d red lines and e blue lines (d >= e) in general position.

    ``nodes[i][j]`` is red line i meeting blue line j (0-based here; the
    1-based labels p_ij of node sets map to ``nodes[i-1][j-1]``).
    """

    reds: tuple[Line, ...]
    blues: tuple[Line, ...]
    nodes: tuple[tuple[ProjPoint, ...], ...] = field(compare=False)

    @property
    def d(self) -> int:
        return len(self.reds)

    @property
    def e(self) -> int:
        return len(self.blues)

    @property
    def is_square(self) -> bool:
        return self.d == self.e

    @property
    def red_product(self) -> HomPoly:
        return product(L.form for L in self.reds)

    @property
    def blue_product(self) -> HomPoly:
        return product(L.form for L in self.blues)

    def node(self, i: int, j: int) -> ProjPoint:
        """Node p_ij with 1-based indices."""
        return self.nodes[i - 1][j - 1]

    def all_nodes(self) -> list[ProjPoint]:
        return [p for row in self.nodes for p in row]

    def points(self, members) -> list[ProjPoint]:
        """Nodes for 1-based index pairs (a NodeSet or any iterable of pairs)."""
        members = getattr(members, "members", members)
        return [self.node(i, j) for i, j in sorted(members)]

    def is_node(self, p: ProjPoint) -> bool:
        return any(p == q for q in self.all_nodes())

    def lines(self) -> list[Line]:
        return list(self.reds) + list(self.blues)


def build_cage(reds: Sequence, blues: Sequence) -> Cage:
    """Assemble a cage and check genericity.

    Raises NonGenericCageError for repeated lines, coincident nodes, or a
    node lying on a third line of the cage.
    """
    reds = tuple(r if isinstance(r, Line) else Line(r) for r in reds)
    blues = tuple(b if isinstance(b, Line) else Line(b) for b in blues)
    d, e = len(reds), len(blues)
    if not d >= e >= 1:
        raise PreconditionError(f"need d >= e >= 1, got d={d}, e={e}")

    labelled = [("R", i + 1, L) for i, L in enumerate(reds)] + [
        ("B", j + 1, L) for j, L in enumerate(blues)
    ]
    for (c1, i1, L1), (c2, i2, L2) in combinations(labelled, 2):
        if L1 == L2:
            raise NonGenericCageError(f"lines {c1}{i1} and {c2}{i2} coincide")

    nodes = tuple(tuple(intersect_lines(R, B) for B in blues) for R in reds)
    for i, row in enumerate(nodes):
        for j, p in enumerate(row):
            for c, k, L in labelled:
                if (c == "R" and k == i + 1) or (c == "B" and k == j + 1):
                    continue
                if L.contains(p):
                    raise NonGenericCageError(
                        f"node p_{i + 1}{j + 1} = {p} also lies on line {c}{k}"
                    )
    seen: dict[ProjPoint, tuple[int, int]] = {}
    for i, row in enumerate(nodes):
        for j, p in enumerate(row):
            if p in seen:  # pragma: no cover - implied by the third-line test
                raise NonGenericCageError(f"nodes p_{seen[p]} and p_{(i + 1, j + 1)} coincide")
            seen[p] = (i + 1, j + 1)
    return Cage(reds, blues, nodes)


MAX_ATTEMPTS = 1000


def random_line(rng: random.Random, bound: int) -> Line:
    while True:
        c = [rng.randint(-bound, bound) for _ in range(3)]
        if any(c):
            return Line(c)


def random_cage(d: int, e: int, seed: int, bound: int = 10) -> Cage:
    """Rejection-sample a generic cage with integer line coefficients in [-bound, bound]."""
    if not d >= e >= 1:
        raise PreconditionError(f"need d >= e >= 1, got d={d}, e={e}")
    if bound < 1:
        raise PreconditionError("bound must be at least 1")
    rng = random.Random(seed)
    for _ in range(MAX_ATTEMPTS):
        reds = [random_line(rng, bound) for _ in range(d)]
        blues = [random_line(rng, bound) for _ in range(e)]
        try:
            return build_cage(reds, blues)
        except NonGenericCageError:
            continue
    raise GenerationError(f"no generic ({d}x{e}) cage after {MAX_ATTEMPTS} attempts")


def grid_cage(ns: Sequence[int], ms: Sequence[int]) -> Cage:
    """Blue verticals x = n*z and red horizontals y = m*z; node p_ij = (n_j, m_i)."""
    if len(ns) != len(ms):
        raise PreconditionError("grid cages are square: ns and ms need equal length")
    for name, vals in (("ns", ns), ("ms", ms)):
        if len(set(vals)) != len(vals):
            raise NonGenericCageError(f"repeated intercept in {name}={tuple(vals)}")
    reds = [Line(0, 1, -m) for m in ms]
    blues = [Line(1, 0, -n) for n in ns]
    return build_cage(reds, blues)


def conic_point(Q: HomPoly, base: ProjPoint, t) -> ProjPoint:
    """Second intersection of the conic Q with the line through ``base`` of slope t.

    The line joins ``base`` to the point at infinity ``[1:t:0]``; ``t`` may be
    ``math.inf`` (or None) for the vertical direction ``[0:1:0]``.  When the
    line is tangent at ``base`` the double root returns ``base`` itself.
    """
    if Q.degree != 2:
        raise PreconditionError(f"expected a conic, got degree {Q.degree}")
    if evaluate(Q, base) != 0:
        raise PreconditionError(f"base point {base} is not on the conic")
    g = gradient_at(Q, base)
    if not any(g):
        raise SingularPointError(f"{base} is a singular point of the conic")
    if t is None or (isinstance(t, float) and math.isinf(t)):
        w = (Fraction(0), Fraction(1), Fraction(0))
    else:
        w = (Fraction(1), as_scalar(t), Fraction(0))
    if ProjPoint(w) == base:
        raise PreconditionError(f"direction {t} points at the base point {base} itself")
    # Q(base + u*w) = u*(g.w) + u^2*Q(w): second root u = -(g.w)/Q(w)
    qw = evaluate(Q, w)
    gw = dot(g, w)
    if qw == 0 and gw == 0:
        raise SingularPointError(f"the line through {base} in direction {w} lies on the conic")
    return ProjPoint(tuple(qw * b - gw * c for b, c in zip(base.coords, w)))


UNIT_CIRCLE = HomPoly(2, {(2, 0, 0): 1, (0, 2, 0): 1, (0, 0, 2): -1})
