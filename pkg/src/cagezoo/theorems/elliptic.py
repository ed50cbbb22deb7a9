"""Chord-and-tangent addition on a plane cubic, in projective coordinates."""

from __future__ import annotations

from ..errors import DegenerateComponentError, PreconditionError, SingularPointError
from ..geometry import ProjPoint, cross, dot
from ..poly import HomPoly, evaluate, gradient_at


def _on_curve(C: HomPoly, *pts: ProjPoint) -> None:
    if C.degree != 3:
        raise PreconditionError(f"expected a cubic, got degree {C.degree}")
    for p in pts:
        if evaluate(C, p) != 0:
            raise PreconditionError(f"{p} is not on the cubic")


def _combine(s, p, t, q) -> ProjPoint:
    return ProjPoint(tuple(s * a + t * b for a, b in zip(p.coords, q.coords)))


def third_intersection(C: HomPoly, p: ProjPoint, q: ProjPoint) -> ProjPoint:
    """Third point where the line pq (the tangent at p if p == q) meets C.

    Along ``s*p + t*q`` the cubic restricts to
    ``s^3 C(p) + s^2 t (grad C(p).q) + s t^2 (grad C(q).p) + t^3 C(q)``;
    with both end coefficients zero the remaining root is read off the
    middle two, so no root finding is involved.
    """
    _on_curve(C, p, q)
    if p != q:
        c21 = sum(g * v for g, v in zip(gradient_at(C, p), q.coords))
        c12 = sum(g * v for g, v in zip(gradient_at(C, q), p.coords))
        if not (c21 or c12):
            raise DegenerateComponentError(f"the line through {p} and {q} lies on the cubic")
        return _combine(c12, p, -c21, q)

    g = gradient_at(C, p)
    if not any(g):
        raise SingularPointError(f"{p} is a singular point of the cubic")
    # a second point w on the tangent line g . X = 0
    for a in (p.coords, (1, 0, 0), (0, 1, 0), (0, 0, 1)):
        w = cross(g, a)
        if any(w) and ProjPoint(w) != p:
            break
    w = ProjPoint(w)
    # C(s p + t w) = t^2 (s grad C(w).p + t C(w))
    c12 = dot(gradient_at(C, w), p.coords)
    c03 = evaluate(C, w)
    if not (c12 or c03):
        raise DegenerateComponentError(f"the tangent line at {p} lies on the cubic")
    return _combine(c03, p, -c12, w)


def ec_add(C: HomPoly, e: ProjPoint, p: ProjPoint, q: ProjPoint) -> ProjPoint:
    """p + q for the group law with identity e: third point of (third point of pq) and e."""
    _on_curve(C, e)
    return third_intersection(C, third_intersection(C, p, q), e)


def ec_neg(C: HomPoly, e: ProjPoint, p: ProjPoint) -> ProjPoint:
    """-p: the third point of p and the third point of e with itself."""
    return third_intersection(C, p, third_intersection(C, e, e))


def weierstrass(a, b) -> HomPoly:
    """y^2 z - x^3 - a x z^2 - b z^3."""
    return HomPoly(3, {(0, 2, 1): 1, (3, 0, 0): -1, (1, 0, 2): -a, (0, 0, 3): -b})


INFINITY = ProjPoint(0, 1, 0)
