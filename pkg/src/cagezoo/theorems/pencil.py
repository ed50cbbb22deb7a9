"""The pencil of caged curves lambda*R + mu*B of a square cage, and its tangents."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from ..errors import (
    InternalConsistencyError,
    NodeInputError,
    NotIncidentError,
    PreconditionError,
    SquareCageRequiredError,
)
from ..geometry import Cage, Line, ProjPoint, dot
from ..poly import HomPoly, as_scalar, evaluate


def _normalize_pair(lam, mu) -> tuple[Fraction, Fraction]:
    lam, mu = as_scalar(lam), as_scalar(mu)
    if lam:
        return Fraction(1), mu / lam
    if mu:
        return Fraction(0), Fraction(1)
    raise PreconditionError("[0:0] is not a pencil class")


@dataclass(frozen=True)
class PencilClass:
    """A proportionality class [lambda : mu] in the pencil of a square cage."""

    cage: Cage = field(repr=False, compare=False)
    lam: Fraction
    mu: Fraction

    def __init__(self, cage: Cage, lam, mu):
        lam, mu = _normalize_pair(lam, mu)
        object.__setattr__(self, "cage", cage)
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "mu", mu)

    @property
    def curve(self) -> HomPoly:
        return pencil(self.cage, self.lam, self.mu)

    def __repr__(self) -> str:
        return f"[{self.lam}:{self.mu}]"


def _require_square(cage: Cage) -> None:
    if not cage.is_square:
        raise SquareCageRequiredError(
            f"the pencil lambda*R + mu*B needs a square cage, got ({cage.d}x{cage.e}); "
            "use corollary_family for d > e"
        )


def pencil(cage: Cage, lam, mu) -> HomPoly:
    _require_square(cage)
    lam, mu = as_scalar(lam), as_scalar(mu)
    if not (lam or mu):
        raise PreconditionError("(lambda, mu) = (0, 0)")
    return cage.red_product * lam + cage.blue_product * mu


def pencil_through_point(cage: Cage, p: ProjPoint) -> PencilClass:
    """The unique caged curve of the pencil through a non-node point p."""
    _require_square(cage)
    if cage.is_node(p):
        raise NodeInputError(f"{p} is a node: every curve of the pencil passes through it")
    r, b = evaluate(cage.red_product, p), evaluate(cage.blue_product, p)
    if not (r or b):
        raise InternalConsistencyError(f"{p} lies on a red and a blue line but is not a node")
    return PencilClass(cage, b, -r)


def _node_factors(cage: Cage, i: int, j: int) -> tuple[Fraction, Fraction, ProjPoint]:
    p = cage.node(i, j)
    r = Fraction(1)
    for k, R in enumerate(cage.reds, start=1):
        if k != i:
            r *= R(p)
    b = Fraction(1)
    for k, B in enumerate(cage.blues, start=1):
        if k != j:
            b *= B(p)
    return r, b, p


def node_gradient(cage: Cage, lam, mu, i: int, j: int) -> tuple[Fraction, Fraction, Fraction]:
    """Gradient of lambda*R + mu*B at node p_ij via the product rule.

    Only the factors R_i and B_j vanish at p_ij, so the gradient collapses to
    ``lam * r_ij * grad R_i + mu * b_ij * grad B_j`` where r_ij and b_ij are
    the products of the remaining red and blue forms at the node.
    """
    lam, mu = as_scalar(lam), as_scalar(mu)
    if not (lam or mu):
        raise PreconditionError("(lambda, mu) = (0, 0)")
    r, b, _ = _node_factors(cage, i, j)
    gR = cage.reds[i - 1].coeffs
    gB = cage.blues[j - 1].coeffs
    return tuple(lam * r * u + mu * b * v for u, v in zip(gR, gB))


def pencil_with_tangent(cage: Cage, i: int, j: int, tau: Line) -> PencilClass:
    """The curve of the pencil whose tangent line at p_ij is tau."""
    _require_square(cage)
    r, b, p = _node_factors(cage, i, j)
    if not tau.contains(p):
        raise NotIncidentError(f"{tau} does not pass through p_{i}{j} = {p}")
    v = next(q for q in tau.point_pair() if q != p)
    gR = cage.reds[i - 1].coeffs
    gB = cage.blues[j - 1].coeffs
    return PencilClass(cage, b * dot(gB, v.coords), -r * dot(gR, v.coords))
