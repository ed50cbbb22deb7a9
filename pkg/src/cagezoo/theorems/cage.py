"""Verifiers for the cage theorem and its corollaries.

Each verifier returns a frozen report whose ``passed`` property is the
verdict; nothing here raises on a failed verdict, only on bad input.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ..errors import PreconditionError, SquareCageRequiredError
from ..geometry import Cage, Line, ProjPoint, collinear, grid_cage
from ..linalg import curves_through, hilbert
from ..nodesets import (
    QUASI,
    SUPRA_QUASI,
    NodeSet,
    classify,
    diagonal,
    full_grid,
    nondiagonal,
)
from ..poly import HomPoly, divide_by_linear, evaluate, monomial_count, product


def expected_caged_nullity(d: int, e: int) -> int:
    """Dimension of {lambda*R + B*Q : deg Q = d - e}."""
    return 1 + monomial_count(d - e)


def _point_off_nodes(cage: Cage, line: Line) -> ProjPoint:
    R = cage.red_product
    return next(p for p in line.points() if evaluate(R, p) != 0)


def reduce_caged_curve(cage: Cage, A: NodeSet, P: HomPoly) -> tuple[Fraction, HomPoly] | None:
    """Write P = lambda*R + B*Q by peeling off blue lines one at a time.

    Blue lines are taken in decreasing order of how many members of A they
    carry.  On the first line P agrees with a multiple of R at its d nodes
    and at one extra point, so P - lambda*R is divisible by that blue form;
    each later quotient has more zeros on the next blue line than its
    degree and is divisible again.  Returns None as soon as a division
    fails, which would contradict the theorem.
    """
    order = sorted(range(cage.e), key=lambda j: (-A.blue_counts()[j], j))
    R = cage.red_product
    first = cage.blues[order[0]]
    w = _point_off_nodes(cage, first)
    lam = evaluate(P, w) / evaluate(R, w)
    T = P - R * lam
    for j in order:
        T = divide_by_linear(T, cage.blues[j].form)
        if T is None:
            return None
    return lam, T


@dataclass(frozen=True)
class CagedDimensionReport:
    d: int
    e: int
    size: int
    rank: int
    nullity: int
    expected_nullity: int
    all_nodes_vanish: bool
    reduction_ok: bool
    basis: tuple[HomPoly, ...]

    @property
    def independent(self) -> bool:
        return self.rank == self.size

    @property
    def passed(self) -> bool:
        return (
            self.all_nodes_vanish
            and self.reduction_ok
            and self.independent
            and self.nullity == self.expected_nullity
        )


def verify_caged_dimension(cage: Cage, A: NodeSet) -> CagedDimensionReport:
    """Degree-d curves through a supra-quasi-triangular set pass through every node."""
    if SUPRA_QUASI not in classify(A):
        raise PreconditionError(f"node set with blue profile {A.blue_profile()} is not supra-quasi-triangular")
    d, e = cage.d, cage.e
    report = curves_through(cage.points(A), d)
    nodes = cage.all_nodes()
    vanish = all(evaluate(P, p) == 0 for P in report.basis for p in nodes)
    B = cage.blue_product
    R = cage.red_product
    reduction_ok = True
    for P in report.basis:
        parts = reduce_caged_curve(cage, A, P)
        if parts is None or R * parts[0] + B * parts[1] != P:
            reduction_ok = False
            break
    return CagedDimensionReport(
        d, e, len(A), report.rank, report.nullity, expected_caged_nullity(d, e),
        vanish, reduction_ok, report.basis,
    )


@dataclass(frozen=True)
class LowerBoundReport:
    e: int
    size: int
    nullities: tuple[int, ...]  # indexed by degree 0 .. e-1

    @property
    def passed(self) -> bool:
        return not any(self.nullities)


def verify_lower_bound(cage: Cage, T: NodeSet) -> LowerBoundReport:
    """No nonzero form of degree below e vanishes on a quasi-triangular set."""
    if QUASI not in classify(T):
        raise PreconditionError(f"node set with blue profile {T.blue_profile()} is not quasi-triangular")
    pts = cage.points(T)
    nullities = tuple(monomial_count(k) - hilbert(pts, k) for k in range(cage.e))
    return LowerBoundReport(cage.e, len(T), nullities)


@dataclass(frozen=True)
class NinthNodeRecord:
    node: tuple[int, int]
    nullity: int
    vanishes: bool
    hilbert_without: int
    hilbert_with: int

    @property
    def passed(self) -> bool:
        return self.vanishes and self.nullity == 2 and self.hilbert_with == self.hilbert_without


@dataclass(frozen=True)
class NinthNodeReport:
    records: tuple[NinthNodeRecord, ...]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.records)


def verify_ninth_node(cage: Cage) -> NinthNodeReport:
    """Every cubic through eight nodes of a (3x3) cage passes through the ninth."""
    if (cage.d, cage.e) != (3, 3):
        raise PreconditionError(f"expected a (3x3) cage, got ({cage.d}x{cage.e})")
    nodes = cage.all_nodes()
    h_all = hilbert(nodes, 3)
    records = []
    for idx, n in enumerate(nodes):
        others = nodes[:idx] + nodes[idx + 1 :]
        rep = curves_through(others, 3)
        vanishes = all(evaluate(P, n) == 0 for P in rep.basis)
        records.append(
            NinthNodeRecord((idx // 3 + 1, idx % 3 + 1), rep.nullity, vanishes, rep.rank, h_all)
        )
    return NinthNodeReport(tuple(records))


@dataclass(frozen=True)
class RemarkReport:
    curve: HomPoly
    line: Line
    kept: tuple[tuple[int, int], ...]
    vanishes_on_kept: bool
    value_at_p42: Fraction
    kept_is_supra_quasi: bool

    @property
    def violates(self) -> bool:
        return self.vanishes_on_kept and self.value_at_p42 != 0

    @property
    def passed(self) -> bool:
        # a negative result: passing means the counterexample was exhibited
        return self.violates and not self.kept_is_supra_quasi


def remark_counterexample(cage: Cage) -> tuple[HomPoly, RemarkReport]:
    """A quartic through 13 nodes of a (4x4) cage that misses p_42.

    C = R_1 R_2 R_3 L with L through p_41 but not along R_4, so C covers the
    twelve nodes of the first three red lines plus p_41 and none of
    p_42, p_43, p_44.
    """
    if (cage.d, cage.e) != (4, 4):
        raise PreconditionError(f"expected a (4x4) cage, got ({cage.d}x{cage.e})")
    p41 = cage.node(4, 1)
    R4, B1 = cage.reds[3], cage.blues[0]
    L = next(
        Line.through(p41, w)
        for w in (ProjPoint(c) for c in _small_points())
        if w != p41 and not R4.contains(w) and not B1.contains(w)
    )
    C = product([cage.reds[0].form, cage.reds[1].form, cage.reds[2].form, L.form])
    removed = {(4, 2), (4, 3), (4, 4)}
    kept = tuple(sorted(full_grid(4, 4).members - removed))
    vanishes = all(evaluate(C, cage.node(i, j)) == 0 for i, j in kept)
    report = RemarkReport(
        C, L, kept, vanishes, evaluate(C, cage.node(4, 2)),
        SUPRA_QUASI in classify(NodeSet(4, 4, kept)),
    )
    return C, report


def _small_points():
    for s in range(1, 50):
        for x in range(-s, s + 1):
            for y in range(-s, s + 1):
                if max(abs(x), abs(y)) == s:
                    yield (x, y, 1)


@dataclass(frozen=True)
class CorollaryFamilyReport:
    extra_points: int
    nullity: int
    all_nodes_vanish: bool

    @property
    def passed(self) -> bool:
        return self.nullity >= 2 and self.all_nodes_vanish


def corollary_point_count(d: int, e: int) -> int:
    return ((d - e) ** 2 + 3 * (d - e)) // 2


def corollary_family(cage: Cage, A: NodeSet, F: Sequence[ProjPoint]) -> CorollaryFamilyReport:
    """Degree-d curves through A plus points on red lines; all pass through every node."""
    if SUPRA_QUASI not in classify(A):
        raise PreconditionError("node set is not supra-quasi-triangular")
    need = corollary_point_count(cage.d, cage.e)
    if len(F) != need:
        raise PreconditionError(f"need {need} extra points on red lines, got {len(F)}")
    for f in F:
        if not any(R.contains(f) for R in cage.reds):
            raise PreconditionError(f"{f} is not on a red line")
        if cage.is_node(f):
            raise PreconditionError(f"{f} is a node")
    rep = curves_through(cage.points(A) + list(F), cage.d)
    nodes = cage.all_nodes()
    vanish = all(evaluate(P, p) == 0 for P in rep.basis for p in nodes)
    return CorollaryFamilyReport(len(F), rep.nullity, vanish)


def random_red_points(cage: Cage, count: int, seed: int) -> list[ProjPoint]:
    """Distinct non-node points on randomly chosen red lines."""
    rng = random.Random(seed)
    pts: list[ProjPoint] = []
    while len(pts) < count:
        R = rng.choice(cage.reds)
        p, q = R.point_pair()
        t = Fraction(rng.randint(-40, 40), rng.randint(1, 9))
        f = ProjPoint(tuple(a + t * b for a, b in zip(p.coords, q.coords)))
        if not cage.is_node(f) and f not in pts:
            pts.append(f)
    return pts


@dataclass(frozen=True)
class DiagonalReport:
    collinear: bool
    curve_exists: bool
    nullity: int
    witness: HomPoly | None

    @property
    def passed(self) -> bool:
        return self.collinear == self.curve_exists


def diagonal_equivalence(cage: Cage) -> DiagonalReport:
    """Diagonal nodes collinear iff the other nodes lie on a curve of degree d - 1."""
    if not cage.is_square:
        raise SquareCageRequiredError("the diagonal criterion needs a square cage")
    d = cage.d
    if d < 2:
        raise PreconditionError("need d >= 2")
    diag = cage.points(diagonal(d))
    c = True if d == 2 else collinear(diag)
    rep = curves_through(cage.points(nondiagonal(d)), d - 1)
    witness = rep.basis[0].monic() if rep.nullity else None
    return DiagonalReport(c, rep.nullity >= 1, rep.nullity, witness)


@dataclass(frozen=True)
class BacharachRecord:
    k: int
    h_X: int
    h_X1: int
    h_X2_dual: int
    size_X2: int

    @property
    def lhs(self) -> int:
        return self.h_X - self.h_X1

    @property
    def rhs(self) -> int:
        return self.size_X2 - self.h_X2_dual

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs


@dataclass(frozen=True)
class BacharachReport:
    d: int
    e: int
    part: NodeSet
    records: tuple[BacharachRecord, ...]

    @property
    def passed(self) -> bool:
        return all(r.equal for r in self.records)


def bacharach(cage: Cage, X1: NodeSet) -> BacharachReport:
    """Check h_X(k) - h_X1(k) = |X2| - h_X2(d+e-3-k) for 0 <= k <= d+e-3."""
    if (X1.d, X1.e) != (cage.d, cage.e):
        raise PreconditionError("node set and cage dimensions differ")
    X2 = X1.complement()
    pX, p1, p2 = cage.all_nodes(), cage.points(X1), cage.points(X2)
    s = cage.d + cage.e - 3
    records = tuple(
        BacharachRecord(k, hilbert(pX, k), hilbert(p1, k), hilbert(p2, s - k), len(X2))
        for k in range(s + 1)
    )
    return BacharachReport(cage.d, cage.e, X1, records)


def random_partition(d: int, e: int, seed: int) -> NodeSet:
    rng = random.Random(seed)
    return NodeSet(d, e, (m for m in sorted(full_grid(d, e).members) if rng.random() < 0.5))


def collinear_diagonal_grid(d: int, seed: int) -> Cage:
    """A grid cage whose diagonal nodes lie on the line y = a*x + b."""
    rng = random.Random(seed)
    ns = rng.sample(range(-12, 13), d)
    a = rng.choice([-3, -2, -1, 1, 2, 3])
    b = rng.randint(-5, 5)
    return grid_cage(ns, [a * n + b for n in ns])
