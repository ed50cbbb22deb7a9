"""Mystic 2d-grams: cages cut out by alternately coloured polygons on a conic."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from ..errors import InternalConsistencyError, PreconditionError, TooSmallError
from ..geometry import Cage, Line, ProjPoint, build_cage
from ..linalg import curves_through
from ..nodesets import NodeSet
from ..poly import HomPoly, evaluate, multiply


@dataclass(frozen=True)
class GramResult:
    cage: Cage
    vertex_nodes: tuple[ProjPoint, ...]
    new_nodes: tuple[ProjPoint, ...]
    vertex_set: NodeSet
    qstar: HomPoly | None
    nullity: int
    new_on_qstar: bool
    product_vanishes: bool

    @property
    def d(self) -> int:
        return self.cage.d

    @property
    def unique(self) -> bool:
        return self.nullity == 1

    @property
    def passed(self) -> bool:
        return self.qstar is not None and self.new_on_qstar and self.product_vanishes


def _as_polygons(verts) -> list[list[ProjPoint]]:
    verts = list(verts)
    if verts and isinstance(verts[0], ProjPoint):
        return [verts]
    return [list(poly) for poly in verts]


def polygon_lines(polygons: Sequence[Sequence[ProjPoint]]) -> tuple[list[Line], list[Line]]:
    """Edge k joins vertex k to vertex k+1 (cyclically); odd k red, even k blue."""
    reds, blues = [], []
    for poly in polygons:
        n = len(poly)
        if n < 4 or n % 2:
            raise PreconditionError(f"each polygon needs an even number >= 4 of vertices, got {n}")
        for k in range(n):
            edge = Line.through(poly[k], poly[(k + 1) % n])
            (reds if k % 2 else blues).append(edge)
    return reds, blues


def mystic_gram(Q: HomPoly, verts) -> GramResult:
    """Build the cage of an inscribed 2d-gon and fit a degree d-2 curve to its new nodes.

    ``verts`` is one cyclic list of 2d points on the conic Q, or a list of
    such cycles (each of even length) whose edge counts add up to 2d.
    """
    if Q.degree != 2:
        raise PreconditionError(f"expected a conic, got degree {Q.degree}")
    polygons = _as_polygons(verts)
    flat = [p for poly in polygons for p in poly]
    for p in flat:
        if evaluate(Q, p) != 0:
            raise PreconditionError(f"vertex {p} is not on the conic")
    if len(set(flat)) != len(flat):
        raise PreconditionError("polygon vertices must be distinct")
    d = len(flat) // 2
    if d < 3:
        raise TooSmallError(f"a mystic 2d-gram needs at least six vertices, got {len(flat)}")

    reds, blues = polygon_lines(polygons)
    cage = build_cage(reds, blues)
    vertex_keys = set(flat)
    vertex_idx, new_nodes = [], []
    for i, row in enumerate(cage.nodes, start=1):
        for j, p in enumerate(row, start=1):
            if p in vertex_keys:
                vertex_idx.append((i, j))
            else:
                new_nodes.append(p)
    if len(vertex_idx) != 2 * d:
        raise InternalConsistencyError("every polygon vertex should be a node of its cage")

    rep = curves_through(new_nodes, d - 2)
    qstar = rep.basis[0].monic() if rep.nullity else None
    new_ok = qstar is not None and all(evaluate(qstar, p) == 0 for p in new_nodes)
    prod_ok = qstar is not None and all(
        evaluate(multiply(Q, qstar), p) == 0 for p in cage.all_nodes()
    )
    return GramResult(
        cage,
        tuple(cage.node(i, j) for i, j in vertex_idx),
        tuple(new_nodes),
        NodeSet(d, d, vertex_idx),
        qstar,
        rep.nullity,
        new_ok,
        prod_ok,
    )


def new_node_cycles(result: GramResult) -> list[list[ProjPoint]]:
    """Order the new nodes into alternately coloured cycles.

    Each red and each blue line of an octagram cage carries exactly two new
    nodes, so they split into cycles; a cycle is listed so that its first
    edge runs along a blue line, matching :func:`polygon_lines`.
    """
    cage = result.cage
    d = cage.d
    new = set(result.new_nodes)
    cells = {(i, j) for i in range(1, d + 1) for j in range(1, d + 1) if cage.node(i, j) in new}
    for i in range(1, d + 1):
        if sum(1 for c in cells if c[0] == i) != 2 or sum(1 for c in cells if c[1] == i) != 2:
            raise PreconditionError("new nodes are not two per line; no dual polygon")
    cycles = []
    remaining = set(cells)
    while remaining:
        start = min(remaining)
        cycle = [start]
        along_blue = True
        cur = start
        while True:
            i, j = cur
            if along_blue:
                nxt = next(c for c in cells if c[1] == j and c != cur)
            else:
                nxt = next(c for c in cells if c[0] == i and c != cur)
            along_blue = not along_blue
            if nxt == start:
                break
            cycle.append(nxt)
            cur = nxt
        remaining -= set(cycle)
        cycles.append([cage.node(i, j) for i, j in cycle])
    return cycles


@dataclass(frozen=True)
class OctagramDual:
    conic: HomPoly | None
    unique: bool
    dual_polygons: tuple[tuple[ProjPoint, ...], ...]
    result: GramResult


def octagram_dual(Q: HomPoly, verts) -> OctagramDual:
    """The conic through the eight new nodes of an inscribed octagon's cage.

    The new nodes, two on every cage line, form a new bicolored octagon (or
    a pair of quadrilaterals) inscribed in that conic.
    """
    result = mystic_gram(Q, verts)
    if result.d != 4:
        raise PreconditionError(f"an octagram needs eight vertices, got {2 * result.d}")
    cycles = tuple(tuple(c) for c in new_node_cycles(result))
    return OctagramDual(result.qstar, result.unique, cycles, result)
