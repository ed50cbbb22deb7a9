"""JSON forms for scalars, polynomials, points, lines, cages, node sets and reports.

Rationals are always written as ``"num/den"`` strings so that every value
round-trips bit for bit.
"""

from __future__ import annotations

import dataclasses
import json
from fractions import Fraction
from typing import Any

from .errors import CageError
from .geometry import Cage, Line, ProjPoint, build_cage
from .linalg import LinearReport
from .nodesets import NodeSet
from .poly import HomPoly


class FormatError(CageError):
    pass


def scalar_to_json(q) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def scalar_from_json(s) -> Fraction:
    if isinstance(s, bool) or not isinstance(s, (str, int)):
        raise FormatError(f"expected a 'num/den' string, got {s!r}")
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise FormatError(f"bad rational {s!r}") from exc


def poly_to_json(P: HomPoly) -> dict:
    return {
        "degree": P.degree,
        "terms": [
            {"a": a, "b": b, "c": c, "coeff": scalar_to_json(q)} for (a, b, c), q in P.terms.items()
        ],
    }


def poly_from_json(obj) -> HomPoly:
    try:
        degree = int(obj["degree"])
        terms = {}
        for t in obj["terms"]:
            mono = (int(t["a"]), int(t["b"]), int(t["c"]))
            if mono in terms:
                raise FormatError(f"repeated monomial {mono}")
            terms[mono] = scalar_from_json(t["coeff"])
    except (KeyError, TypeError) as exc:
        raise FormatError(f"malformed polynomial: {exc}") from exc
    return HomPoly(degree, terms)


def point_to_json(p: ProjPoint) -> list[str]:
    return [scalar_to_json(c) for c in p.coords]


def point_from_json(obj) -> ProjPoint:
    if not isinstance(obj, list) or len(obj) != 3:
        raise FormatError(f"a point is a list of three rationals, got {obj!r}")
    return ProjPoint(*(scalar_from_json(c) for c in obj))


def line_to_json(L: Line) -> dict:
    return poly_to_json(L.form)


def line_from_json(obj) -> Line:
    """Accept the degree-1 polynomial form or a bare coefficient triple."""
    if isinstance(obj, list):
        return Line(point_from_json(obj).coords)
    P = poly_from_json(obj)
    if P.degree != 1:
        raise FormatError(f"a line needs a degree-1 form, got degree {P.degree}")
    return Line(P)


def cage_to_json(cage: Cage) -> dict:
    return {"reds": [line_to_json(L) for L in cage.reds], "blues": [line_to_json(L) for L in cage.blues]}


def cage_from_json(obj) -> Cage:
    """Rebuild (and so revalidate) a cage; nodes are recomputed."""
    try:
        reds, blues = obj["reds"], obj["blues"]
    except (KeyError, TypeError) as exc:
        raise FormatError(f"malformed cage: {exc}") from exc
    return build_cage([line_from_json(L) for L in reds], [line_from_json(L) for L in blues])


def nodeset_to_json(A: NodeSet) -> dict:
    return {"d": A.d, "e": A.e, "members": [list(m) for m in sorted(A.members)]}


def nodeset_from_json(obj) -> NodeSet:
    try:
        return NodeSet(int(obj["d"]), int(obj["e"]), [tuple(m) for m in obj["members"]])
    except (KeyError, TypeError) as exc:
        raise FormatError(f"malformed node set: {exc}") from exc


def linear_report_from_json(obj) -> LinearReport:
    return LinearReport(
        int(obj["degree"]),
        int(obj["rank"]),
        int(obj["nullity"]),
        tuple(poly_from_json(P) for P in obj["basis"]),
    )


def _properties(obj) -> dict[str, Any]:
    out = {}
    for klass in reversed(type(obj).__mro__):
        for name, attr in vars(klass).items():
            if isinstance(attr, property) and not name.startswith("_"):
                out[name] = getattr(obj, name)
    return out


def to_jsonable(obj) -> Any:
    """Recursively convert library values (and report dataclasses) to JSON data."""
    if obj is None or isinstance(obj, (bool, int, str)):
        return obj
    if isinstance(obj, Fraction):
        return scalar_to_json(obj)
    if isinstance(obj, HomPoly):
        return poly_to_json(obj)
    if isinstance(obj, ProjPoint):
        return point_to_json(obj)
    if isinstance(obj, Line):
        return line_to_json(obj)
    if isinstance(obj, Cage):
        return cage_to_json(obj)
    if isinstance(obj, NodeSet):
        return nodeset_to_json(obj)
    if dataclasses.is_dataclass(obj):
        out = {f.name: to_jsonable(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
        for name, value in _properties(obj).items():
            if name not in out and not isinstance(value, Cage):
                out[name] = to_jsonable(value)
        return out
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (set, frozenset)):
        return [to_jsonable(v) for v in sorted(obj)]
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def dumps(obj) -> str:
    return json.dumps(to_jsonable(obj), indent=2) + "\n"


def loads(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from exc
