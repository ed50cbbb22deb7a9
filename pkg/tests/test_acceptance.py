"""Acceptance suite: twelve exact checks, one PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py -v`` (the lines are printed in the
terminal summary) or directly with ``python3 tests/test_acceptance.py``.
"""

from __future__ import annotations

import random
import subprocess
import sys
import tempfile
from fractions import Fraction
from pathlib import Path

import pytest

from cagezoo import io
from cagezoo.errors import NonGenericCageError
from cagezoo.geometry import UNIT_CIRCLE, Line, ProjPoint, conic_point, cross, grid_cage, random_cage
from cagezoo.linalg import hilbert, independence_report
from cagezoo.nodesets import NodeSet, full_grid, random_quasi, random_supra_quasi, supra_triangular
from cagezoo.poly import X, Y, Z, evaluate, gradient, gradient_at
from cagezoo.theorems import (
    INFINITY,
    bacharach,
    collinear_diagonal_grid,
    diagonal_equivalence,
    ec_add,
    ec_neg,
    mystic_gram,
    node_gradient,
    pencil,
    pencil_with_tangent,
    random_partition,
    remark_counterexample,
    verify_caged_dimension,
    verify_lower_bound,
    verify_ninth_node,
    weierstrass,
)

RESULTS: dict[int, tuple[bool, str]] = {}


def record(n: int, ok: bool, detail: str) -> bool:
    RESULTS[n] = (ok, detail)
    return ok


def report_lines() -> list[str]:
    return [f"[{'PASS' if ok else 'FAIL'}] criterion {n:2d}: {detail}" for n, (ok, detail) in sorted(RESULTS.items())]


# -- 1. cubic cage theorem -----------------------------------------------


def criterion_1() -> bool:
    bad = []
    for seed in range(100):
        rep = verify_ninth_node(random_cage(3, 3, seed))
        if not (rep.passed and all(r.nullity == 2 for r in rep.records)):
            bad.append(seed)
    return record(1, not bad, f"100 random 3x3 cages, ninth node forced, nullity 2 (failures: {bad})")


# -- 2 and 3. dimension law and lower bound ------------------------------

SWEEP = [(d, e) for d in range(2, 7) for e in range(2, d + 1)]


def criterion_2() -> bool:
    bad = []
    for d, e in SWEEP:
        for seed in range(25):
            cage = random_cage(d, e, seed)
            rep = verify_caged_dimension(cage, random_supra_quasi(d, e, seed))
            if not (rep.passed and rep.nullity == 1 + (d - e + 1) * (d - e + 2) // 2 and rep.all_nodes_vanish):
                bad.append((d, e, seed))
    return record(2, not bad, f"dimension law on {len(SWEEP)} shapes x 25 cages (failures: {bad})")


def criterion_3() -> bool:
    bad = []
    for d, e in SWEEP:
        for seed in range(25):
            rep = verify_lower_bound(random_cage(d, e, seed), random_quasi(d, e, seed))
            if not (rep.passed and len(rep.nullities) == e):
                bad.append((d, e, seed))
    return record(3, not bad, f"nullity 0 below degree e on {len(SWEEP)} shapes x 25 cages (failures: {bad})")


# -- 4. independence and minimal redundancy ------------------------------


def criterion_4() -> bool:
    bad = []
    sizes = {}
    for d in range(2, 7):
        for seed in range(5):
            cage = random_cage(d, d, seed)
            for A in (supra_triangular(d, d), random_supra_quasi(d, d, seed)):
                pts = cage.points(A)
                target = (d * d + 3 * d) // 2 - 1
                sizes[d] = len(A)
                if len(A) != target or hilbert(pts, d) != target:
                    bad.append((d, seed, "rank"))
                    continue
                for m in sorted(A.complement().members):
                    rep = independence_report(pts, cage.node(*m), d)
                    if not rep.minimally_redundant:
                        bad.append((d, seed, m))
    ok = not bad and sizes[4] == 13
    return record(4, ok, f"rank = |A| = (d^2+3d)/2 - 1 for d=2..6, |A| at d=4 is {sizes[4]} (failures: {bad})")


# -- 5. remark counterexample (a negative result) ------------------------


def criterion_5() -> bool:
    found = 0
    for seed in range(25):
        _, rep = remark_counterexample(random_cage(4, 4, seed))
        found += rep.passed and len(rep.kept) == 13
    return record(5, found == 25, f"13-node quartic missing p_42 exhibited on {found}/25 cages (violation expected)")


# -- 6. mystic grams -----------------------------------------------------


def random_polygon(d: int, rng: random.Random) -> list[ProjPoint]:
    ts: set[Fraction] = set()
    while len(ts) < 2 * d:
        ts.add(Fraction(rng.randint(-30, 30), rng.randint(1, 7)))
    order = sorted(ts)
    rng.shuffle(order)
    return [conic_point(UNIT_CIRCLE, ProjPoint(1, 0, 1), t) for t in order]


def criterion_6() -> bool:
    bad, resampled = [], 0
    for d in (3, 4, 5):
        rng = random.Random(600 + d)
        done = 0
        while done < 25:
            try:
                res = mystic_gram(UNIT_CIRCLE, random_polygon(d, rng))
            except NonGenericCageError:
                resampled += 1
                continue
            done += 1
            ok = (
                res.passed
                and res.unique
                and res.qstar.degree == d - 2
                and len(res.new_nodes) == d * d - 2 * d
            )
            if not ok:
                bad.append((d, done))
    return record(6, not bad, f"75 grams (d=3,4,5) with a unique degree d-2 curve, {resampled} resampled (failures: {bad})")


# -- 7. tangent rigidity -------------------------------------------------


def criterion_7() -> bool:
    rng = random.Random(7)
    bad = []
    for trial in range(100):
        d = rng.choice([2, 3, 4, 5])
        cage = random_cage(d, d, rng.randrange(10**6))
        i, j = rng.randint(1, d), rng.randint(1, d)
        p = cage.node(i, j)
        tau = None
        while tau is None or tau in (cage.reds[i - 1], cage.blues[j - 1]):
            a = tuple(rng.randint(-9, 9) for _ in range(3))
            if any(a) and ProjPoint(a) != p:
                tau = Line.through(p, ProjPoint(a))
        cls = pencil_with_tangent(cage, i, j, tau)
        g = gradient_at(cls.curve, p)
        v = cross(tau.coeffs, p.coords)
        if sum(x * y for x, y in zip(g, v)) != 0 or Line(g) != tau:
            bad.append(trial)
        lam, mu = Fraction(rng.randint(-9, 9)), Fraction(rng.randint(1, 9))
        grad = gradient(pencil(cage, lam, mu))
        for a_ in range(1, d + 1):
            for b_ in range(1, d + 1):
                q = cage.node(a_, b_)
                if node_gradient(cage, lam, mu, a_, b_) != tuple(evaluate(h, q) for h in grad):
                    bad.append((trial, a_, b_))
    return record(7, not bad, f"100 (cage, node, direction) triples plus the node-gradient identity (failures: {bad})")


# -- 8. diagonal corollary -----------------------------------------------


def criterion_8() -> bool:
    bad = []
    for d in range(3, 7):
        for seed in range(5):
            rep = diagonal_equivalence(collinear_diagonal_grid(d, seed))
            if not (rep.collinear and rep.curve_exists and rep.witness.degree == d - 1):
                bad.append(("grid", d, seed))
    for seed in range(100):
        d = 3 + seed % 4
        rep = diagonal_equivalence(random_cage(d, d, seed))
        if rep.collinear or rep.curve_exists or not rep.passed:
            bad.append(("random", d, seed))
    pinned = diagonal_equivalence(grid_cage((0, 1, 2), (0, 1, 2)))
    witness = X**2 + X * Y + Y**2 - 3 * X * Z - 3 * Y * Z + 2 * Z**2
    if pinned.witness != witness:
        bad.append(("pinned", str(pinned.witness)))
    return record(8, not bad, f"20 collinear grids, 100 random cages, pinned conic {witness} (failures: {bad})")


# -- 9. Bacharach identity -----------------------------------------------


def criterion_9() -> bool:
    bad = []
    for d, e in [(3, 3), (4, 3), (4, 4), (5, 4)]:
        for seed in range(25):
            cage = random_cage(d, e, seed)
            for t in range(10):
                rep = bacharach(cage, random_partition(d, e, 1000 * seed + t))
                if not rep.passed or len(rep.records) != d + e - 2:
                    bad.append((d, e, seed, t))
    # |X2| = 1 at k = d = e = 3: both sides vanish and h_X(3) = h_X1(3)
    cage = random_cage(3, 3, 0)
    rec = bacharach(cage, NodeSet(3, 3, sorted(full_grid(3, 3).members - {(3, 3)}))).records[3]
    pinned = rec.lhs == rec.rhs == 0 and rec.h_X == rec.h_X1 == 8
    return record(9, not bad and pinned, f"4 shapes x 25 cages x 10 partitions, all k; h_X(3) = h_X1(3) = 8 (failures: {bad})")


# -- 10. elliptic group law ----------------------------------------------

C17 = weierstrass(0, 17)


def chord_multiples(p: ProjPoint, n: int) -> list[ProjPoint]:
    """k*p for |k| <= n, each step a chord through the previous multiple."""
    out = [p]
    while len(out) < n:
        out.append(ec_add(C17, INFINITY, out[-1], p))
    return out + [ec_neg(C17, INFINITY, q) for q in out] + [INFINITY]


def criterion_10() -> bool:
    pool = chord_multiples(ProjPoint.affine(-2, 3), 5)
    rng = random.Random(10)
    bad = []
    add = lambda a, b: ec_add(C17, INFINITY, a, b)  # noqa: E731
    for t in range(50):
        p, q, r = (rng.choice(pool) for _ in range(3))
        if add(p, INFINITY) != p or add(p, q) != add(q, p) or add(add(p, q), r) != add(p, add(q, r)):
            bad.append(t)
        if any(evaluate(C17, s) != 0 for s in (add(p, q), add(q, r))):
            bad.append(("off curve", t))
    return record(10, not bad, f"identity, commutativity, associativity on 50 triples from (-2,3) (failures: {bad})")


# -- 11. Hilbert stabilisation -------------------------------------------


def criterion_11() -> bool:
    rng = random.Random(11)
    bad = []
    for t in range(50):
        size = rng.randint(1, 10)
        pts: list[ProjPoint] = []
        while len(pts) < size:
            v = (rng.randint(-5, 5), rng.randint(-5, 5), rng.randint(0, 2))
            if any(v) and ProjPoint(v) not in pts:
                pts.append(ProjPoint(v))
        for k in range(size - 1, size + 2):
            if hilbert(pts, k) != size:
                bad.append((t, k))
    return record(11, not bad, f"h_X(k) = |X| for k >= |X| - 1 on 50 random sets of size <= 10 (failures: {bad})")


# -- 12. determinism -----------------------------------------------------


def _cli_runs(workdir: Path) -> list[bytes]:
    """Run a fixed batch of CLI commands in ``workdir``; return stdout and every written file."""
    cage_json = workdir / "cage.json"
    cage_json.write_text(io.dumps(io.cage_to_json(random_cage(4, 4, 3))))
    grid_json = workdir / "grid.json"
    grid_json.write_text(io.dumps(io.cage_to_json(grid_cage((0, 1, 2), (0, 1, 2)))))
    pts_json = workdir / "pts.json"
    pts_json.write_text(io.dumps(random_cage(3, 3, 1).all_nodes()))
    cubic_json = workdir / "cubic.json"
    cubic_json.write_text(io.dumps(C17))
    commands = [
        ["cage", "random", "--d", "4", "--e", "3", "--seed", "5", "--out", "c1.json", "--svg", "c1.svg"],
        ["cage", "grid", "--ns", "0,1,2", "--ms", "0,1,2", "--svg", "c2.svg", "--resolution", "64"],
        ["verify", "cage-theorem", "--in", "cage.json", "--trials", "3", "--seed", "2", "--out", "v1.json"],
        ["verify", "ninth-node", "--in", "grid.json"],
        ["verify", "diagonal", "--in", "grid.json"],
        ["verify", "bacharach", "--in", "cage.json", "--trials", "3", "--seed", "9"],
        ["verify", "remark", "--in", "cage.json"],
        ["hilbert", "--points", "pts.json", "--k", "2", "--out", "h.json"],
        ["gram", "--d", "3", "--conic", "unit-circle", "--params=0,1,-1,2,-2,3", "--svg", "g.svg"],
        ["gram", "--d", "4", "--params=0,1,-1,2,-2,3,-3,4", "--out", "g4.json"],
        ["ec", "add", "--cubic", "cubic.json", "--e", "0,1,0", "--p", "-2,3", "--q", "2,5"],
        ["ec", "assoc", "--cubic", "cubic.json", "--e", "0,1,0", "--p", "-2,3", "--q", "2,5", "--r", "-2,-3"],
    ]
    outputs = []
    for argv in commands:
        proc = subprocess.run([sys.executable, "-m", "cagezoo", *argv], cwd=workdir, capture_output=True)
        if proc.returncode != 0:
            raise RuntimeError(f"{argv} exited {proc.returncode}: {proc.stderr.decode()}")
        outputs.append(proc.stdout)
    for name in ("c1.json", "c1.svg", "c2.svg", "v1.json", "h.json", "g.svg", "g4.json"):
        outputs.append((workdir / name).read_bytes())
    return outputs


def criterion_12() -> bool:
    with tempfile.TemporaryDirectory() as a, tempfile.TemporaryDirectory() as b:
        first, second = _cli_runs(Path(a)), _cli_runs(Path(b))
    same = first == second
    svgs = sum(1 for blob in first if blob.startswith(b"<?xml"))
    return record(12, same and svgs == 3, f"12 CLI commands re-run: {len(first)} outputs byte-identical, {svgs} SVG")


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6,
            criterion_7, criterion_8, criterion_9, criterion_10, criterion_11, criterion_12]


@pytest.mark.parametrize("check", CRITERIA, ids=[f"criterion_{k}" for k in range(1, 13)])
def test_criterion(check):
    ok = check()
    n = CRITERIA.index(check) + 1
    print(f"[{'PASS' if ok else 'FAIL'}] criterion {n:2d}: {RESULTS[n][1]}")
    assert ok, RESULTS[n][1]


if __name__ == "__main__":
    for check in CRITERIA:
        check()
    print("\n".join(report_lines()))
    sys.exit(0 if all(ok for ok, _ in RESULTS.values()) else 1)
