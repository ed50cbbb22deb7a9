"""Subsets of cage nodes, indexed by 1-based pairs (i, j) = (red, blue).

The classifiers look only at how many members sit on each blue line.  The
index-form constructors use the sums ``i + j <= d + 1`` (triangular) and
``i + j <= d + 2`` (supra-triangular), which are the forms whose per-line
counts match those classifiers.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass
from typing import Iterable

from .errors import PreconditionError, TooSmallError

QUASI = "quasi-triangular"
SUPRA_QUASI = "supra-quasi-triangular"


@dataclass(frozen=True)
class NodeSet:
    d: int
    e: int
    members: frozenset[tuple[int, int]]

    def __init__(self, d: int, e: int, members: Iterable[tuple[int, int]]):
        pairs = [tuple(int(t) for t in m) for m in members]
        if len(set(pairs)) != len(pairs):
            raise PreconditionError("duplicate node indices")
        for i, j in pairs:
            if not (1 <= i <= d and 1 <= j <= e):
                raise PreconditionError(f"node ({i}, {j}) outside a ({d}x{e}) grid")
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "e", e)
        object.__setattr__(self, "members", frozenset(pairs))

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(sorted(self.members))

    def __contains__(self, item) -> bool:
        return tuple(item) in self.members

    def complement(self) -> NodeSet:
        return NodeSet(self.d, self.e, full_grid(self.d, self.e).members - self.members)

    def __or__(self, other: NodeSet) -> NodeSet:
        return NodeSet(self.d, self.e, self.members | other.members)

    def __sub__(self, other: NodeSet) -> NodeSet:
        return NodeSet(self.d, self.e, self.members - other.members)

    def __and__(self, other: NodeSet) -> NodeSet:
        return NodeSet(self.d, self.e, self.members & other.members)

    def blue_counts(self) -> list[int]:
        """Number of members on blue lines 1..e, in line order."""
        counts = Counter(j for _, j in self.members)
        return [counts[j] for j in range(1, self.e + 1)]

    def red_counts(self) -> list[int]:
        counts = Counter(i for i, _ in self.members)
        return [counts[i] for i in range(1, self.d + 1)]

    def blue_profile(self) -> list[int]:
        """Per-blue-line counts as a multiset, sorted in decreasing order."""
        return sorted(self.blue_counts(), reverse=True)


def _check_dims(d: int, e: int) -> None:
    if not d >= e >= 1:
        raise PreconditionError(f"need d >= e >= 1, got d={d}, e={e}")


def full_grid(d: int, e: int) -> NodeSet:
    return NodeSet(d, e, ((i, j) for i in range(1, d + 1) for j in range(1, e + 1)))


def _by_sum(d: int, e: int, limit: int) -> NodeSet:
    return NodeSet(
        d, e, ((i, j) for i in range(1, d + 1) for j in range(1, e + 1) if i + j <= limit)
    )


def triangular(d: int, e: int) -> NodeSet:
    _check_dims(d, e)
    return _by_sum(d, e, d + 1)


def supra_triangular(d: int, e: int) -> NodeSet:
    _check_dims(d, e)
    return _by_sum(d, e, d + 2)


def quasi_profile(d: int, e: int) -> list[int]:
    return [d - k for k in range(e)]


def supra_quasi_profile(d: int, e: int) -> list[int]:
    # e = 1 degenerates to the single full blue line
    return ([d] + [d - k for k in range(e)])[:e]


def classify(A: NodeSet) -> set[str]:
    labels = set()
    profile = A.blue_profile()
    if profile == quasi_profile(A.d, A.e):
        labels.add(QUASI)
    if profile == supra_quasi_profile(A.d, A.e):
        labels.add(SUPRA_QUASI)
    return labels


def _random_with_profile(d: int, e: int, profile: list[int], seed: int) -> NodeSet:
    rng = random.Random(seed)
    counts = list(profile)
    rng.shuffle(counts)
    members = []
    for j, c in enumerate(counts, start=1):
        members.extend((i, j) for i in rng.sample(range(1, d + 1), c))
    return NodeSet(d, e, members)


def random_supra_quasi(d: int, e: int, seed: int) -> NodeSet:
    """A random set whose blue-line counts form the supra-quasi-triangular multiset."""
    _check_dims(d, e)
    return _random_with_profile(d, e, supra_quasi_profile(d, e), seed)


def random_quasi(d: int, e: int, seed: int) -> NodeSet:
    _check_dims(d, e)
    return _random_with_profile(d, e, quasi_profile(d, e), seed)


def diagonal(d: int) -> NodeSet:
    return NodeSet(d, d, ((i, i) for i in range(1, d + 1)))


def nondiagonal(d: int) -> NodeSet:
    return full_grid(d, d) - diagonal(d)


def gram_partition(d: int) -> tuple[NodeSet, NodeSet]:
    """Split the supra-triangular set of a (d x d) grid into a 2d-gon and the rest.

    The 2d-gon D takes the index sums d and d + 2 plus the two corners
    (d, 1) and (1, d); every red and every blue line carries exactly two of
    its members.  The rest has d(d-1)/2 - 1 members.
    """
    if d < 3:
        raise TooSmallError(f"a 2d-gram needs d >= 3, got {d}")
    polygon = NodeSet(
        d,
        d,
        [(i, j) for i in range(1, d + 1) for j in range(1, d + 1) if i + j in (d, d + 2)]
        + [(d, 1), (1, d)],
    )
    return polygon, supra_triangular(d, d) - polygon
