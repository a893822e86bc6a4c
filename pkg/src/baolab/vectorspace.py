"""Finite-support rational sequences, the hyperplane witness, and the
restriction-based embedding onto a longer index set.

Everything here is exact: entries are fractions, decisions are equalities.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

Rational = Fraction | int


@dataclass(frozen=True)
class FiniteSupportSeq:
    """Sequence over an unbounded index set with finitely many nonzero entries.

    Canonical form: entries sorted by index, zero values never stored.
    """
    entries: tuple[tuple[int, Fraction], ...]

    @staticmethod
    def from_pairs(pairs) -> FiniteSupportSeq:
        cleaned = {}
        for i, v in pairs:
            if i < 0:
                raise ValueError("negative index")
            f = Fraction(v)
            if f != 0:
                cleaned[i] = f
        return FiniteSupportSeq(tuple(sorted(cleaned.items())))

    @staticmethod
    def from_prefix(values) -> FiniteSupportSeq:
        return FiniteSupportSeq.from_pairs(enumerate(values))

    @staticmethod
    def zero() -> FiniteSupportSeq:
        return FiniteSupportSeq(())

    def get(self, i: int) -> Fraction:
        for j, v in self.entries:
            if j == i:
                return v
        return Fraction(0)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(i for i, _ in self.entries)

    def replace(self, i: int, value: Rational) -> FiniteSupportSeq:
        pairs = [(j, v) for j, v in self.entries if j != i]
        pairs.append((i, Fraction(value)))
        return FiniteSupportSeq.from_pairs(pairs)

    def tail_sum(self, above: int) -> Fraction:
        """Sum of entries at indices strictly greater than `above`."""
        return sum((v for i, v in self.entries if i > above), Fraction(0))

    def prefix(self, length: int) -> tuple[Fraction, ...]:
        return tuple(self.get(i) for i in range(length))

    def __repr__(self) -> str:
        inside = ", ".join(f"{i}:{v}" for i, v in self.entries)
        return f"seq({inside})"


def in_y(s: FiniteSupportSeq) -> bool:
    """Membership in the hyperplane: first entry plus one equals the rest."""
    return s.get(0) + 1 == s.tail_sum(0)


def plane_witnesses(s: FiniteSupportSeq
                    ) -> tuple[FiniteSupportSeq, FiniteSupportSeq]:
    """The two displayed hyperplane elements recovering {s} as a meet of
    cylinders: the first corrects coordinate 1, the second coordinate 0."""
    w1 = s.replace(1, s.get(0) + 1 - s.tail_sum(1))
    w2 = s.replace(0, s.tail_sum(0) - 1)
    return w1, w2


def singleton_recovery_check(s: FiniteSupportSeq) -> bool:
    """Both witnesses lie in the plane and pin s down coordinatewise.

    A sequence in the 1-cylinder of {w1} equals w1 off coordinate 1, and one
    in the 0-cylinder of {w2} equals w2 off coordinate 0; the meet is a
    singleton iff the two constraints agree and force every coordinate of s.
    """
    w1, w2 = plane_witnesses(s)
    if not in_y(w1) or not in_y(w2):
        return False
    if w1.get(0) != s.get(0) or w2.get(1) != s.get(1):
        return False
    indices = set(s.support) | set(w1.support) | set(w2.support)
    for i in indices:
        if i in (0, 1):
            continue
        if w1.get(i) != s.get(i) or w2.get(i) != s.get(i):
            return False
    return True


def _cylinder(tuples: frozenset, i: int, grid: tuple) -> frozenset:
    out = set()
    for t in tuples:
        for v in grid:
            out.add(t[:i] + (v,) + t[i + 1:])
    return frozenset(out)


def neat_embedding_map_check(samples: list[frozenset], width: int, pad: int,
                             ) -> list[dict]:
    """Exact finite check that X -> {w : w restricted to width lies in X}
    commutes with union, relative complement, and every inner
    cylindrification.

    The long tuples range over the value grid appearing in the samples
    (always including 0) on width + pad coordinates.  Returns findings,
    empty when every law holds on every sample pair.
    """
    values = {Fraction(0)}
    for x in samples:
        for t in x:
            values.update(Fraction(v) for v in t)
    grid = tuple(sorted(values))
    short_space = frozenset(itertools.product(grid, repeat=width))
    long_space = frozenset(itertools.product(grid, repeat=width + pad))

    def psi(x: frozenset) -> frozenset:
        return frozenset(w for w in long_space if w[:width] in x)

    out: list[dict] = []
    for idx, x in enumerate(samples):
        if not all(len(t) == width for t in x):
            out.append({"condition": "bad-sample-arity", "sample": idx})
            return out

    images = [psi(x) for x in samples]
    for idx, x in enumerate(samples):
        comp_short = short_space - x
        if psi(comp_short) != long_space - images[idx]:
            out.append({"condition": "complement-not-respected",
                        "sample": idx})
        for i in range(width):
            if psi(_cylinder(x, i, grid)) != _cylinder(images[idx], i, grid):
                out.append({"condition": "cylinder-not-respected",
                            "sample": idx, "coordinate": i})
    for ia, xa in enumerate(samples):
        for ib in range(ia + 1, len(samples)):
            if psi(xa | samples[ib]) != images[ia] | images[ib]:
                out.append({"condition": "union-not-respected",
                            "samples": [ia, ib]})
    if psi(frozenset()) != frozenset():
        out.append({"condition": "empty-set-not-respected"})
    return out
