"""A symbolic substitution set algebra built over a block partition of the
tuple space, with one block reserved for the pair diagonal.

Elements are indexed by finite-or-cofinite subsets of the countable block
index set J: the element for X collects the blocks named by X, plus the
reserved diagonal block exactly when X is cofinite (the trace of a fixed
non-principal ultrafilter on the finite/cofinite field).  In this family the
first replacement operator s_0^1 sends every finitely-indexed element to zero
and every cofinitely-indexed element to the unit, which kills complete
additivity: the atoms sum to the unit while their images sum to zero.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable

from .errors import UnsupportedQueryError
from .fincof import FinCofSet

# Marker for the reserved diagonal block inside denotation index sets.
DIAG_BLOCK = -1


class PartitionAlgebra:
    """Substitution algebra (transpositions and s_0^1) on the symbolic family."""

    def __init__(self, dimension: int = 3):
        if dimension < 2:
            raise ValueError("dimension must be at least 2")
        self.dimension = dimension

    # -- elements -------------------------------------------------------

    def zero(self) -> FinCofSet:
        return FinCofSet.empty()

    def one(self) -> FinCofSet:
        return FinCofSet.universe()

    def atom(self, k: int) -> FinCofSet:
        if k < 0:
            raise ValueError("block indices are natural numbers")
        return FinCofSet.finite({k})

    # -- Boolean structure -----------------------------------------------

    def union(self, a: FinCofSet, b: FinCofSet) -> FinCofSet:
        return a | b

    def complement(self, a: FinCofSet) -> FinCofSet:
        return ~a

    def leq(self, a: FinCofSet, b: FinCofSet) -> bool:
        return a <= b

    # -- operators --------------------------------------------------------

    def s01(self, a: FinCofSet) -> FinCofSet:
        """Replacement s_0^1.  Only elements containing the diagonal block
        meet the range of the underlying coordinate map, and those cover it."""
        return self.one() if a.is_cofinite else self.zero()

    def transposition(self, a: FinCofSet, i: int, j: int) -> FinCofSet:
        if not (0 <= i < self.dimension and 0 <= j < self.dimension):
            raise ValueError("transposition index out of range")
        return a  # every block is symmetric, so transpositions fix everything

    def apply(self, op: tuple, a: FinCofSet) -> FinCofSet:
        if op[0] == "r" and (op[1], op[2]) == (0, 1):
            return self.s01(a)
        if op[0] == "t":
            return self.transposition(a, op[1], op[2])
        raise UnsupportedQueryError(f"operator {op!r} not available here")

    # -- denotation ------------------------------------------------------

    def denotation(self, a: FinCofSet) -> FinCofSet:
        """Index set of the blocks the element actually collects, over the
        extended index set J + {DIAG_BLOCK}.  This is what makes union and
        complement legitimate: they must commute with denotation."""
        if a.is_finite:
            return FinCofSet.finite(a.support)
        return FinCofSet.cofinite(a.support)  # cofinite sets include DIAG_BLOCK

    # -- sup certificate ---------------------------------------------------

    def sup_of_atoms(self) -> tuple[FinCofSet, str]:
        """The unit, with the reason: any upper bound R_Y of every atom
        R_{k} needs k in Y for all k, and the only such Y is J itself."""
        return self.one(), ("upper bounds of the atom family must contain "
                            "every block index, so the least one is the unit")

    def atom_family_description(self) -> str:
        return "all atoms R_{k}, k in J"

    def atom_image_family(self, op: tuple) -> str:
        """How the operator acts on the atom family, symbolically."""
        if op[0] == "r" and (op[1], op[2]) == (0, 1):
            return "zero"  # every singleton index set is finite
        if op[0] == "t":
            return "identity"
        raise UnsupportedQueryError(f"operator {op!r} not available here")


@dataclass(frozen=True)
class FailureCertificate:
    op: str
    family: str
    sup: FinCofSet
    op_of_sup: FinCofSet
    sup_of_images: FinCofSet
    separating_y: FinCofSet

    def to_json(self) -> dict:
        return {
            "check": "complete-additivity-failure",
            "op": self.op,
            "family": self.family,
            "sup": self.sup.to_json(),
            "op_of_sup": self.op_of_sup.to_json(),
            "sup_of_images": self.sup_of_images.to_json(),
            "separating_y": self.separating_y.to_json(),
        }


def additivity_failure_certificate(dimension: int = 3) -> FailureCertificate:
    """The concrete counterexample: atoms sum to the unit, s_0^1 of the unit
    is the unit, yet every single image is zero."""
    alg = PartitionAlgebra(dimension)
    sup, _ = alg.sup_of_atoms()
    return FailureCertificate(
        op="s_0^1",
        family=alg.atom_family_description(),
        sup=sup,
        op_of_sup=alg.s01(sup),
        sup_of_images=alg.zero(),
        separating_y=alg.zero(),
    )


# -- concrete finite models -------------------------------------------------


def concrete_partition(universe_size: int, dimension: int,
                       blocks: int) -> list[frozenset]:
    """Partition of the full tuple space into ``blocks`` symmetric blocks,
    block 0 containing the pair diagonal.

    Block 0 is the orbit closure of {s : s_0 = s_1} under coordinate
    permutations; at dimension 2 that is the diagonal itself, which is the
    smallest symmetric choice.  The remaining blocks split the injective
    tuples along their value sets, round-robin.
    """
    if dimension < 2:
        raise ValueError("dimension must be at least 2")
    if blocks < 2:
        raise ValueError("need at least the diagonal block and one other")
    space = list(itertools.product(range(universe_size), repeat=dimension))
    block0 = frozenset(t for t in space if len(set(t)) < dimension)
    injective = [t for t in space if len(set(t)) == dimension]
    orbits: dict[frozenset, list] = {}
    for t in injective:
        orbits.setdefault(frozenset(t), []).append(t)
    keys = sorted(orbits, key=sorted)
    if len(keys) < blocks - 1:
        raise ValueError(
            f"only {len(keys)} symmetric classes available for {blocks - 1} blocks")
    rest: list[set] = [set() for _ in range(blocks - 1)]
    for pos, key in enumerate(keys):
        rest[pos % (blocks - 1)].update(orbits[key])
    return [block0] + [frozenset(b) for b in rest]


def pointwise_replacement01_on(space: Iterable[tuple], xs: frozenset) -> frozenset:
    """{s in space : s with coordinate 0 replaced by coordinate 1 lies in xs}."""
    out = set()
    for s in space:
        t = (s[1],) + s[1:]
        if t in xs:
            out.add(s)
    return frozenset(out)


def pointwise_transposition_on(space: Iterable[tuple], xs: frozenset,
                               i: int, j: int) -> frozenset:
    out = set()
    for s in space:
        t = list(s)
        t[i], t[j] = t[j], t[i]
        if tuple(t) in xs:
            out.add(s)
    return frozenset(out)


def is_symmetric_block(block: frozenset, dimension: int) -> bool:
    for t in block:
        for i in range(dimension):
            for j in range(i + 1, dimension):
                s = list(t)
                s[i], s[j] = s[j], s[i]
                if tuple(s) not in block:
                    return False
    return True


_DEFAULT = PartitionAlgebra()


def pa_union(a: FinCofSet, b: FinCofSet) -> FinCofSet:
    return _DEFAULT.union(a, b)


def pa_complement(a: FinCofSet) -> FinCofSet:
    return _DEFAULT.complement(a)


def pa_leq(a: FinCofSet, b: FinCofSet) -> bool:
    return _DEFAULT.leq(a, b)


def pa_s01(a: FinCofSet) -> FinCofSet:
    return _DEFAULT.s01(a)


def pa_transposition(a: FinCofSet, i: int, j: int) -> FinCofSet:
    return _DEFAULT.transposition(a, i, j)
