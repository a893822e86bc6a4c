"""Finite atom structures and bit-indexed atom sets.

An atom structure carries, per operator family, the atom-level data that the
complex algebra turns into operators: an accessibility relation per
cylindrification, an atom set per diagonal constant, a bijection per
transposition and a binary relation per replacement.  Relations are stored as
per-atom successor bitmasks, so arbitrary (possibly broken) relations can be
represented and then checked.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import ConfigurationError
from .signature import Signature


@dataclass(frozen=True)
class AtomSet:
    """Subset of the atoms of a fixed finite atom structure, as a bitmask."""

    mask: int
    size: int

    def __post_init__(self) -> None:
        if self.size < 0:
            raise ValueError("negative atom count")
        if self.mask < 0 or self.mask >> self.size:
            raise ValueError("mask exceeds declared atom count")

    @staticmethod
    def empty(size: int) -> "AtomSet":
        return AtomSet(0, size)

    @staticmethod
    def full(size: int) -> "AtomSet":
        return AtomSet((1 << size) - 1, size)

    @staticmethod
    def from_indices(indices: Iterable[int], size: int) -> "AtomSet":
        mask = 0
        for i in indices:
            if not 0 <= i < size:
                raise ValueError(f"atom index {i} out of range")
            mask |= 1 << i
        return AtomSet(mask, size)

    @staticmethod
    def singleton(index: int, size: int) -> "AtomSet":
        return AtomSet.from_indices((index,), size)

    def indices(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.size) if self.mask >> i & 1)

    def __iter__(self) -> Iterator[int]:
        return iter(self.indices())

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __bool__(self) -> bool:
        return self.mask != 0

    def __contains__(self, i: int) -> bool:
        return 0 <= i < self.size and bool(self.mask >> i & 1)

    def _check_peer(self, other: "AtomSet") -> None:
        if self.size != other.size:
            raise ValueError("atom sets over different structures")

    def __or__(self, other: "AtomSet") -> "AtomSet":
        self._check_peer(other)
        return AtomSet(self.mask | other.mask, self.size)

    def __and__(self, other: "AtomSet") -> "AtomSet":
        self._check_peer(other)
        return AtomSet(self.mask & other.mask, self.size)

    def __sub__(self, other: "AtomSet") -> "AtomSet":
        self._check_peer(other)
        return AtomSet(self.mask & ~other.mask, self.size)

    def __invert__(self) -> "AtomSet":
        return AtomSet(self.mask ^ (1 << self.size) - 1, self.size)

    def __le__(self, other: "AtomSet") -> bool:
        self._check_peer(other)
        return self.mask | other.mask == other.mask


Relation = tuple[int, ...]  # successor bitmask per atom


def relation_from_pairs(pairs: Iterable[tuple[int, int]], atom_count: int) -> Relation:
    succ = [0] * atom_count
    for a, b in pairs:
        if not (0 <= a < atom_count and 0 <= b < atom_count):
            raise ValueError(f"relation pair {(a, b)} out of range")
        succ[a] |= 1 << b
    return tuple(succ)


def relation_from_classes(classes: Sequence[Sequence[int]], atom_count: int) -> Relation:
    """Equivalence relation given by a partition into classes."""
    seen = 0
    succ = [0] * atom_count
    for cls in classes:
        cmask = 0
        for a in cls:
            if not 0 <= a < atom_count:
                raise ValueError(f"atom index {a} out of range")
            cmask |= 1 << a
        if cmask & seen:
            raise ValueError("classes overlap")
        seen |= cmask
        for a in cls:
            succ[a] = cmask
    if seen != (1 << atom_count) - 1:
        raise ValueError("classes do not cover all atoms")
    return tuple(succ)


def relation_pairs(rel: Relation) -> list[tuple[int, int]]:
    return [(a, b) for a, succ in enumerate(rel)
            for b in range(len(rel)) if succ >> b & 1]


def relation_classes(rel: Relation) -> list[list[int]]:
    """Partition classes of an equivalence relation. Raises if not one."""
    n = len(rel)
    seen: set[int] = set()
    classes = []
    for a in range(n):
        if a in seen:
            continue
        cmask = rel[a]
        members = [b for b in range(n) if cmask >> b & 1]
        for b in members:
            if rel[b] != cmask:
                raise ValueError("relation is not an equivalence")
        if not (cmask >> a & 1):
            raise ValueError("relation is not reflexive")
        seen.update(members)
        classes.append(members)
    return classes


@dataclass(frozen=True)
class FiniteAtomStructure:
    """Atom-level data for the operators of a finite BAO.

    ``cyl[i]`` is the accessibility relation of c_i, ``diag[i][j]`` the atom
    mask of d_ij, ``transp[i][j]`` the atom bijection of s_[i,j] and
    ``repl[i][j]`` the relation of s_i^j.  Any family may be ``None`` when the
    intended signature does not use it.
    """

    dimension: int
    atom_count: int
    labels: tuple[str, ...]
    cyl: tuple[Relation, ...] | None = None
    diag: tuple[tuple[int, ...], ...] | None = None
    transp: tuple[tuple[tuple[int, ...], ...], ...] | None = None
    repl: tuple[tuple[Relation, ...], ...] | None = None

    def __post_init__(self) -> None:
        if len(self.labels) != self.atom_count:
            raise ValueError("label count does not match atom count")
        if self.cyl is not None and len(self.cyl) != self.dimension:
            raise ValueError("need one cylindrification relation per index")

    def label(self, a: int) -> str:
        return self.labels[a]

    # -- serialization (see README for field conventions) ---------------

    def to_json(self) -> dict:
        n = self.dimension
        obj: dict = {
            "dimension": n,
            "atoms": list(self.labels),
        }
        if self.cyl is not None:
            obj["cyl"] = [relation_classes(rel) for rel in self.cyl]
        if self.diag is not None:
            obj["diag"] = [
                [a for a in range(self.atom_count) if self.diag[i][j] >> a & 1]
                for i in range(n) for j in range(n)
            ]
        if self.transp is not None:
            obj["transpositions"] = [
                list(self.transp[i][j])
                for i in range(n) for j in range(n) if i != j
            ]
        if self.repl is not None:
            obj["replacements"] = [
                relation_pairs(self.repl[i][j])
                for i in range(n) for j in range(n) if i != j
            ]
        return obj

    @staticmethod
    def from_json(obj: dict) -> "FiniteAtomStructure":
        n = obj["dimension"]
        labels = tuple(str(s) for s in obj["atoms"])
        count = len(labels)
        cyl = diag = transp = repl = None
        if "cyl" in obj:
            cyl = tuple(relation_from_classes(cls, count) for cls in obj["cyl"])
        if "diag" in obj:
            flat = obj["diag"]
            if len(flat) != n * n:
                raise ValueError("diag must list one atom set per ordered pair")
            masks = [AtomSet.from_indices(entry, count).mask for entry in flat]
            diag = tuple(tuple(masks[i * n + j] for j in range(n)) for i in range(n))
        if "transpositions" in obj:
            flat_t = list(obj["transpositions"])
            pairs = [(i, j) for i in range(n) for j in range(n) if i != j]
            if len(flat_t) != len(pairs):
                raise ValueError("transpositions must cover all ordered pairs")
            grid = [[tuple(range(count))] * n for _ in range(n)]
            for (i, j), perm in zip(pairs, flat_t):
                grid[i][j] = tuple(perm)
            transp = tuple(tuple(row) for row in grid)
        if "replacements" in obj:
            flat_r = list(obj["replacements"])
            pairs = [(i, j) for i in range(n) for j in range(n) if i != j]
            if len(flat_r) != len(pairs):
                raise ValueError("replacements must cover all ordered pairs")
            identity = tuple(1 << a for a in range(count))
            grid_r = [[identity] * n for _ in range(n)]
            for (i, j), pr in zip(pairs, flat_r):
                grid_r[i][j] = relation_from_pairs([tuple(p) for p in pr], count)
            repl = tuple(tuple(row) for row in grid_r)
        return FiniteAtomStructure(n, count, labels, cyl, diag, transp, repl)


def _perm_compose(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    """(p then q) as functions on atoms: a -> q[p[a]]."""
    return tuple(q[x] for x in p)


def check_atom_structure_axioms(structure: FiniteAtomStructure,
                                signature: Signature) -> list[dict]:
    """Check the structural laws the complex algebra relies on.

    Returns a list of violations, each a dict with a ``condition`` name and a
    concrete ``witness``.  Empty list iff everything holds.
    """
    out: list[dict] = []
    n = signature.dimension
    count = structure.atom_count
    full = (1 << count) - 1

    if n != structure.dimension:
        out.append({"condition": "dimension-mismatch",
                    "witness": {"signature": n, "structure": structure.dimension}})
        return out

    def missing(name: str) -> None:
        out.append({"condition": "missing-relation", "witness": {"family": name}})

    if signature.cylindrifications:
        if structure.cyl is None:
            missing("cylindrifications")
        else:
            for i, rel in enumerate(structure.cyl):
                for a in range(count):
                    if not rel[a] >> a & 1:
                        out.append({"condition": "cyl-not-reflexive",
                                    "witness": {"i": i, "atom": a}})
                for a in range(count):
                    for b in range(count):
                        if rel[a] >> b & 1 and not rel[b] >> a & 1:
                            out.append({"condition": "cyl-not-symmetric",
                                        "witness": {"i": i, "pair": [a, b]}})
                for a in range(count):
                    reach = 0
                    succ = rel[a]
                    b = 0
                    rem = succ
                    while rem:
                        if rem & 1:
                            reach |= rel[b]
                        rem >>= 1
                        b += 1
                    if reach & ~succ & full:
                        c = (reach & ~succ).bit_length() - 1
                        # recover an intermediate witness b with a ~ b ~ c
                        mid = next(b for b in range(count)
                                   if rel[a] >> b & 1 and rel[b] >> c & 1)
                        out.append({"condition": "cyl-not-transitive",
                                    "witness": {"i": i, "triple": [a, mid, c]}})
                        break

    if signature.diagonals:
        if structure.diag is None:
            missing("diagonals")
        else:
            for i in range(n):
                if structure.diag[i][i] != full:
                    out.append({"condition": "diag-ii-not-top",
                                "witness": {"i": i}})
                for j in range(n):
                    if structure.diag[i][j] != structure.diag[j][i]:
                        out.append({"condition": "diag-not-symmetric",
                                    "witness": {"pair": [i, j]}})

    if signature.transpositions:
        if structure.transp is None:
            missing("transpositions")
        else:
            t = structure.transp
            ident = tuple(range(count))
            for i in range(n):
                if t[i][i] != ident:
                    out.append({"condition": "transp-ii-not-identity",
                                "witness": {"i": i}})
                for j in range(n):
                    if i == j:
                        continue
                    if sorted(t[i][j]) != list(range(count)):
                        out.append({"condition": "transp-not-bijective",
                                    "witness": {"pair": [i, j]}})
                        continue
                    if _perm_compose(t[i][j], t[i][j]) != ident:
                        a = next(a for a in range(count)
                                 if t[i][j][t[i][j][a]] != a)
                        out.append({"condition": "transp-not-involutive",
                                    "witness": {"pair": [i, j], "atom": a}})
                    if t[i][j] != t[j][i]:
                        out.append({"condition": "transp-pair-order",
                                    "witness": {"pair": [i, j]}})
            # conjugation law for transpositions: [i,j][j,k][i,j] = [i,k]
            for i in range(n):
                for j in range(n):
                    for k in range(n):
                        if len({i, j, k}) != 3:
                            continue
                        lhs = _perm_compose(_perm_compose(t[i][j], t[j][k]), t[i][j])
                        if lhs != t[i][k]:
                            out.append({"condition": "transp-conjugation",
                                        "witness": {"indices": [i, j, k]}})

    if signature.replacements and structure.repl is None:
        missing("replacements")

    return out
