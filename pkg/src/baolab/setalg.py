"""Concrete set algebras of n-tuples, complete representations, and the
diagonal quotient lift.

The lift takes a finite simple polyadic equality algebra that is generated by
its elements of proper dimension set, together with a complete representation
of its diagonal-free reduct, and produces a complete representation of the
full algebra on a quotient base.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

from .algebra import ComplexAlgebra, complex_algebra
from .atoms import AtomSet, FiniteAtomStructure
from .errors import PreconditionError, UnsupportedQueryError
from .signature import Signature


def tuple_atom_structure(universe_size: int, dimension: int
                         ) -> tuple[FiniteAtomStructure, tuple[tuple[int, ...], ...]]:
    """Atom structure of the full set algebra on n-tuples over a finite base.

    Atoms are the tuples themselves, in lexicographic order.  Returns the
    structure and the tuple list (atom index -> tuple).
    """
    if universe_size < 1:
        raise ValueError("universe must be nonempty")
    tuples = tuple(itertools.product(range(universe_size), repeat=dimension))
    index = {t: a for a, t in enumerate(tuples)}
    count = len(tuples)
    n = dimension

    cyl = []
    for i in range(n):
        groups: dict[tuple, int] = {}
        for a, t in enumerate(tuples):
            key = t[:i] + t[i + 1:]
            groups[key] = groups.get(key, 0) | 1 << a
        rel = tuple(groups[t[:i] + t[i + 1:]] for t in tuples)
        cyl.append(rel)

    diag = tuple(
        tuple(sum(1 << a for a, t in enumerate(tuples) if t[i] == t[j])
              for j in range(n))
        for i in range(n))

    transp = []
    for i in range(n):
        row = []
        for j in range(n):
            perm = []
            for t in tuples:
                s = list(t)
                s[i], s[j] = s[j], s[i]
                perm.append(index[tuple(s)])
            row.append(tuple(perm))
        transp.append(tuple(row))

    repl = []
    for i in range(n):
        row_r = []
        for j in range(n):
            if i == j:
                row_r.append(tuple(1 << a for a in range(count)))
                continue
            # image of {t} under s_i^j is the ~_i class of t when t_i = t_j
            rel = tuple(cyl[i][a] if tuples[a][i] == tuples[a][j] else 0
                        for a in range(count))
            row_r.append(rel)
        repl.append(tuple(row_r))

    structure = FiniteAtomStructure(
        dimension=n,
        atom_count=count,
        labels=tuple("".join(map(str, t)) for t in tuples),
        cyl=tuple(cyl),
        diag=diag,
        transp=tuple(transp),
        repl=tuple(repl),
    )
    return structure, tuples


def full_set_algebra(universe_size: int, dimension: int,
                     signature: Signature | None = None
                     ) -> tuple[ComplexAlgebra, tuple[tuple[int, ...], ...]]:
    structure, tuples = tuple_atom_structure(universe_size, dimension)
    sig = signature or Signature.pea(dimension)
    return complex_algebra(structure, sig), tuples


@dataclass
class SetAlgebraRepresentation:
    """Assignment of concrete tuple sets to every element of a finite algebra."""

    base: tuple
    dimension: int
    assignment: dict[AtomSet, frozenset]
    unit: frozenset


def identity_representation(algebra: ComplexAlgebra,
                            tuples: Sequence[tuple]) -> SetAlgebraRepresentation:
    """Each element denotes exactly the tuples of its atoms."""
    assignment = {}
    for x in algebra.elements():
        assignment[x] = frozenset(tuples[a] for a in x.indices())
    base = tuple(sorted({v for t in tuples for v in t}))
    return SetAlgebraRepresentation(base, algebra.signature.dimension,
                                    assignment, frozenset(tuples))


def _concrete_cyl(i: int, xs: frozenset, unit: frozenset) -> frozenset:
    keys = {t[:i] + t[i + 1:] for t in xs}
    return frozenset(t for t in unit if t[:i] + t[i + 1:] in keys)


def _concrete_transp(i: int, j: int, xs: frozenset) -> frozenset:
    def sw(t):
        s = list(t)
        s[i], s[j] = s[j], s[i]
        return tuple(s)
    return frozenset(sw(t) for t in xs)


def _concrete_repl(i: int, j: int, xs: frozenset, unit: frozenset) -> frozenset:
    out = set()
    for t in unit:
        s = list(t)
        s[i] = s[j]
        if tuple(s) in xs:
            out.add(t)
    return frozenset(out)


def verify_complete_representation(rep: SetAlgebraRepresentation,
                                   algebra: ComplexAlgebra,
                                   check_diagonals: bool = True) -> list[dict]:
    """All defects of ``rep`` as a complete representation of ``algebra``.

    ``check_diagonals=False`` verifies a representation of the diagonal-free
    reduct.  Empty list iff the representation is complete and faithful.
    """
    out: list[dict] = []
    sig = algebra.signature
    n = sig.dimension
    h = rep.assignment
    unit = rep.unit

    missing = [x for x in algebra.elements() if x not in h]
    if missing:
        out.append({"condition": "assignment-incomplete",
                    "witness": {"element": missing[0].indices()}})
        return out

    if h[algebra.zero()] != frozenset():
        out.append({"condition": "zero-not-empty", "witness": {}})
    if h[algebra.one()] != unit:
        out.append({"condition": "one-not-unit", "witness": {}})

    seen: dict[frozenset, AtomSet] = {}
    for x in algebra.elements():
        if h[x] in seen and seen[h[x]] != x:
            out.append({"condition": "not-injective",
                        "witness": {"elements": [seen[h[x]].indices(), x.indices()]}})
            break
        seen[h[x]] = x

    atom_images = [h[a] for a in algebra.atoms()]
    covered = frozenset().union(*atom_images) if atom_images else frozenset()
    if covered != unit:
        miss = sorted(unit - covered)[:3]
        out.append({"condition": "atoms-do-not-cover-unit",
                    "witness": {"uncovered": [list(t) for t in miss]}})
    for a in range(len(atom_images)):
        for b in range(a + 1, len(atom_images)):
            if atom_images[a] & atom_images[b]:
                out.append({"condition": "atom-images-overlap",
                            "witness": {"atoms": [a, b]}})

    for x in algebra.elements():
        expect = frozenset().union(*(h[algebra.atom(a)] for a in x.indices())) \
            if x.mask else frozenset()
        if h[x] != expect:
            out.append({"condition": "not-completely-determined-by-atoms",
                        "witness": {"element": x.indices()}})
            break

    for x in algebra.elements():
        if h[~x] != unit - h[x]:
            out.append({"condition": "complement-not-respected",
                        "witness": {"element": x.indices()}})
            break

    checked_pairs = 0
    for x in algebra.elements():
        for y in algebra.elements():
            if h[x | y] != h[x] | h[y]:
                out.append({"condition": "join-not-respected",
                            "witness": {"elements": [x.indices(), y.indices()]}})
                checked_pairs = -1
                break
        if checked_pairs < 0:
            break

    op_defect = False
    for x in algebra.elements():
        if sig.cylindrifications:
            for i in range(n):
                if h[algebra.cyl(i, x)] != _concrete_cyl(i, h[x], unit):
                    out.append({"condition": "cyl-not-respected",
                                "witness": {"i": i, "element": x.indices()}})
                    op_defect = True
        if sig.transpositions:
            for i in range(n):
                for j in range(i + 1, n):
                    if h[algebra.transpose(i, j, x)] != _concrete_transp(i, j, h[x]):
                        out.append({"condition": "transposition-not-respected",
                                    "witness": {"pair": [i, j], "element": x.indices()}})
                        op_defect = True
        if sig.replacements:
            for i in range(n):
                for j in range(n):
                    if i == j:
                        continue
                    if h[algebra.replace(i, j, x)] != _concrete_repl(i, j, h[x], unit):
                        out.append({"condition": "replacement-not-respected",
                                    "witness": {"pair": [i, j], "element": x.indices()}})
                        op_defect = True
        if op_defect:
            break  # one operator witness per run is enough

    if check_diagonals and sig.diagonals:
        for i in range(n):
            for j in range(n):
                want = frozenset(t for t in unit if t[i] == t[j])
                if h[algebra.diag(i, j)] != want:
                    out.append({"condition": "diagonal-not-respected",
                                "witness": {"pair": [i, j]}})

    return out


def dimension_set(algebra: ComplexAlgebra, x: AtomSet) -> frozenset[int]:
    return frozenset(i for i in range(algebra.signature.dimension)
                     if algebra.cyl(i, x) != x)


def generated_by_proper_dimension_elements(algebra: ComplexAlgebra) -> bool:
    """Whether the elements x with dimension set smaller than n generate."""
    n = algebra.signature.dimension
    gens = {x.mask for x in algebra.elements()
            if len(dimension_set(algebra, x)) < n}
    full = (1 << algebra.atom_count) - 1
    known = set(gens) | {0, full}
    frontier = list(known)
    count = algebra.atom_count
    while frontier:
        m = frontier.pop()
        x = AtomSet(m, count)
        new = {(~x).mask}
        for op in algebra.enabled_unary_ops():
            new.add(algebra.unary_op(op, x).mask)
        for m2 in list(known):
            new.add(m | m2)
            new.add(m & m2)
        for v in new:
            if v not in known:
                known.add(v)
                frontier.append(v)
    return len(known) == 1 << count


def is_simple(algebra: ComplexAlgebra) -> bool:
    """Finite CA-style simplicity: c_0 ... c_{n-1} x = 1 for every x != 0."""
    n = algebra.signature.dimension
    for x in algebra.atoms():
        y = x
        for i in range(n):
            y = algebra.cyl(i, y)
        if y != algebra.one():
            return False
    return True


@dataclass
class LiftResult:
    representation: SetAlgebraRepresentation
    class_of: dict  # tagged point -> class index
    tagged_points: tuple


def diagonal_quotient_lift(rep: SetAlgebraRepresentation,
                           algebra: ComplexAlgebra) -> LiftResult:
    """Turn a complete representation of the diagonal-free reduct into one of
    the full algebra, by gluing base points along the diagonal elements.

    Preconditions: dimension >= 3, the algebra is simple, generated by its
    proper-dimension-set elements, and the diagonal images behave (every base
    point occurs on the total diagonal; the induced point relation is an
    equivalence that is the same for every index pair).
    """
    sig = algebra.signature
    n = sig.dimension
    if n < 3:
        raise PreconditionError("lift needs dimension at least 3")
    if not (sig.diagonals and sig.cylindrifications):
        raise PreconditionError("lift needs diagonals and cylindrifications")
    if not is_simple(algebra):
        raise UnsupportedQueryError("non-simple algebra: product case out of scope")
    if not generated_by_proper_dimension_elements(algebra):
        raise PreconditionError(
            "algebra is not generated by its proper-dimension-set elements")

    defects = verify_complete_representation(rep, algebra, check_diagonals=False)
    if defects:
        raise PreconditionError(
            f"input is not a complete representation of the reduct: {defects[0]}")

    h = rep.assignment
    # per-coordinate bases, which must tile the unit
    bases = [tuple(sorted({t[i] for t in rep.unit})) for i in range(n)]
    if frozenset(itertools.product(*bases)) != rep.unit:
        raise PreconditionError("unit is not a product of coordinate bases")

    delta = algebra.one()
    for i in range(n):
        for j in range(n):
            delta = delta & algebra.diag(i, j)
    h_delta = h[delta]

    # pick, per coordinate value, a total-diagonal tuple through it
    section: list[dict] = []
    for i in range(n):
        rows = {}
        for u in bases[i]:
            candidates = sorted(t for t in h_delta if t[i] == u)
            if not candidates:
                raise PreconditionError(
                    f"diagonal image misses coordinate {i} value {u!r}")
            rows[u] = candidates[0]
        section.append(rows)

    tagged = tuple((i, u) for i in range(n) for u in bases[i])

    def untag(p: tuple, coord: int):
        j, u = p
        return section[j][u][coord]

    # glued images: which tagged tuples land in h(x) after projecting
    tagged_tuples = tuple(itertools.product(tagged, repeat=n))
    projected = {s: tuple(untag(s[i], i) for i in range(n)) for s in tagged_tuples}

    def glued(x: AtomSet) -> frozenset:
        xs = h[x]
        return frozenset(s for s in tagged_tuples if projected[s] in xs)

    g_cache = {x: glued(x) for x in algebra.elements()}

    # point equivalence from the diagonal elements
    def point_relation(i: int, j: int) -> frozenset:
        return frozenset((s[i], s[j]) for s in g_cache[algebra.diag(i, j)])

    sim = point_relation(0, 1)
    for i in range(n):
        for j in range(n):
            if i != j and point_relation(i, j) != sim:
                raise PreconditionError(
                    f"diagonal point relations disagree at pair ({i}, {j})")
    for p in tagged:
        if (p, p) not in sim:
            raise PreconditionError(f"diagonal point relation not reflexive at {p!r}")
    for a, b in sim:
        if (b, a) not in sim:
            raise PreconditionError("diagonal point relation not symmetric")
        for c, d in sim:
            if c == b and (a, d) not in sim:
                raise PreconditionError("diagonal point relation not transitive")

    # quotient classes, numbered deterministically by least member
    succ: dict = {p: set() for p in tagged}
    for a, b in sim:
        succ[a].add(b)
    class_of: dict = {}
    classes: list[tuple] = []
    for p in tagged:
        if p in class_of:
            continue
        members = tuple(sorted(succ[p]))
        idx = len(classes)
        classes.append(members)
        for q in members:
            class_of[q] = idx

    # every glued image must be a union of classes, componentwise
    for x in algebra.elements():
        quotiented = {tuple(class_of[p] for p in s) for s in g_cache[x]}
        rebuilt = set()
        for ct in quotiented:
            for s in itertools.product(*(classes[c] for c in ct)):
                rebuilt.add(s)
        if rebuilt != set(g_cache[x]):
            raise PreconditionError(
                f"glued image of element {x.indices()} is not a union of classes")

    new_unit = frozenset(itertools.product(range(len(classes)), repeat=n))
    assignment = {
        x: frozenset(tuple(class_of[p] for p in s) for s in g_cache[x])
        for x in algebra.elements()
    }
    lifted = SetAlgebraRepresentation(
        base=tuple(range(len(classes))),
        dimension=n,
        assignment=assignment,
        unit=new_unit,
    )
    return LiftResult(lifted, class_of, tagged)
