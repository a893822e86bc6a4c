"""Basic matrices over a relation atom structure, and the polyadic-equality
atom structure they induce.

A basic matrix is an n x n atom matrix with identity diagonal, symmetric
entries, and every triangle consistent.  The induced structure has the
matrices as atoms: two matrices are i-related when they agree outside row and
column i, the (i,j) diagonal collects the matrices with identity at (i,j),
and transpositions swap rows and columns simultaneously.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .atoms import FiniteAtomStructure
from .errors import BudgetExceededError
from .ra import RelationAtomStructure


@dataclass(frozen=True)
class BasicMatrix:
    size: int
    entries: tuple[tuple[int, ...], ...]

    def entry(self, i: int, j: int) -> int:
        return self.entries[i][j]

    def upper_triangle(self) -> tuple[int, ...]:
        return tuple(self.entries[i][j]
                     for i in range(self.size) for j in range(i + 1, self.size))

    def label(self, ras: RelationAtomStructure) -> str:
        return "[" + "; ".join(
            " ".join(ras.label(self.entries[i][j]) for j in range(self.size))
            for i in range(self.size)) + "]"


def _matrix_from_upper(size: int, ident: int, upper: dict[tuple[int, int], int]
                       ) -> BasicMatrix:
    rows = []
    for i in range(size):
        row = []
        for j in range(size):
            if i == j:
                row.append(ident)
            elif i < j:
                row.append(upper[(i, j)])
            else:
                row.append(upper[(j, i)])
        rows.append(tuple(row))
    return BasicMatrix(size, tuple(rows))


def is_basic_matrix(ras: RelationAtomStructure, mat: BasicMatrix) -> bool:
    """Direct check of all three matrix conditions, used as the oracle."""
    n = mat.size
    for i in range(n):
        if mat.entry(i, i) != ras.identity:
            return False
        for j in range(n):
            if mat.entry(i, j) != mat.entry(j, i):
                return False
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if not ras.consistent(mat.entry(i, j), mat.entry(j, k),
                                      mat.entry(i, k)):
                    return False
    return True


def enumerate_basic_matrices(ras: RelationAtomStructure, size: int,
                             budget: int = 2_000_000) -> list[BasicMatrix]:
    """All basic matrices, in lexicographic order of their upper triangles.

    Depth-first over the upper-triangle positions, pruning a partial matrix
    as soon as a completed triangle is inconsistent.
    """
    positions = [(i, j) for i in range(size) for j in range(i + 1, size)]
    k = ras.atom_count
    out: list[BasicMatrix] = []
    upper: dict[tuple[int, int], int] = {}
    visited = 0

    def entry(i: int, j: int) -> int:
        if i == j:
            return ras.identity
        return upper[(i, j)] if i < j else upper[(j, i)]

    def triangles_closed_by(pos_index: int) -> list[tuple[int, int, int]]:
        i, j = positions[pos_index]
        done = set(positions[:pos_index + 1])
        tris = []
        for l in range(size):
            if l == i or l == j:
                continue
            e1 = (min(i, l), max(i, l))
            e2 = (min(j, l), max(j, l))
            if e1 in done and e2 in done:
                tris.append((i, l, j))
        return tris

    closing = [triangles_closed_by(p) for p in range(len(positions))]

    def extend(pos_index: int) -> None:
        nonlocal visited
        if pos_index == len(positions):
            out.append(_matrix_from_upper(size, ras.identity, dict(upper)))
            return
        i, j = positions[pos_index]
        for atom in range(k):
            visited += 1
            if visited > budget:
                raise BudgetExceededError("matrix enumeration budget exhausted",
                                          spent=visited)
            upper[(i, j)] = atom
            ok = True
            for (a, b, c) in closing[pos_index]:
                # triangle through vertices a, b, c of the matrix
                if not ras.consistent(entry(a, b), entry(b, c), entry(a, c)):
                    ok = False
                    break
            if ok:
                extend(pos_index + 1)
            del upper[(i, j)]

    if not positions:
        return [_matrix_from_upper(size, ras.identity, {})]
    extend(0)
    return out


def brute_force_basic_matrices(ras: RelationAtomStructure,
                               size: int) -> list[BasicMatrix]:
    """Independent oracle: try every upper-triangle assignment outright."""
    positions = [(i, j) for i in range(size) for j in range(i + 1, size)]
    out = []
    for combo in itertools.product(range(ras.atom_count), repeat=len(positions)):
        mat = _matrix_from_upper(size, ras.identity, dict(zip(positions, combo)))
        if is_basic_matrix(ras, mat):
            out.append(mat)
    return out


def ca_atoms_from_matrices(ras: RelationAtomStructure,
                          matrices: list[BasicMatrix]) -> FiniteAtomStructure:
    """Polyadic-equality atom structure whose atoms are basic matrices."""
    if not matrices:
        raise ValueError("no matrices to build on")
    size = matrices[0].size
    count = len(matrices)
    index = {m.entries: a for a, m in enumerate(matrices)}

    def outside(m: BasicMatrix, i: int) -> tuple:
        return tuple(m.entries[a][b]
                     for a in range(size) for b in range(size)
                     if a != i and b != i)

    cyl = []
    for i in range(size):
        groups: dict[tuple, int] = {}
        for a, m in enumerate(matrices):
            key = outside(m, i)
            groups[key] = groups.get(key, 0) | 1 << a
        cyl.append(tuple(groups[outside(m, i)] for m in matrices))

    diag = tuple(
        tuple(sum(1 << a for a, m in enumerate(matrices)
                  if m.entry(i, j) == ras.identity)
              for j in range(size))
        for i in range(size))

    transp = []
    for i in range(size):
        row = []
        for j in range(size):
            perm = []
            for m in matrices:
                swapped = tuple(
                    tuple(m.entries[_sw(a, i, j)][_sw(b, i, j)]
                          for b in range(size))
                    for a in range(size))
                if swapped not in index:
                    raise ValueError("matrix family not closed under row/column swap")
                perm.append(index[swapped])
            row.append(tuple(perm))
        transp.append(tuple(row))

    # s_i^j as the relational composition c_i (d_ij & -): from a matrix with
    # identity at (i,j), reach everything agreeing with it outside i
    repl = []
    for i in range(size):
        row_r = []
        for j in range(size):
            if i == j:
                row_r.append(tuple(1 << a for a in range(count)))
            else:
                rel = tuple(cyl[i][a] if matrices[a].entry(i, j) == ras.identity
                            else 0
                            for a in range(count))
                row_r.append(rel)
        repl.append(tuple(row_r))

    return FiniteAtomStructure(
        dimension=size,
        atom_count=count,
        labels=tuple(m.label(ras) for m in matrices),
        cyl=tuple(cyl),
        diag=diag,
        transp=tuple(transp),
        repl=tuple(repl),
    )


def _sw(a: int, i: int, j: int) -> int:
    if a == i:
        return j
    if a == j:
        return i
    return a
