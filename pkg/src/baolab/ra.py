"""Relation-algebra atom structures built from a graph and a colour count.

Atoms are an identity atom plus one atom per (vertex, colour) pair; all atoms
are self-converse.  A triple is consistent when it passes the identity rule,
mixes colours, or is monochromatic with at least one graph edge among its
vertices.  Composition of atom sets is the relational image of consistency.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .graphs import Graph


@dataclass(frozen=True)
class RelationAtomStructure:
    graph: Graph
    colors: int

    def __post_init__(self) -> None:
        if self.colors < 1:
            raise ValueError("need at least one colour")

    @property
    def atom_count(self) -> int:
        return 1 + self.graph.vertex_count * self.colors

    @property
    def identity(self) -> int:
        return 0

    def atom_vertex(self, a: int) -> int:
        if a == 0:
            raise ValueError("identity atom has no vertex")
        return (a - 1) // self.colors

    def atom_color(self, a: int) -> int:
        if a == 0:
            raise ValueError("identity atom has no colour")
        return (a - 1) % self.colors

    def atom_index(self, vertex: int, color: int) -> int:
        if not (0 <= vertex < self.graph.vertex_count and 0 <= color < self.colors):
            raise ValueError("vertex or colour out of range")
        return 1 + vertex * self.colors + color

    def label(self, a: int) -> str:
        if a == 0:
            return "1'"
        return f"({self.atom_vertex(a)},{self.atom_color(a)})"

    def consistent(self, a: int, b: int, c: int) -> bool:
        triple = (a, b, c)
        ids = [x == 0 for x in triple]
        if any(ids):
            # exactly: one of them is the identity and the other two coincide
            if ids[0] and b == c:
                return True
            if ids[1] and a == c:
                return True
            if ids[2] and a == b:
                return True
            return False
        cols = {self.atom_color(x) for x in triple}
        if len(cols) > 1:
            return True
        verts = {self.atom_vertex(x) for x in triple}
        return any(self.graph.adjacent(u, v)
                   for u in verts for v in verts if u < v)

    @cached_property
    def consistency_tensor(self) -> np.ndarray:
        """Boolean K*K*K array of the consistency predicate."""
        k = self.atom_count
        vert = np.empty(k, dtype=np.int64)
        col = np.empty(k, dtype=np.int64)
        vert[0] = -1
        col[0] = -1
        for a in range(1, k):
            vert[a] = self.atom_vertex(a)
            col[a] = self.atom_color(a)
        m = self.graph.vertex_count
        adj = np.zeros((m + 1, m + 1), dtype=bool)  # extra row for identity's -1
        for (u, v) in self.graph.edges:
            adj[u, v] = adj[v, u] = True

        a_idx = np.arange(k)[:, None, None]
        b_idx = np.arange(k)[None, :, None]
        c_idx = np.arange(k)[None, None, :]
        is_id_a = a_idx == 0
        is_id_b = b_idx == 0
        is_id_c = c_idx == 0
        any_id = is_id_a | is_id_b | is_id_c
        id_ok = ((is_id_a & (b_idx == c_idx))
                 | (is_id_b & (a_idx == c_idx))
                 | (is_id_c & (a_idx == b_idx)))

        ca = col[a_idx]
        cb = col[b_idx]
        cc = col[c_idx]
        mixed = ~((ca == cb) & (cb == cc))
        va = vert[a_idx]
        vb = vert[b_idx]
        vc = vert[c_idx]
        edge_somewhere = adj[va, vb] | adj[va, vc] | adj[vb, vc]
        return np.where(any_id, id_ok, mixed | edge_somewhere)

    @cached_property
    def _comp_masks(self) -> list[list[int]]:
        tensor = self.consistency_tensor
        k = self.atom_count
        out = []
        for a in range(k):
            row = []
            for b in range(k):
                bits = np.packbits(tensor[a, b], bitorder="little").tobytes()
                row.append(int.from_bytes(bits, "little"))
            out.append(row)
        return out

    def compose_atoms(self, a: int, b: int) -> int:
        """Bitmask of the atoms below the composition of two atoms."""
        return self._comp_masks[a][b]

    def compose(self, xmask: int, ymask: int) -> int:
        """Composition of two atom sets, as bitmasks."""
        out = 0
        rem = xmask
        a = 0
        while rem:
            if rem & 1:
                rem_y = ymask
                b = 0
                while rem_y:
                    if rem_y & 1:
                        out |= self._comp_masks[a][b]
                    rem_y >>= 1
                    b += 1
            rem >>= 1
            a += 1
        return out


def build_alpha(graph: Graph, colors: int) -> RelationAtomStructure:
    return RelationAtomStructure(graph, colors)


def check_ra_atom_structure(ras: RelationAtomStructure) -> list[dict]:
    """Exhaustive triple scan: permutation invariance of consistency (the
    cycle law for self-converse atoms), the identity law, and coherence of
    the self-converse reading.  Returns violations with witnesses."""
    out: list[dict] = []
    t = ras.consistency_tensor
    k = ras.atom_count

    for perm in ((0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0)):
        tp = np.transpose(t, perm)
        if not np.array_equal(t, tp):
            diff = np.argwhere(t != tp)
            a, b, c = (int(x) for x in diff[0])
            out.append({"condition": "consistency-not-permutation-invariant",
                        "witness": {"triple": [a, b, c], "perm": list(perm)}})
            break

    # identity law: 1';a contains b iff a = b
    ident = ras.identity
    for a in range(k):
        row = t[ident, a]
        expect = np.zeros(k, dtype=bool)
        expect[a] = True
        if not np.array_equal(row, expect):
            b = int(np.argwhere(row != expect)[0][0])
            out.append({"condition": "identity-law",
                        "witness": {"a": a, "b": b}})
            break

    # self-converse coherence: converse is the identity map, and the
    # identity atom is consistent with (a, a) for every atom a
    for a in range(k):
        if not t[a, a, ident]:
            out.append({"condition": "self-converse-coherence",
                        "witness": {"a": a}})
            break

    return out
