"""Finite truncation of the Ramsey-style composition argument.

Over the distance graph on m vertices (edges at distance strictly between 0
and N), the residue classes mod N are pairwise non-adjacent sets.  The kernel
facts checked here: the identity plus the residue-class colour blocks cover
every atom exactly once, and any single-colour block supported on one residue
class composes with itself to something disjoint from it.
"""

from __future__ import annotations

import itertools

from .errors import PreconditionError
from .graphs import Graph
from .ra import RelationAtomStructure, build_alpha


def residue_class(m: int, step: int, r: int) -> list[int]:
    return [l for l in range(m) if l % step == r]


def color_block_mask(ras: RelationAtomStructure, vertices: list[int],
                     color: int) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << ras.atom_index(v, color)
    return mask


def truncated_j(ras: RelationAtomStructure, m: int, step: int,
                colors: int) -> list[tuple[str, int]]:
    """The covering family: identity plus one block per (residue, colour)."""
    out = [("1'", 1 << ras.identity)]
    for r in range(step):
        cls = residue_class(m, step, r)
        for s in range(colors):
            out.append((f"[{step}Z+{r},{s}]", color_block_mask(ras, cls, s)))
    return out


def is_monochromatic(ras: RelationAtomStructure, mask: int) -> bool:
    """Nonzero and below the identity, or below a single colour block."""
    if mask == 0:
        return False
    if mask == mask & (1 << ras.identity):
        return True
    for s in range(ras.colors):
        block = color_block_mask(ras, list(range(ras.graph.vertex_count)), s)
        if mask & ~block == 0:
            return True
    return False


def composition_triple_witness(ras: RelationAtomStructure,
                               pmask: int) -> tuple[int, int, int] | None:
    """A consistent (a, b, c) with a, b, c all in P, if one exists."""
    atoms = [a for a in range(ras.atom_count) if pmask >> a & 1]
    for a in atoms:
        for b in atoms:
            comp = ras.compose_atoms(a, b)
            hit = comp & pmask
            if hit:
                c = (hit & -hit).bit_length() - 1
                return (a, b, c)
    return None


def ramsey_kernel_check(m: int, step: int, colors: int,
                        max_subset: int = 6) -> list[dict]:
    """Check the two kernel facts on the truncated distance graph.

    Clause 1: the covering family partitions the atoms (each atom under
    exactly one member).  Clause 2: for every residue class and colour,
    every nonempty subset Y of the class with |Y| <= max_subset gives a
    block P with compose(P, P) & P empty.  Clause 3: every member of the
    family is monochromatic.  Returns a list of findings, empty on pass.
    """
    if step < colors * (colors - 1) // 2:
        raise PreconditionError(
            f"need step >= colors*(colors-1)/2, got {step} < "
            f"{colors * (colors - 1) // 2}")
    graph = Graph.interval(m, step)
    ras = build_alpha(graph, colors)
    out: list[dict] = []

    family = truncated_j(ras, m, step, colors)
    for atom in range(ras.atom_count):
        owners = [name for name, mask in family if mask >> atom & 1]
        if len(owners) != 1:
            out.append({"condition": "not-a-partition",
                        "atom": ras.label(atom), "owners": owners})
    covered = 0
    for _, mask in family:
        covered |= mask
    if covered != (1 << ras.atom_count) - 1:
        out.append({"condition": "family-does-not-cover"})

    for r in range(step):
        cls = residue_class(m, step, r)
        for s in range(colors):
            for size in range(1, min(max_subset, len(cls)) + 1):
                for ys in itertools.combinations(cls, size):
                    pmask = color_block_mask(ras, list(ys), s)
                    wit = composition_triple_witness(ras, pmask)
                    if wit is not None:
                        a, b, c = wit
                        out.append({
                            "condition": "self-composition-meets-block",
                            "residue": r, "color": s, "vertices": list(ys),
                            "triple": [ras.label(a), ras.label(b),
                                       ras.label(c)]})
    for name, mask in family:
        if not is_monochromatic(ras, mask):
            out.append({"condition": "family-member-not-monochromatic",
                        "member": name})
    return out
