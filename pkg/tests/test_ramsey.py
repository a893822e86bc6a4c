import itertools

import pytest

from baolab import PreconditionError, build_alpha, ramsey_kernel_check
from baolab.graphs import Graph
from baolab.ramsey import (color_block_mask, composition_triple_witness,
                           is_monochromatic, residue_class, truncated_j)


def test_residue_classes_partition_the_vertices():
    for m, step in ((12, 3), (30, 3), (10, 4)):
        seen = []
        for r in range(step):
            cls = residue_class(m, step, r)
            assert all(v % step == r for v in cls)
            seen.extend(cls)
        assert sorted(seen) == list(range(m))


def test_family_partitions_the_atoms():
    ras = build_alpha(Graph.interval(12, 3), 3)
    family = truncated_j(ras, 12, 3, 3)
    assert len(family) == 1 + 3 * 3
    assert family[0] == ("1'", 1 << ras.identity)
    union = 0
    for _, mask in family:
        assert union & mask == 0, "family members overlap"
        union |= mask
    assert union == (1 << ras.atom_count) - 1


def test_residue_blocks_compose_away_from_themselves():
    # vertices in one residue class are pairwise non-adjacent (distance is a
    # multiple of the step), so a single-colour block on them can never
    # appear in its own composition
    ras = build_alpha(Graph.interval(12, 3), 3)
    for r in range(3):
        cls = residue_class(12, 3, r)
        for color in range(3):
            for size in (1, 2, 3):
                for ys in itertools.combinations(cls, size):
                    pmask = color_block_mask(ras, list(ys), color)
                    assert composition_triple_witness(ras, pmask) is None
                    comp = 0
                    atoms = [a for a in range(ras.atom_count)
                             if pmask >> a & 1]
                    for a in atoms:
                        for b in atoms:
                            comp |= ras.compose_atoms(a, b)
                    assert comp & pmask == 0


def test_adjacent_vertices_break_the_block_law():
    # 0 and 1 are adjacent in the distance graph, so the monochromatic block
    # on them meets its own composition
    ras = build_alpha(Graph.interval(12, 3), 3)
    pmask = color_block_mask(ras, [0, 1], 0)
    witness = composition_triple_witness(ras, pmask)
    assert witness is not None
    a, b, c = witness
    for atom in (a, b, c):
        assert pmask >> atom & 1
    assert ras.consistent(a, b, c)


def test_monochromatic_detection():
    ras = build_alpha(Graph.interval(12, 3), 3)
    assert is_monochromatic(ras, 1 << ras.identity)
    assert is_monochromatic(ras, color_block_mask(ras, [0, 3, 6], 1))
    mixed = color_block_mask(ras, [0], 0) | color_block_mask(ras, [0], 1)
    assert not is_monochromatic(ras, mixed)
    assert not is_monochromatic(ras, 0)


def test_kernel_check_passes():
    assert ramsey_kernel_check(12, 3, 3, max_subset=4) == []
    assert ramsey_kernel_check(30, 3, 3) == []


def test_kernel_check_rejects_narrow_steps():
    with pytest.raises(PreconditionError):
        ramsey_kernel_check(12, 2, 3)
