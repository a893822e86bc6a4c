"""Basic matrix enumeration against the one-cell-at-a-time brute force, and
the atom structure assembled from the matrices."""

from __future__ import annotations

import pytest

from baolab import (BudgetExceededError, Signature, brute_force_basic_matrices,
                    build_alpha, ca_atoms_from_matrices,
                    check_atom_structure_axioms, enumerate_basic_matrices,
                    is_basic_matrix)
from baolab.graphs import Graph


def _entry_sets(mats):
    return {m.entries for m in mats}


def test_counts_on_small_structures():
    # frozen from an independent product-loop count over all symmetric
    # assignments with the triangle rule checked from first principles
    single = build_alpha(Graph.edgeless(1), 3)
    assert len(enumerate_basic_matrices(single, 3)) == 34
    pair = build_alpha(Graph.complete(2), 3)
    assert len(enumerate_basic_matrices(pair, 3)) == 229
    chain = build_alpha(Graph.interval(4, 2), 3)
    assert len(enumerate_basic_matrices(chain, 3)) == 1699


def test_enumeration_equals_brute_force():
    for graph, colors, size in [(Graph.edgeless(1), 3, 3),
                                (Graph.complete(2), 3, 3),
                                (Graph.edgeless(1), 2, 4),
                                (Graph.complete(2), 2, 2)]:
        ras = build_alpha(graph, colors)
        fast = enumerate_basic_matrices(ras, size)
        slow = brute_force_basic_matrices(ras, size)
        assert _entry_sets(fast) == _entry_sets(slow)
        assert len(fast) == len(slow)


def test_every_enumerated_matrix_rechecks():
    ras = build_alpha(Graph.complete(2), 3)
    mats = enumerate_basic_matrices(ras, 3)
    for mat in mats:
        assert mat.size == 3
        assert is_basic_matrix(ras, mat)
        # diagonal pinned to the identity atom
        for x in range(3):
            assert mat.entry(x, x) == ras.identity
        # symmetry of the entry table
        for x in range(3):
            for y in range(3):
                assert mat.entry(x, y) == mat.entry(y, x)


def test_rejects_non_matrix():
    # a monochromatic triangle on a vertex with no loop edge cannot be basic
    ras = build_alpha(Graph.edgeless(1), 3)
    good = enumerate_basic_matrices(ras, 3)[0]
    mono = ras.atom_index(0, 0)
    rows = [list(row) for row in good.entries]
    for i in range(3):
        for j in range(3):
            if i != j:
                rows[i][j] = mono
    bad = type(good)(3, tuple(tuple(row) for row in rows))
    assert not is_basic_matrix(ras, bad)


def test_atoms_from_matrices_satisfy_the_axioms():
    for graph, colors in [(Graph.edgeless(1), 3), (Graph.complete(2), 3)]:
        ras = build_alpha(graph, colors)
        mats = enumerate_basic_matrices(ras, 3)
        structure = ca_atoms_from_matrices(ras, mats)
        assert structure.atom_count == len(mats)
        assert structure.dimension == 3
        assert check_atom_structure_axioms(structure, Signature.pea(3)) == []


def test_upper_triangle_determines_the_matrix():
    ras = build_alpha(Graph.complete(2), 3)
    mats = enumerate_basic_matrices(ras, 3)
    uppers = {m.upper_triangle() for m in mats}
    assert len(uppers) == len(mats)
    sample = mats[17]
    assert sample.upper_triangle() == (sample.entry(0, 1), sample.entry(0, 2),
                                       sample.entry(1, 2))


def test_budget_is_enforced():
    ras = build_alpha(Graph.interval(4, 2), 3)
    with pytest.raises(BudgetExceededError):
        enumerate_basic_matrices(ras, 3, budget=5)
