"""Network extension game against the brute-force referee.

Structures are small colour structures where both engines finish instantly;
winners were frozen from the brute-force runs and cross-checked by hand for
the one-round cases.
"""

from __future__ import annotations

import pytest

from baolab import PreconditionError, build_alpha
from baolab.games.square import (brute_force_square, canonical_form,
                                 extension_networks, initial_network,
                                 legal_demands, square_game)
from baolab.graphs import Graph


def _structures():
    return [("loner", build_alpha(Graph.edgeless(1), 2)),
            ("edge", build_alpha(Graph.complete(2), 2))]


def test_initial_network_is_a_single_reflexive_point():
    for _, ras in _structures():
        net = initial_network(ras)
        assert net.size == 1
        assert net.label(0, 0) == ras.identity


def test_round_zero_is_always_a_duplicator_win():
    for _, ras in _structures():
        for bound in (3, 4, 5):
            assert square_game(ras, bound, 0).winner == "exists"
            assert brute_force_square(ras, bound, 0) == "exists"


def test_solver_matches_brute_force():
    for name, ras in _structures():
        for bound in (3, 4):
            for rounds in (0, 1, 2, 3):
                fast = square_game(ras, bound, rounds)
                slow = brute_force_square(ras, bound, rounds)
                assert fast.winner == slow, (name, bound, rounds)


def test_frozen_winners():
    loner = build_alpha(Graph.edgeless(1), 2)
    edge = build_alpha(Graph.complete(2), 2)
    # with three nodes a monochromatic triangle is forced one round sooner
    # over the single vertex than over the edge
    assert square_game(loner, 3, 2).winner == "exists"
    assert square_game(loner, 3, 3).winner == "forall"
    assert square_game(loner, 4, 3).winner == "exists"
    assert square_game(loner, 4, 4).winner == "forall"
    assert square_game(edge, 4, 3).winner == "exists"
    assert square_game(edge, 4, 4).winner == "forall"


def test_more_rounds_never_help_the_duplicator():
    for _, ras in _structures():
        for bound in (3, 4):
            winners = [square_game(ras, bound, r).winner for r in range(5)]
            if "forall" in winners:
                first = winners.index("forall")
                assert all(w == "forall" for w in winners[first:]), winners


def test_wider_bound_never_hurts_the_duplicator():
    for _, ras in _structures():
        for rounds in (1, 2, 3):
            if square_game(ras, 3, rounds).winner == "exists":
                assert square_game(ras, 4, rounds).winner == "exists"


def test_demands_are_composition_faithful():
    ras = build_alpha(Graph.complete(2), 2)
    net = initial_network(ras)
    demands = legal_demands(ras, net)
    assert demands
    for (x, y, a, b) in demands:
        # the demanded split must actually be available for the labelled pair
        assert ras.compose_atoms(a, b) >> net.label(x, y) & 1
    # answering a demand inserts a witness node with the demanded labels
    x, y, a, b = demands[0]
    for extended in extension_networks(ras, net, x, y, a, b):
        z = extended.size - 1
        assert extended.label(x, z) == a
        assert extended.label(z, y) == b


def test_canonical_form_is_renaming_invariant():
    ras = build_alpha(Graph.complete(2), 2)
    net = initial_network(ras)
    x, y, a, b = legal_demands(ras, net)[0]
    nets = extension_networks(ras, net, x, y, a, b)
    assert len({canonical_form(n) for n in nets}) <= len(nets)
    for n in nets:
        assert canonical_form(n) == canonical_form(n)


def test_certificate_of_the_round_one_win():
    ras = build_alpha(Graph.edgeless(1), 2)
    result = square_game(ras, 3, 1)
    assert result.winner == "exists"
    assert result.clique_bound == 3
    assert result.rounds == 1
    assert result.certificate


def test_tight_bound_is_rejected():
    ras = build_alpha(Graph.edgeless(1), 2)
    with pytest.raises(PreconditionError):
        square_game(ras, 2, 1)
