"""Back-and-forth games on atomic presentations.

Winner table frozen from an independent minimax over explicit atom tuples
(equality pattern plus per-component unit flag as the position type).
"""

from __future__ import annotations

import random

import pytest

from baolab import (PreconditionError, UNBOUNDED, boolean_algebra, ef_decide,
                    ef_system_equivalence_test, fresh_atom_strategy_verify,
                    product_model, system_exists)
from baolab.games.ef import (bf_system_check, certificate_system_prefix,
                             qf_type, verify_forall_table,
                             verify_mirror_strategy)

# (supplies A, supplies B, rounds) -> winner, frozen from the reference search
WINNERS = [
    ((1,), (2,), 0, "exists"),
    ((1,), (2,), 1, "forall"),
    ((2,), (2,), 3, "exists"),
    ((2,), (3,), 1, "exists"),
    ((2,), (3,), 2, "exists"),
    ((2,), (3,), 3, "forall"),
    ((2, 3), (3, 2), 2, "exists"),
    ((2, 3), (3, 2), 3, "forall"),
    ((1, 1), (1, 1), 2, "exists"),
    ((1, 2), (2, 1), 1, "forall"),
    ((3,), (4,), 3, "exists"),
    ((3,), (4,), 4, "forall"),
    ((1, 3), (1, 3), 2, "exists"),
    ((2, 2), (2, 2), 4, "exists"),
]


def test_winner_table():
    for sa, sb, rounds, expected in WINNERS:
        result = ef_decide(product_model(sa), product_model(sb), rounds)
        assert result.winner == expected, (sa, sb, rounds)
        assert result.rounds == rounds


def test_presentation_accessors():
    p = product_model((2, 1))
    assert p.atom_count() == 3
    assert p.is_finite
    assert p.atom_is_unit((0, 0)) is False
    assert p.atom_is_unit((1, 0)) is True
    q = product_model((2, UNBOUNDED))
    assert not q.is_finite
    r = q.reify(3)
    assert r.is_finite and r.supply(1) == 3
    assert boolean_algebra(4).components == (4,)


def test_qf_type_separates_exactly_the_right_tuples():
    p = product_model((2, 1))
    atoms = p.atoms()
    # same equality pattern, same component kinds: same type
    assert qf_type(p, (atoms[0],)) == qf_type(p, (atoms[1],))
    # the unit atom of a singleton component types differently
    assert qf_type(p, (atoms[0],)) != qf_type(p, (atoms[2],))
    # equality pattern matters
    assert qf_type(p, (atoms[0], atoms[0])) != qf_type(p, (atoms[0], atoms[1]))


def test_winner_is_symmetric_under_swapping_sides():
    rng = random.Random(71)
    for _ in range(40):
        sa = tuple(rng.randint(1, 3) for _ in range(rng.randint(1, 3)))
        sb = tuple(rng.randint(1, 3) for _ in range(rng.randint(1, 3)))
        k = rng.randint(0, 2)
        one = ef_decide(product_model(sa), product_model(sb), k)
        two = ef_decide(product_model(sb), product_model(sa), k)
        assert one.winner == two.winner


def test_mirror_strategy_on_identical_presentations():
    for supplies in [(1,), (3,), (2, 2), (1, 4, 2)]:
        p = product_model(supplies)
        assert verify_mirror_strategy(p, p, 3)
        assert ef_decide(p, p, 4).winner == "exists"


def test_forall_certificates_replay():
    for sa, sb, rounds, expected in WINNERS:
        if expected != "forall":
            continue
        a, b = product_model(sa), product_model(sb)
        result = ef_decide(a, b, rounds)
        assert verify_forall_table(a, b, result)


def test_game_and_family_views_agree_everywhere():
    rng = random.Random(72)
    for _ in range(60):
        sa = tuple(rng.randint(1, 4) for _ in range(rng.randint(1, 3)))
        sb = tuple(rng.randint(1, 4) for _ in range(rng.randint(1, 3)))
        k = rng.randint(0, 3)
        verdict = ef_system_equivalence_test(product_model(sa),
                                             product_model(sb), k)
        assert verdict["agree"], (sa, sb, k, verdict)
        assert verdict["ef_winner"] == verdict["system_winner"]


def test_system_certificate_passes_the_clause_check():
    for sa, sb, depth in [((2,), (3,), 2), ((2, 2), (2, 2), 3),
                          ((1, 3), (1, 3), 2)]:
        a, b = product_model(sa), product_model(sb)
        if system_exists(a, b, depth):
            system = certificate_system_prefix(a, b, depth)
            assert ((), ()) in system
            ok, witness = bf_system_check(system, a, b)
            assert ok and witness is None


def test_tampered_system_fails_a_clause():
    a, b = product_model((2,)), product_model((3,))
    system = set(certificate_system_prefix(a, b, 2))
    system.discard(sorted(system)[-1])
    ok, witness = bf_system_check(system, a, b)
    assert not ok
    assert witness is not None


def test_fresh_atom_strategy_component_analysis():
    cases = [
        ((2, UNBOUNDED), (2, UNBOUNDED), 3, "exists"),
        ((UNBOUNDED,), (UNBOUNDED,), 2, "exists"),
        ((1, 2), (1, 2), 3, "exists"),
        ((2,), (3,), 2, "exists"),
        ((2,), (3,), 3, "forall"),
        ((UNBOUNDED, 3), (UNBOUNDED, 3), 2, "exists"),
        ((1,), (UNBOUNDED,), 2, "forall"),
        ((4, 4), (4, 4), 3, "exists"),
    ]
    for sa, sb, rounds, expected in cases:
        report = fresh_atom_strategy_verify(product_model(sa),
                                            product_model(sb), rounds)
        assert report["winner"] == expected, (sa, sb, rounds)
        assert report["ef_agrees"], (sa, sb, rounds)
        if expected == "exists":
            assert report["failing_components"] == []
            assert report["validated_rounds"] == rounds
        else:
            assert report["failing_components"]


def test_fresh_atom_strategy_needs_matching_shapes():
    with pytest.raises(PreconditionError):
        fresh_atom_strategy_verify(product_model((2,)),
                                   product_model((2, 2)), 1)


def test_unbounded_components_never_exhaust():
    # with both supplies unbounded the duplicator survives any tested depth
    a = product_model((UNBOUNDED,))
    b = product_model((UNBOUNDED,))
    for rounds in (1, 2, 3, 4):
        report = fresh_atom_strategy_verify(a, b, rounds)
        assert report["winner"] == "exists" and report["ef_agrees"]
