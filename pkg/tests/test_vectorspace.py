"""Exact-arithmetic sequences, the first-entry-versus-tail hyperplane, the
two-witness singleton recovery, and the restriction embedding."""

from __future__ import annotations

import random
from fractions import Fraction

from baolab import (FiniteSupportSeq, in_y, neat_embedding_map_check,
                    plane_witnesses, singleton_recovery_check)


def _random_seq(rng: random.Random) -> FiniteSupportSeq:
    pairs = []
    for i in range(8):
        if rng.random() < 0.6:
            pairs.append((i, Fraction(rng.randint(-6, 6), rng.randint(1, 4))))
    return FiniteSupportSeq.from_pairs(pairs)


def test_sequence_normal_form():
    s = FiniteSupportSeq.from_pairs([(3, 2), (0, Fraction(1, 2)), (5, 0)])
    assert s.entries == ((0, Fraction(1, 2)), (3, Fraction(2)))
    assert s.support == (0, 3)
    assert s.get(5) == 0 and s.get(99) == 0
    assert s.prefix(4) == (Fraction(1, 2), 0, 0, 2)
    assert FiniteSupportSeq.from_prefix([1, 0, 3]).support == (0, 2)
    assert FiniteSupportSeq.zero().entries == ()


def test_replace_and_tail_sum():
    s = FiniteSupportSeq.from_prefix([1, 2, 3])
    assert s.tail_sum(0) == 5
    assert s.tail_sum(1) == 3
    assert s.tail_sum(2) == 0
    t = s.replace(1, 0)
    assert t.support == (0, 2)
    assert t.tail_sum(0) == 3
    assert s.replace(0, Fraction(7, 2)).get(0) == Fraction(7, 2)


def test_hyperplane_membership_hand_cases():
    assert in_y(FiniteSupportSeq.from_prefix([1, 2]))        # 1 + 1 == 2
    assert in_y(FiniteSupportSeq.from_prefix([0, 1]))
    assert in_y(FiniteSupportSeq.from_prefix([2, 1, 2]))     # 2 + 1 == 3
    assert not in_y(FiniteSupportSeq.from_prefix([2, 5]))
    assert not in_y(FiniteSupportSeq.zero())                 # 0 + 1 != 0
    assert in_y(FiniteSupportSeq.from_pairs([(0, -1)]))      # -1 + 1 == 0


def test_witnesses_land_in_the_plane_by_construction():
    rng = random.Random(57)
    for _ in range(300):
        s = _random_seq(rng)
        w1, w2 = plane_witnesses(s)
        assert in_y(w1) and in_y(w2)
        # w1 only moves coordinate 1, w2 only coordinate 0
        assert w1.get(0) == s.get(0)
        assert w2.get(1) == s.get(1)
        for i in set(s.support) | set(w1.support) | set(w2.support):
            if i > 1:
                assert w1.get(i) == s.get(i)
                assert w2.get(i) == s.get(i)


def test_witness_values_hand_checked():
    s = FiniteSupportSeq.from_prefix([2, 5])
    w1, w2 = plane_witnesses(s)
    assert w1.prefix(2) == (2, 3)   # tail beyond 1 is empty: 2 + 1 = 3
    assert w2.prefix(2) == (4, 5)   # 4 + 1 = 5


def test_singleton_recovery_on_random_sequences():
    rng = random.Random(58)
    for _ in range(300):
        s = _random_seq(rng)
        assert singleton_recovery_check(s)


def test_membership_is_sharp_under_perturbation():
    rng = random.Random(59)
    for _ in range(100):
        s = _random_seq(rng)
        forced = s.replace(0, s.tail_sum(0) - 1)
        assert in_y(forced)
        assert not in_y(forced.replace(0, forced.get(0) + 1))


def test_embedding_respects_the_three_operations():
    samples = [
        frozenset({(Fraction(0), Fraction(1)), (Fraction(1), Fraction(1))}),
        frozenset({(Fraction(1, 2), Fraction(0))}),
        frozenset(),
    ]
    assert neat_embedding_map_check(samples, width=2, pad=1) == []
    assert neat_embedding_map_check(samples, width=2, pad=2) == []


def test_embedding_flags_bad_arity():
    samples = [frozenset({(Fraction(0),)})]
    findings = neat_embedding_map_check(samples, width=2, pad=1)
    assert findings == [{"condition": "bad-sample-arity", "sample": 0}]
