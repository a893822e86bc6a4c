"""The deterministic model builder: scheduling, step mechanics, invariant
verification, and byte-stable traces."""

from __future__ import annotations

import pytest

from baolab import (BuilderState, FinCofSet, PreconditionError, Task,
                    builder_step, builder_verify, run_builder, s_sequences,
                    trace_lines)
from baolab.builder import (order_least, scheduled_task, spiral_key,
                            spiral_order, validate_task)


def test_shape_sequences_exact():
    assert s_sequences(3, 2) == [(0, 0, 2), (0, 1, 2), (0, 2, 2),
                                 (1, 1, 2), (1, 2, 2), (2, 2, 2)]
    assert s_sequences(2, 0) == [(0, 0)]
    assert s_sequences(2, 3) == [(0, 3), (1, 3), (2, 3), (3, 3)]
    # weakly increasing, last entry pinned, lexicographic
    seqs = s_sequences(4, 2)
    assert seqs == sorted(seqs)
    for seq in seqs:
        assert seq[-1] == 2
        assert all(seq[i] <= seq[i + 1] for i in range(3))
    with pytest.raises(PreconditionError):
        s_sequences(1, 2)


def test_spiral_enumeration():
    gen = spiral_order()
    assert [next(gen) for _ in range(7)] == [0, -1, 1, -2, 2, -3, 3]
    # the key sorts finite sets the same way the stream enumerates
    stream = [0, -1, 1, -2, 2, -3, 3]
    assert sorted(stream, key=spiral_key) == stream


def test_order_least():
    assert order_least(FinCofSet.finite([3, 9])) == 3
    assert order_least(FinCofSet.finite([5, -5])) == -5
    assert order_least(FinCofSet.cofinite([])) == 0
    assert order_least(FinCofSet.cofinite([0, 1])) == -1
    assert order_least(FinCofSet.cofinite([0, -1, 1])) == -2
    with pytest.raises(PreconditionError):
        order_least(FinCofSet.empty())


def test_scheduled_tasks_are_valid_and_deterministic():
    for step in range(60):
        task = scheduled_task(step, 3)
        validate_task(task, 3)
        again = scheduled_task(step, 3)
        assert task == again


def test_task_validation_rejects_garbage():
    good = scheduled_task(5, 3)
    with pytest.raises(PreconditionError):
        validate_task(Task(good.alphas, -1, good.f), 3)


def test_fresh_state():
    state = BuilderState.fresh(3)
    assert state.n == 3
    assert state.step == 0
    assert state.block_of == ()
    assert state.relation_indices() == []


def test_single_step_adds_one_element():
    state = BuilderState.fresh(3)
    after, record = builder_step(state)
    assert after.step == 1
    assert len(after.block_of) == 1
    assert record.step == 0
    assert record.new_element == 0
    assert not record.deferred


def test_run_matches_stepwise_execution():
    state, records = run_builder(25, 3)
    replay = BuilderState.fresh(3)
    for rec in records:
        replay, rec2 = builder_step(replay)
        assert rec2 == rec
    assert replay == state


def test_run_invariants_and_frozen_counts():
    state, records = run_builder(80, 3)
    assert len(state.block_of) == 80
    assert len(state.rels) == 5
    assert sum(len(tuples) for _, tuples in state.rels) == 102
    assert builder_verify(state, records) == []


def test_trace_is_byte_stable():
    state, records = run_builder(40, 3)
    first = "\n".join(trace_lines(records))
    state2, records2 = run_builder(40, 3)
    second = "\n".join(trace_lines(records2))
    assert first == second
    assert builder_verify(state2, records2) == []


def test_verifier_catches_forged_records():
    import dataclasses
    state, records = run_builder(30, 3)
    forged = list(records)
    target = next(r for r in forged if not r.deferred and r.task.alphas)
    wrong_block = (target.task.block + 1) % 3
    forged[forged.index(target)] = dataclasses.replace(
        target, task=dataclasses.replace(target.task, block=wrong_block))
    findings = builder_verify(state, forged)
    assert any(f["condition"] == "wrong-block" for f in findings)


def test_relations_stay_disjoint_and_closed():
    state, _ = run_builder(60, 3)
    seen = {}
    for r, tuples in state.rels:
        for tup in tuples:
            assert len(tup) == 3
            assert state.distinct_blocks(tup)
            assert tup not in seen, "tuple owned by two relations"
            seen[tup] = r
            # permutation closure
            assert (tup[2], tup[0], tup[1]) in tuples
            assert (tup[1], tup[0], tup[2]) in tuples
