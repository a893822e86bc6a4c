"""Deterministic step-by-step construction of a block-partitioned structure
with disjoint symmetric n-ary relations, plus its invariant verifier and a
replayable JSON-lines trace.

Elements are created one per step over the integer group stand-in.  The
group carries the well-order 0, -1, 1, -2, 2, ...; each step realizes one
saturation demand: given previously chosen elements and an assignment f from
index shapes to nonempty finite-or-cofinite integer sets, the fresh element
completes tuples that land in the relation indexed by the order-least member
of the shape's set.  Only tuples whose entries sit in pairwise distinct
blocks are ever added (the relations must refine the block-distinctness
predicate), and every added tuple is closed under coordinate permutations.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field

from .errors import PreconditionError
from .fincof import FinCofSet


def spiral_key(r: int) -> tuple[int, int]:
    return (abs(r), 0 if r < 0 else 1)


def spiral_order():
    """0, -1, 1, -2, 2, ...: a well-order of the integers."""
    yield 0
    k = 1
    while True:
        yield -k
        yield k
        k += 1


def order_least(xs: FinCofSet) -> int:
    if xs.is_empty:
        raise PreconditionError("empty set has no least element")
    if xs.is_finite:
        return xs.least(key=spiral_key)
    return xs.least(enumeration=spiral_order())


def s_sequences(n: int, k: int) -> list[tuple[int, ...]]:
    """Weakly increasing length-n index shapes with final entry k, in
    lexicographic order."""
    if n < 2 or k < 0:
        raise PreconditionError("need n >= 2 and k >= 0")
    return [head + (k,)
            for head in itertools.combinations_with_replacement(
                range(k + 1), n - 1)]


@dataclass(frozen=True)
class Task:
    """One saturation demand: anchor elements, target block, and the shape
    assignment (one nonempty finite-or-cofinite set per index shape)."""
    alphas: tuple[int, ...]
    block: int
    f: tuple[tuple[tuple[int, ...], FinCofSet], ...]

    def shape_map(self) -> dict[tuple[int, ...], FinCofSet]:
        return dict(self.f)

    def to_json(self) -> dict:
        return {
            "alphas": list(self.alphas),
            "block": self.block,
            "f": [{"shape": list(shape), "set": xs.to_json()}
                  for shape, xs in self.f],
        }


def validate_task(task: Task, n: int) -> None:
    if len(set(task.alphas)) != len(task.alphas):
        raise PreconditionError("anchor elements must be distinct")
    if not (0 <= task.block < n):
        raise PreconditionError("target block out of range")
    k = len(task.alphas)
    expected = s_sequences(n, k)
    got = [shape for shape, _ in task.f]
    if got != expected:
        raise PreconditionError("shape assignment does not cover S(n,k)")
    for shape, xs in task.f:
        if xs.is_empty:
            raise PreconditionError(f"empty set assigned to shape {shape}")


@dataclass(frozen=True)
class BuilderState:
    n: int
    step: int
    block_of: tuple[int, ...]
    rels: tuple[tuple[int, frozenset[tuple[int, ...]]], ...]

    @staticmethod
    def fresh(n: int) -> BuilderState:
        if n < 2:
            raise PreconditionError("need n >= 2")
        return BuilderState(n=n, step=0, block_of=(), rels=())

    def relation(self, r: int) -> frozenset[tuple[int, ...]]:
        for q, tuples in self.rels:
            if q == r:
                return tuples
        return frozenset()

    def relation_indices(self) -> list[int]:
        return [q for q, _ in self.rels]

    def all_tuples(self):
        for _, tuples in self.rels:
            yield from tuples

    def distinct_blocks(self, tup: tuple[int, ...]) -> bool:
        blocks = [self.block_of[w] for w in tup]
        return len(set(blocks)) == len(blocks)


@dataclass(frozen=True)
class StepRecord:
    step: int
    task: Task
    new_element: int
    deferred: bool
    added: tuple[tuple[int, tuple[tuple[int, ...], ...]], ...]

    def to_json(self) -> dict:
        return {
            "l": self.step,
            "task": self.task.to_json(),
            "new_element": self.new_element,
            "deferred": self.deferred,
            "added_tuples": {str(r): [list(t) for t in tups]
                             for r, tups in self.added},
        }


K_PATTERN = (0, 2, 1, 2, 3, 2, 0, 3)

F_CATALOG = (
    FinCofSet.finite([0]),
    FinCofSet.finite([1]),
    FinCofSet.finite([-1]),
    FinCofSet.finite([0, 1]),
    FinCofSet.finite([2]),
    FinCofSet.cofinite([]),
    FinCofSet.cofinite([0]),
    FinCofSet.cofinite([1]),
    FinCofSet.cofinite([-1, 0, 1]),
)


def scheduled_task(step: int, n: int) -> Task:
    """The deterministic demand schedule.

    Every seventh offset issues a demand anchored on the element being
    created, which the step rule must carry (no tuples); other steps anchor
    on recent elements with an alternating stride.  Shape sets rotate
    through a fixed catalog of finite and cofinite integer sets.
    """
    if step % 7 == 5:
        alphas: tuple[int, ...] = (step,)
    else:
        k = K_PATTERN[step % len(K_PATTERN)]
        stride = 1 + step % 2
        picked = []
        for t in range(k):
            cand = step - 1 - t * stride
            if cand >= 0:
                picked.append(cand)
        alphas = tuple(sorted(set(picked)))
    shapes = s_sequences(n, len(alphas))
    f = tuple((shape, F_CATALOG[(step + idx) % len(F_CATALOG)])
              for idx, shape in enumerate(shapes))
    return Task(alphas=alphas, block=step % n, f=f)


def builder_step(state: BuilderState, task: Task | None = None
                 ) -> tuple[BuilderState, StepRecord]:
    """Run one step: add the fresh element, and unless the demand anchors on
    a not-yet-created element, add the demanded tuples (block-distinct ones
    only) closed under permutations."""
    l = state.step
    n = state.n
    if task is None:
        task = scheduled_task(l, n)
    validate_task(task, n)
    block_of = state.block_of + (task.block,)
    deferred = any(a >= l for a in task.alphas)
    rels = {r: set(tuples) for r, tuples in state.rels}
    added: dict[int, set[tuple[int, ...]]] = {}
    if not deferred:
        v = [*task.alphas, l]
        blocks = [block_of[w] for w in v]
        for shape, xs in task.f:
            tup = tuple(v[idx] for idx in shape)
            tup_blocks = [blocks[idx] for idx in shape]
            if len(set(tup_blocks)) != n:
                continue
            r = order_least(xs)
            bucket = rels.setdefault(r, set())
            new_here = added.setdefault(r, set())
            for perm in itertools.permutations(range(n)):
                image = tuple(tup[p] for p in perm)
                if image not in bucket:
                    bucket.add(image)
                    new_here.add(image)
    next_state = BuilderState(
        n=n, step=l + 1, block_of=block_of,
        rels=tuple(sorted(((r, frozenset(tuples))
                           for r, tuples in rels.items()),
                          key=lambda item: item[0])))
    record = StepRecord(
        step=l, task=task, new_element=l, deferred=deferred,
        added=tuple(sorted((r, tuple(sorted(tups)))
                           for r, tups in added.items() if tups)))
    return next_state, record


def run_builder(steps: int, n: int) -> tuple[BuilderState, list[StepRecord]]:
    state = BuilderState.fresh(n)
    records = []
    for _ in range(steps):
        state, rec = builder_step(state)
        records.append(rec)
    return state, records


def trace_lines(records: list[StepRecord]) -> list[str]:
    return [json.dumps(rec.to_json(), sort_keys=True, separators=(",", ":"))
            for rec in records]


def _eta_holds(state: BuilderState, tup: tuple[int, ...],
               xs: FinCofSet) -> bool:
    """Disjunction over a finite set, negated disjunction over a cofinite
    complement."""
    if xs.is_finite:
        return any(tup in state.relation(r) for r in sorted(xs.support))
    return not any(tup in state.relation(p) for p in sorted(xs.support))


def builder_verify(state: BuilderState,
                   records: list[StepRecord]) -> list[dict]:
    """Invariant report for a finished run: block-distinctness of every
    tuple, permutation closure, pairwise disjointness, each realized demand's
    prescription, and the direct existential spot-check it implies on full
    anchors.  Empty list means pass."""
    out: list[dict] = []
    n = state.n
    for r, tuples in state.rels:
        for tup in tuples:
            if len(tup) != n:
                out.append({"condition": "bad-arity", "relation": r,
                            "tuple": list(tup)})
            elif not state.distinct_blocks(tup):
                out.append({"condition": "blocks-not-distinct", "relation": r,
                            "tuple": list(tup)})
    for r, tuples in state.rels:
        for tup in tuples:
            for perm in itertools.permutations(range(n)):
                image = tuple(tup[p] for p in perm)
                if image not in tuples:
                    out.append({"condition": "not-permutation-closed",
                                "relation": r, "tuple": list(tup),
                                "missing": list(image)})
                    break
            else:
                continue
            break
    owner: dict[tuple[int, ...], int] = {}
    for r, tuples in state.rels:
        for tup in tuples:
            if tup in owner:
                out.append({"condition": "relations-not-disjoint",
                            "tuple": list(tup), "relations": [owner[tup], r]})
            else:
                owner[tup] = r
    for rec in records:
        if rec.deferred:
            continue
        task = rec.task
        l = rec.new_element
        if state.block_of[l] != task.block:
            out.append({"condition": "wrong-block", "step": rec.step})
            continue
        v = [*task.alphas, l]
        for shape, xs in task.f:
            tup = tuple(v[idx] for idx in shape)
            if not state.distinct_blocks(tup):
                continue
            if not _eta_holds(state, tup, xs):
                out.append({"condition": "prescription-violated",
                            "step": rec.step, "shape": list(shape),
                            "tuple": list(tup)})
    for rec in records:
        if rec.deferred or len(rec.task.alphas) != n - 1:
            continue
        v = [*rec.task.alphas, rec.new_element]
        prefix = tuple(v[:n - 1])
        # the demand only guarantees a witness when the whole tuple was
        # block-distinct, target block included
        if len({state.block_of[w] for w in v}) != n:
            continue
        full_shape = tuple(range(n - 1)) + (n - 1,)
        xs = rec.task.shape_map()[full_shape]
        r = order_least(xs)
        if not any(prefix + (w,) in state.relation(r)
                   for w in range(state.step)):
            out.append({"condition": "extension-witness-missing",
                        "step": rec.step, "relation": r,
                        "prefix": list(prefix)})
    return out
