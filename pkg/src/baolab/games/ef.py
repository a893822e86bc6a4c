"""Atom-picking comparison games on atomic presentations, decided
exhaustively, plus the back-and-forth-system view of the same question.

The game: each round one player picks an atom in either structure, the other
answers in the opposite structure; the answering side survives while the two
chosen tuples keep the same trace (equality pattern, components, units).
`ef_decide` solves the k-round game by minimax over abstract positions;
`system_exists` answers the same question through a depth-bounded
back-and-forth family over concrete atom tuples, with no shared code path.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import BudgetExceededError, PreconditionError
from .presentations import UNBOUNDED, AtomicPresentation

Atom = tuple[int, int]

EXISTS = "exists"
FORALL = "forall"


def qf_type(pres: AtomicPresentation, tup: tuple[Atom, ...]) -> tuple:
    """The compared trace: first-occurrence pattern and per-position
    (component, is-unit)."""
    pattern = tuple(tup.index(a) for a in tup)
    classes = tuple((a[0], pres.atom_is_unit(a)) for a in tup)
    return (pattern, classes)


def _class_supplies(pres: AtomicPresentation) -> dict[tuple[int, bool], int]:
    """Atoms per (component, is-unit) class; None stands for unbounded."""
    out: dict[tuple[int, bool], int] = {}
    for u, size in enumerate(pres.components):
        if size is UNBOUNDED:
            out[(u, False)] = None
        elif size == 1:
            out[(u, True)] = 1
        elif size > 1:
            out[(u, False)] = size
    return out


@dataclass(frozen=True)
class GameResult:
    winner: str
    rounds: int
    certificate: dict

    def to_json(self) -> dict:
        return {"winner": self.winner, "rounds": self.rounds,
                "certificate": self.certificate}


def _fresh_left(supply: int | None, used: int) -> bool:
    if supply is None:
        return True
    return supply - used > 0


def ef_decide(a: AtomicPresentation, b: AtomicPresentation,
              rounds: int, budget: int = 1_000_000) -> GameResult:
    """Exhaustive solve of the k-round game.

    Positions are abstracted to per-class counts of distinct atoms in play:
    atoms sharing (component, is-unit) are interchangeable, and the survival
    condition forces the played tuples to use equal counts per class on both
    sides.  The challenger's options per position: replay a used atom
    (position unchanged), or demand a fresh atom of some class on one side;
    the answer is forced up to interchangeability.
    """
    if rounds < 0:
        raise PreconditionError("rounds must be nonnegative")
    sup_a = _class_supplies(a)
    sup_b = _class_supplies(b)
    classes = sorted(set(sup_a) | set(sup_b))
    memo: dict[tuple, str] = {}
    winning_move: dict[tuple, dict] = {}
    visited = 0

    def key(used: tuple[int, ...], r: int) -> tuple:
        return (used, r)

    def value(used: tuple[int, ...], r: int) -> str:
        nonlocal visited
        if r == 0:
            return EXISTS
        k = key(used, r)
        if k in memo:
            return memo[k]
        visited += 1
        if visited > budget:
            raise BudgetExceededError("game search budget exhausted",
                                      spent=visited)
        result = EXISTS
        move: dict | None = None
        for idx, cls in enumerate(classes):
            in_a = _fresh_left(sup_a.get(cls, 0), used[idx])
            in_b = _fresh_left(sup_b.get(cls, 0), used[idx])
            if in_a and not in_b:
                result, move = FORALL, {"move": "fresh", "side": "A",
                                        "class": list(cls)}
                break
            if in_b and not in_a:
                result, move = FORALL, {"move": "fresh", "side": "B",
                                        "class": list(cls)}
                break
            if in_a and in_b:
                child = used[:idx] + (used[idx] + 1,) + used[idx + 1:]
                if value(child, r - 1) == FORALL:
                    result, move = FORALL, {"move": "fresh", "side": "A",
                                            "class": list(cls)}
                    break
        if result == EXISTS and any(used):
            # replaying a used atom burns a round without moving
            if value(used, r - 1) == FORALL:
                result, move = FORALL, {"move": "repeat"}
        memo[k] = result
        if move is not None:
            winning_move[k] = move
        return result

    start = tuple(0 for _ in classes)
    winner = value(start, rounds)
    if winner == FORALL:
        cert = {"strategy": "table",
                "classes": [list(c) for c in classes],
                "moves": [{"used": list(k[0]), "rounds_left": k[1],
                           **mv} for k, mv in sorted(winning_move.items())]}
    else:
        cert = {"strategy": "mirror",
                "rule": "answer a replayed atom with its partner, a fresh "
                        "atom with a fresh atom of the same class"}
    return GameResult(winner=winner, rounds=rounds, certificate=cert)


def verify_mirror_strategy(a: AtomicPresentation, b: AtomicPresentation,
                           rounds: int) -> bool:
    """Replay the answering strategy against every challenger line; true when
    it survives all of them for the given depth."""
    sup_a = _class_supplies(a)
    sup_b = _class_supplies(b)
    classes = sorted(set(sup_a) | set(sup_b))

    def walk(used: tuple[int, ...], r: int) -> bool:
        if r == 0:
            return True
        for idx, cls in enumerate(classes):
            in_a = _fresh_left(sup_a.get(cls, 0), used[idx])
            in_b = _fresh_left(sup_b.get(cls, 0), used[idx])
            if in_a or in_b:
                if not (in_a and in_b):
                    return False
                child = used[:idx] + (used[idx] + 1,) + used[idx + 1:]
                if not walk(child, r - 1):
                    return False
        if any(used) and not walk(used, r - 1):
            return False
        return True

    return walk(tuple(0 for _ in classes), rounds)


def verify_forall_table(a: AtomicPresentation, b: AtomicPresentation,
                        result: GameResult) -> bool:
    """Replay a challenger certificate: follow its recorded move at every
    reachable position and confirm the answerer is stuck within the round
    budget on every branch."""
    if result.winner != FORALL:
        return False
    sup_a = _class_supplies(a)
    sup_b = _class_supplies(b)
    classes = [tuple(c) for c in result.certificate["classes"]]
    table = {(tuple(mv["used"]), mv["rounds_left"]):
             mv for mv in result.certificate["moves"]}

    def walk(used: tuple[int, ...], r: int) -> bool:
        if r == 0:
            return False
        mv = table.get((used, r))
        if mv is None:
            return False
        if mv["move"] == "repeat":
            return walk(used, r - 1)
        cls = tuple(mv["class"])
        idx = classes.index(cls)
        side = sup_a if mv["side"] == "A" else sup_b
        other = sup_b if mv["side"] == "A" else sup_a
        if not _fresh_left(side.get(cls, 0), used[idx]):
            return False
        if not _fresh_left(other.get(cls, 0), used[idx]):
            return True
        child = used[:idx] + (used[idx] + 1,) + used[idx + 1:]
        return walk(child, r - 1)

    return walk(tuple(0 for _ in classes), result.rounds)


def system_exists(a: AtomicPresentation, b: AtomicPresentation,
                  depth: int) -> bool:
    """Independent oracle: is there a depth-bounded back-and-forth family?

    Works over concrete atom tuples: a pair is good at depth r if the traces
    match and every one-atom extension on either side admits an answering
    extension good at depth r-1.  Memoized on the renaming-invariant shape of
    the pair.
    """
    if not (a.is_finite and b.is_finite):
        raise PreconditionError("oracle needs finite structures")
    atoms_a = a.atoms()
    atoms_b = b.atoms()
    memo: dict[tuple, bool] = {}

    def compatible(abar: tuple, bbar: tuple, c: Atom, d: Atom) -> bool:
        if (c in abar) != (d in bbar):
            return False
        if c in abar and abar.index(c) != bbar.index(d):
            return False
        return (c[0], a.atom_is_unit(c)) == (d[0], b.atom_is_unit(d))

    def shape(abar: tuple, bbar: tuple) -> tuple:
        return tuple((abar.index(x), x[0], a.atom_is_unit(x))
                     for x in abar)

    def good(abar: tuple, bbar: tuple, r: int) -> bool:
        if r == 0:
            return True
        k = (shape(abar, bbar), r)
        if k in memo:
            return memo[k]
        ok = True
        for c in atoms_a:
            if not any(good(abar + (c,), bbar + (d,), r - 1)
                       for d in atoms_b if compatible(abar, bbar, c, d)):
                ok = False
                break
        if ok:
            for d in atoms_b:
                if not any(good(abar + (c,), bbar + (d,), r - 1)
                           for c in atoms_a if compatible(abar, bbar, c, d)):
                    ok = False
                    break
        memo[k] = ok
        return ok

    if qf_type(a, ()) != qf_type(b, ()):
        return False
    return good((), (), depth)


def bf_system_check(system, a: AtomicPresentation, b: AtomicPresentation,
                    max_depth: int | None = None) -> tuple[bool, dict | None]:
    """Check the four family conditions on an explicit set of tuple pairs.

    Pairs of maximal length are exempt from the two extension conditions;
    max_depth defaults to the longest pair present.
    """
    pairs = set(system)
    if not pairs:
        return False, {"clause": "ii", "detail": "empty family"}
    for abar, bbar in pairs:
        if len(abar) != len(bbar):
            return False, {"clause": "i", "pair": [list(abar), list(bbar)],
                           "detail": "length mismatch"}
        if qf_type(a, abar) != qf_type(b, bbar):
            return False, {"clause": "i", "pair": [list(abar), list(bbar)],
                           "detail": "trace mismatch"}
    if max_depth is None:
        max_depth = max(len(abar) for abar, _ in pairs)
    atoms_a = a.atoms()
    atoms_b = b.atoms()
    for abar, bbar in pairs:
        if len(abar) >= max_depth:
            continue
        for c in atoms_a:
            if not any((abar + (c,), bbar + (d,)) in pairs for d in atoms_b):
                return False, {"clause": "iii",
                               "pair": [list(abar), list(bbar)],
                               "atom": list(c)}
        for d in atoms_b:
            if not any((abar + (c,), bbar + (d,)) in pairs for c in atoms_a):
                return False, {"clause": "iv",
                               "pair": [list(abar), list(bbar)],
                               "atom": list(d)}
    return True, None


def _mirror_reply(pres_from, pres_to, bar_from: tuple, bar_to: tuple,
                  atom: Atom) -> Atom | None:
    if atom in bar_from:
        return bar_to[bar_from.index(atom)]
    cls = (atom[0], pres_from.atom_is_unit(atom))
    for d in pres_to.atoms():
        if d in bar_to:
            continue
        if (d[0], pres_to.atom_is_unit(d)) == cls:
            return d
    return None


def certificate_system_prefix(a: AtomicPresentation, b: AtomicPresentation,
                              depth: int) -> set:
    """The family the answering strategy traces out to the given depth:
    every challenger line, answered by the mirror rule."""
    pairs = {((), ())}
    frontier = [((), ())]
    for _ in range(depth):
        nxt = []
        for abar, bbar in frontier:
            for c in a.atoms():
                d = _mirror_reply(a, b, abar, bbar, c)
                if d is None:
                    raise PreconditionError(
                        "mirror reply unavailable; the strategy does not "
                        "win at this depth")
                pair = (abar + (c,), bbar + (d,))
                if pair not in pairs:
                    pairs.add(pair)
                    nxt.append(pair)
            for d in b.atoms():
                c = _mirror_reply(b, a, bbar, abar, d)
                if c is None:
                    raise PreconditionError(
                        "mirror reply unavailable; the strategy does not "
                        "win at this depth")
                pair = (abar + (c,), bbar + (d,))
                if pair not in pairs:
                    pairs.add(pair)
                    nxt.append(pair)
        frontier = nxt
    return pairs


def ef_system_equivalence_test(a: AtomicPresentation, b: AtomicPresentation,
                               rounds: int) -> dict:
    """Compare the game solver's winner against the family oracle."""
    game = ef_decide(a, b, rounds)
    family = system_exists(a, b, rounds)
    system_winner = EXISTS if family else FORALL
    return {"rounds": rounds, "ef_winner": game.winner,
            "system_winner": system_winner,
            "agree": game.winner == system_winner}


def _supply_as_count(size) -> float:
    return float("inf") if size is UNBOUNDED else float(size)


def fresh_atom_strategy_verify(a: AtomicPresentation, b: AtomicPresentation,
                               rounds: int) -> dict:
    """Symbolic verdict for the component game, cross-checked by the solver
    on a finite reification.

    A component survives r rounds when the two supplies are equal, or both
    are at least two and at least r (fresh atoms on demand).  The challenger
    beats an unequal component within one round when a supply is one (the
    lone atom is its unit), else within min+1 rounds (exhaust the smaller
    side).
    """
    if len(a.components) != len(b.components):
        raise PreconditionError("component index sets differ")
    failing = []
    for u, (sa, sb) in enumerate(zip(a.components, b.components)):
        if (sa is UNBOUNDED and sb is UNBOUNDED) or sa == sb:
            continue
        ca, cb = _supply_as_count(sa), _supply_as_count(sb)
        low = min(ca, cb)
        if low >= 2 and low >= rounds:
            continue
        needed = 1 if low <= 1 else int(low) + 1
        failing.append({"component": u, "supplies": [repr(sa), repr(sb)],
                        "rounds_needed": needed})
    if not failing:
        winner, validate_at = EXISTS, rounds
    else:
        winner = FORALL
        validate_at = min(f["rounds_needed"] for f in failing)
    game = ef_decide(a.reify(validate_at), b.reify(validate_at), validate_at)
    return {"winner": winner, "rounds": rounds,
            "validated_rounds": validate_at,
            "failing_components": failing,
            "ef_agrees": game.winner == winner}
