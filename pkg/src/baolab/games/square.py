"""Bounded clique-witness game over a relation atom structure.

State: a complete atom-labelled network (self-loops carry the identity atom,
every triangle consistent).  Each round the challenger names two nodes x, y
and atoms a, b composing over the label of (x, y); the builder must point at
a node z with label(x, z) = a and label(z, y) = b, either an existing one or
a fresh one (while below the node bound) whose remaining edge labels keep
all triangles consistent.  The builder wins by surviving the round budget.

The structure argument is anything exposing atom_count, identity, and
consistent(a, b, c).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from ..errors import BudgetExceededError, PreconditionError

EXISTS = "exists"
FORALL = "forall"


@dataclass(frozen=True)
class Network:
    labels: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.labels)

    def label(self, x: int, y: int) -> int:
        return self.labels[x][y]

    def with_node(self, edges: tuple[int, ...], identity: int) -> Network:
        old = self.size
        rows = [row + (edges[i],) for i, row in enumerate(self.labels)]
        rows.append(edges + (identity,))
        return Network(tuple(rows))

    def to_json(self) -> list:
        return [list(row) for row in self.labels]


def initial_network(structure) -> Network:
    return Network(((structure.identity,),))


def _triangles_ok(structure, net: Network) -> bool:
    for x in range(net.size):
        for y in range(x + 1, net.size):
            for z in range(y + 1, net.size):
                if not structure.consistent(net.label(x, y), net.label(y, z),
                                            net.label(x, z)):
                    return False
    return True


def legal_demands(structure, net: Network) -> list[tuple[int, int, int, int]]:
    out = []
    for x in range(net.size):
        for y in range(net.size):
            c = net.label(x, y)
            for a in range(structure.atom_count):
                for b in range(structure.atom_count):
                    if structure.consistent(a, b, c):
                        out.append((x, y, a, b))
    return out


def _reuse_possible(net: Network, x: int, y: int, a: int, b: int) -> bool:
    return any(net.label(x, z) == a and net.label(z, y) == b
               for z in range(net.size))


def extension_networks(structure, net: Network, x: int, y: int,
                       a: int, b: int) -> list[Network]:
    """Fresh-node answers: label the new node a toward x, b toward y, and
    search the remaining edges for labels keeping every new triangle
    consistent.  Deterministic lex order over the free labels."""
    fixed: dict[int, int] = {x: a}
    if y in fixed and fixed[y] != b:
        return []
    fixed[y] = b
    free = [u for u in range(net.size) if u not in fixed]
    out = []

    def assign(pos: int, chosen: dict[int, int]) -> None:
        if pos == len(free):
            edges = tuple(chosen[u] for u in range(net.size))
            out.append(net.with_node(edges, structure.identity))
            return
        u = free[pos]
        for lab in range(structure.atom_count):
            ok = True
            for v, lv in chosen.items():
                if v == u:
                    continue
                if not structure.consistent(lab, net.label(u, v), lv):
                    ok = False
                    break
            if ok:
                chosen[u] = lab
                assign(pos + 1, chosen)
                del chosen[u]

    base = dict(fixed)
    ok = all(structure.consistent(base[u], net.label(u, v), base[v])
             for u in base for v in base if u < v)
    if ok:
        assign(0, base)
    return out


def canonical_form(net: Network) -> tuple:
    best = None
    for perm in itertools.permutations(range(net.size)):
        mat = tuple(tuple(net.labels[perm[i]][perm[j]]
                          for j in range(net.size))
                    for i in range(net.size))
        if best is None or mat < best:
            best = mat
    return best


@dataclass(frozen=True)
class SquareResult:
    winner: str
    rounds: int
    clique_bound: int
    certificate: dict

    def to_json(self) -> dict:
        return {"winner": self.winner, "rounds": self.rounds,
                "clique_bound": self.clique_bound,
                "certificate": self.certificate}


def square_game(structure, clique_bound: int, rounds: int,
                budget: int = 2_000_000) -> SquareResult:
    """Exhaustive solve with memoization on the relabelling-invariant form
    of the network."""
    if clique_bound < 3:
        raise PreconditionError("node bound below three is degenerate")
    if rounds < 0:
        raise PreconditionError("rounds must be nonnegative")
    memo: dict[tuple, str] = {}
    visited = 0
    line: list[dict] = []

    def value(net: Network, r: int, record: bool) -> str:
        nonlocal visited
        if r == 0:
            return EXISTS
        key = (canonical_form(net), r)
        if not record and key in memo:
            return memo[key]
        visited += 1
        if visited > budget:
            raise BudgetExceededError("game search budget exhausted",
                                      spent=visited)
        winner = EXISTS
        for (x, y, a, b) in legal_demands(structure, net):
            answers = []
            if _reuse_possible(net, x, y, a, b):
                answers.append(net)
            if net.size < clique_bound:
                answers.extend(extension_networks(structure, net, x, y, a, b))
            survive = None
            for answer in answers:
                if value(answer, r - 1, False) == EXISTS:
                    survive = answer
                    break
            if survive is None:
                winner = FORALL
                if record:
                    line.append({"position": net.to_json(),
                                 "demand": [x, y, a, b],
                                 "responses": len(answers)})
                break
        memo[key] = winner
        return winner

    start = initial_network(structure)
    winner = value(start, rounds, True)
    if winner == FORALL:
        cert = {"strategy": "challenger", "line": line}
    else:
        cert = {"strategy": "builder",
                "rule": "reuse the least matching node, else extend with "
                        "the lex-least consistent labelling"}
    return SquareResult(winner=winner, rounds=rounds,
                        clique_bound=clique_bound, certificate=cert)


def brute_force_square(structure, clique_bound: int, rounds: int) -> str:
    """Independent tree search: no memo, no canonical forms, every demand
    and answer expanded."""
    def value(net: Network, r: int) -> str:
        if r == 0:
            return EXISTS
        same_net_value = None
        for (x, y, a, b) in legal_demands(structure, net):
            answers = []
            if _reuse_possible(net, x, y, a, b):
                answers.append(None)
            if net.size < clique_bound:
                answers.extend(extension_networks(structure, net, x, y, a, b))
            survived = False
            for answer in answers:
                if answer is None:
                    if same_net_value is None:
                        same_net_value = value(net, r - 1)
                    if same_net_value == EXISTS:
                        survived = True
                        break
                elif value(answer, r - 1) == EXISTS:
                    survived = True
                    break
            if not survived:
                return FORALL
        return EXISTS

    return value(initial_network(structure), rounds)


class RelabelledProtocol:
    """View of a structure with atoms renamed by a permutation."""

    def __init__(self, structure, perm: tuple[int, ...]):
        if sorted(perm) != list(range(structure.atom_count)):
            raise PreconditionError("not a permutation of the atoms")
        self._inner = structure
        self._perm = perm
        self._inv = tuple(perm.index(i) for i in range(len(perm)))
        self.atom_count = structure.atom_count
        self.identity = perm[structure.identity]

    def consistent(self, a: int, b: int, c: int) -> bool:
        return self._inner.consistent(self._inv[a], self._inv[b],
                                      self._inv[c])
