"""Complex algebras of finite atom structures, and operator terms over them.

Elements are atom sets; every operator is the relational image of its
atom-level data, so all operators come out normal and completely additive by
construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Mapping

from .atoms import AtomSet, FiniteAtomStructure
from .errors import ConfigurationError, UnboundVariableError
from .signature import Signature


class ComplexAlgebra:
    def __init__(self, structure: FiniteAtomStructure, signature: Signature):
        if structure.dimension != signature.dimension:
            raise ConfigurationError(
                f"structure dimension {structure.dimension} != "
                f"signature dimension {signature.dimension}")
        if signature.cylindrifications and structure.cyl is None:
            raise ConfigurationError("signature enables c_i but structure has no cyl data")
        if signature.diagonals and structure.diag is None:
            raise ConfigurationError("signature enables d_ij but structure has no diag data")
        if signature.transpositions and structure.transp is None:
            raise ConfigurationError("signature enables s_[i,j] but structure has no transposition data")
        if signature.replacements and structure.repl is None:
            raise ConfigurationError("signature enables s_i^j but structure has no replacement data")
        self.structure = structure
        self.signature = signature
        self.atom_count = structure.atom_count

    # -- Boolean part ---------------------------------------------------

    def zero(self) -> AtomSet:
        return AtomSet.empty(self.atom_count)

    def one(self) -> AtomSet:
        return AtomSet.full(self.atom_count)

    def atom(self, index: int) -> AtomSet:
        return AtomSet.singleton(index, self.atom_count)

    def atoms(self) -> list[AtomSet]:
        return [self.atom(i) for i in range(self.atom_count)]

    def elements(self) -> Iterator[AtomSet]:
        if self.atom_count > 20:
            raise ConfigurationError(
                f"refusing to enumerate 2^{self.atom_count} elements")
        for mask in range(1 << self.atom_count):
            yield AtomSet(mask, self.atom_count)

    def join(self, x: AtomSet, y: AtomSet) -> AtomSet:
        return x | y

    def meet(self, x: AtomSet, y: AtomSet) -> AtomSet:
        return x & y

    def complement(self, x: AtomSet) -> AtomSet:
        return ~x

    def leq(self, x: AtomSet, y: AtomSet) -> bool:
        return x <= y

    # -- operators --------------------------------------------------------

    def _index_check(self, *indices: int) -> None:
        for i in indices:
            if not 0 <= i < self.signature.dimension:
                raise ConfigurationError(f"index {i} out of dimension range")

    def cyl(self, i: int, x: AtomSet) -> AtomSet:
        """c_i(x): union of the ~_i classes meeting x (relational image)."""
        if not self.signature.cylindrifications:
            raise ConfigurationError("cylindrifications disabled in this signature")
        self._index_check(i)
        rel = self.structure.cyl[i]
        mask = 0
        rem = x.mask
        a = 0
        while rem:
            if rem & 1:
                mask |= rel[a]
            rem >>= 1
            a += 1
        return AtomSet(mask, self.atom_count)

    def diag(self, i: int, j: int) -> AtomSet:
        if not self.signature.diagonals:
            raise ConfigurationError("diagonals disabled in this signature")
        self._index_check(i, j)
        return AtomSet(self.structure.diag[i][j], self.atom_count)

    def transpose(self, i: int, j: int, x: AtomSet) -> AtomSet:
        """s_[i,j](x): image of x under the transposition bijection."""
        if not self.signature.transpositions:
            raise ConfigurationError("transpositions disabled in this signature")
        self._index_check(i, j)
        perm = self.structure.transp[i][j]
        mask = 0
        rem = x.mask
        a = 0
        while rem:
            if rem & 1:
                mask |= 1 << perm[a]
            rem >>= 1
            a += 1
        return AtomSet(mask, self.atom_count)

    def replace(self, i: int, j: int, x: AtomSet) -> AtomSet:
        """s_i^j(x): relational image of x under the replacement relation."""
        if not self.signature.replacements:
            raise ConfigurationError("replacements disabled in this signature")
        self._index_check(i, j)
        rel = self.structure.repl[i][j]
        mask = 0
        rem = x.mask
        a = 0
        while rem:
            if rem & 1:
                mask |= rel[a]
            rem >>= 1
            a += 1
        return AtomSet(mask, self.atom_count)

    def unary_op(self, op: tuple, x: AtomSet) -> AtomSet:
        """Apply an operator given as ("c", i), ("t", i, j) or ("r", i, j)."""
        kind = op[0]
        if kind == "c":
            return self.cyl(op[1], x)
        if kind == "t":
            return self.transpose(op[1], op[2], x)
        if kind == "r":
            return self.replace(op[1], op[2], x)
        raise ConfigurationError(f"unknown operator {op!r}")

    def enabled_unary_ops(self) -> list[tuple]:
        n = self.signature.dimension
        ops: list[tuple] = []
        if self.signature.cylindrifications:
            ops += [("c", i) for i in range(n)]
        if self.signature.transpositions:
            ops += [("t", i, j) for i in range(n) for j in range(n) if i < j]
        if self.signature.replacements:
            ops += [("r", i, j) for i in range(n) for j in range(n) if i != j]
        return ops


def complex_algebra(structure: FiniteAtomStructure,
                    signature: Signature) -> ComplexAlgebra:
    return ComplexAlgebra(structure, signature)


# -- terms ----------------------------------------------------------------


class Term:
    pass


@dataclass(frozen=True)
class Var(Term):
    name: str


@dataclass(frozen=True)
class Bot(Term):
    pass


@dataclass(frozen=True)
class Top(Term):
    pass


@dataclass(frozen=True)
class DiagTerm(Term):
    i: int
    j: int


@dataclass(frozen=True)
class Not(Term):
    arg: Term


@dataclass(frozen=True)
class And(Term):
    left: Term
    right: Term


@dataclass(frozen=True)
class Or(Term):
    left: Term
    right: Term


@dataclass(frozen=True)
class Cyl(Term):
    i: int
    arg: Term


@dataclass(frozen=True)
class Transp(Term):
    i: int
    j: int
    arg: Term


@dataclass(frozen=True)
class Repl(Term):
    i: int
    j: int
    arg: Term


def eval_term(algebra: ComplexAlgebra, term: Term,
              env: Mapping[str, AtomSet] | None = None) -> AtomSet:
    env = env or {}
    if isinstance(term, Var):
        if term.name not in env:
            raise UnboundVariableError(f"variable {term.name!r} is not bound")
        val = env[term.name]
        if val.size != algebra.atom_count:
            raise ConfigurationError(
                f"binding for {term.name!r} lives in a different algebra")
        return val
    if isinstance(term, Bot):
        return algebra.zero()
    if isinstance(term, Top):
        return algebra.one()
    if isinstance(term, DiagTerm):
        return algebra.diag(term.i, term.j)
    if isinstance(term, Not):
        return ~eval_term(algebra, term.arg, env)
    if isinstance(term, And):
        return eval_term(algebra, term.left, env) & eval_term(algebra, term.right, env)
    if isinstance(term, Or):
        return eval_term(algebra, term.left, env) | eval_term(algebra, term.right, env)
    if isinstance(term, Cyl):
        return algebra.cyl(term.i, eval_term(algebra, term.arg, env))
    if isinstance(term, Transp):
        return algebra.transpose(term.i, term.j, eval_term(algebra, term.arg, env))
    if isinstance(term, Repl):
        return algebra.replace(term.i, term.j, eval_term(algebra, term.arg, env))
    raise ConfigurationError(f"unknown term node {term!r}")


class ParseError(ValueError):
    pass


class _Parser:
    """Recursive descent for the compact operator syntax.

    grammar:  or    := and ('|' and)*
              and   := unary ('&' unary)*
              unary := '~' unary | prim
              prim  := '0' | '1' | 'd' i j | OP '(' or ')' | name | '(' or ')'
              OP    := 'c' i | 't' i j | 'r' i j

    Indices are single digits, which covers every desk-scale dimension here.
    Bare names are variables; 'd01' is a diagonal, 'c0(...)', 't01(...)',
    'r01(...)' are operators.
    """

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, msg: str) -> ParseError:
        return ParseError(f"{msg} at position {self.pos} in {self.text!r}")

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, ch: str) -> None:
        if self.peek() != ch:
            raise self.error(f"expected {ch!r}")
        self.pos += 1

    def parse(self) -> Term:
        t = self.parse_or()
        self.skip_ws()
        if self.pos != len(self.text):
            raise self.error("trailing input")
        return t

    def parse_or(self) -> Term:
        t = self.parse_and()
        while self.peek() == "|":
            self.take("|")
            t = Or(t, self.parse_and())
        return t

    def parse_and(self) -> Term:
        t = self.parse_unary()
        while self.peek() == "&":
            self.take("&")
            t = And(t, self.parse_unary())
        return t

    def parse_unary(self) -> Term:
        if self.peek() == "~":
            self.take("~")
            return Not(self.parse_unary())
        return self.parse_prim()

    def _word(self) -> str:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and (self.text[self.pos].isalnum()
                                             or self.text[self.pos] == "_"):
            self.pos += 1
        if self.pos == start:
            raise self.error("expected a name")
        return self.text[start:self.pos]

    def parse_prim(self) -> Term:
        ch = self.peek()
        if ch == "(":
            self.take("(")
            t = self.parse_or()
            self.take(")")
            return t
        word = self._word()
        if word == "0":
            return Bot()
        if word == "1":
            return Top()
        if len(word) == 3 and word[0] == "d" and word[1:].isdigit():
            return DiagTerm(int(word[1]), int(word[2]))
        if len(word) == 2 and word[0] == "c" and word[1].isdigit():
            self.take("(")
            t = self.parse_or()
            self.take(")")
            return Cyl(int(word[1]), t)
        if len(word) == 3 and word[0] in "tr" and word[1:].isdigit():
            self.take("(")
            t = self.parse_or()
            self.take(")")
            i, j = int(word[1]), int(word[2])
            return Transp(i, j, t) if word[0] == "t" else Repl(i, j, t)
        return Var(word)


def parse_term(text: str) -> Term:
    return _Parser(text).parse()
