"""Finite and cofinite subsets of a countable universe.

The family of finite-or-cofinite subsets is closed under union, intersection
and complement, which makes it a Boolean set algebra without ever storing an
infinite object: we only ever keep the finite side.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Iterator

FINITE = "finite"
COFINITE = "cofinite"


@dataclass(frozen=True)
class FinCofSet:
    """A subset of a countable universe that is finite or has finite complement.

    ``support`` always stores the finite side: the members when ``polarity``
    is ``finite``, the excluded elements when ``cofinite``.  Complementation
    therefore flips the polarity and keeps the support untouched.
    """

    support: frozenset = frozenset()
    polarity: str = FINITE

    def __post_init__(self) -> None:
        if self.polarity not in (FINITE, COFINITE):
            raise ValueError(f"unknown polarity {self.polarity!r}")
        if not isinstance(self.support, frozenset):
            object.__setattr__(self, "support", frozenset(self.support))

    # -- constructors -------------------------------------------------

    @staticmethod
    def finite(members: Iterable = ()) -> "FinCofSet":
        return FinCofSet(frozenset(members), FINITE)

    @staticmethod
    def cofinite(excluded: Iterable = ()) -> "FinCofSet":
        return FinCofSet(frozenset(excluded), COFINITE)

    @staticmethod
    def empty() -> "FinCofSet":
        return FinCofSet(frozenset(), FINITE)

    @staticmethod
    def universe() -> "FinCofSet":
        return FinCofSet(frozenset(), COFINITE)

    # -- predicates ---------------------------------------------------

    @property
    def is_finite(self) -> bool:
        return self.polarity == FINITE

    @property
    def is_cofinite(self) -> bool:
        return self.polarity == COFINITE

    @property
    def is_empty(self) -> bool:
        return self.is_finite and not self.support

    @property
    def is_universe(self) -> bool:
        return self.is_cofinite and not self.support

    def __contains__(self, x) -> bool:
        inside = x in self.support
        return inside if self.is_finite else not inside

    # -- Boolean operations -------------------------------------------

    def complement(self) -> "FinCofSet":
        return FinCofSet(self.support, COFINITE if self.is_finite else FINITE)

    def __invert__(self) -> "FinCofSet":
        return self.complement()

    def union(self, other: "FinCofSet") -> "FinCofSet":
        if self.is_finite and other.is_finite:
            return FinCofSet(self.support | other.support, FINITE)
        if self.is_finite:  # other cofinite
            return FinCofSet(other.support - self.support, COFINITE)
        if other.is_finite:
            return FinCofSet(self.support - other.support, COFINITE)
        return FinCofSet(self.support & other.support, COFINITE)

    def intersection(self, other: "FinCofSet") -> "FinCofSet":
        return (self.complement().union(other.complement())).complement()

    def difference(self, other: "FinCofSet") -> "FinCofSet":
        return self.intersection(other.complement())

    def __or__(self, other: "FinCofSet") -> "FinCofSet":
        return self.union(other)

    def __and__(self, other: "FinCofSet") -> "FinCofSet":
        return self.intersection(other)

    def __sub__(self, other: "FinCofSet") -> "FinCofSet":
        return self.difference(other)

    def issubset(self, other: "FinCofSet") -> bool:
        if self.is_finite and other.is_finite:
            return self.support <= other.support
        if self.is_finite:
            return not (self.support & other.support)
        if other.is_finite:
            return False  # a cofinite set is infinite, a finite set is not
        return other.support <= self.support

    def __le__(self, other: "FinCofSet") -> bool:
        return self.issubset(other)

    # -- selection ----------------------------------------------------

    def least(self, key: Callable | None = None,
              enumeration: Iterator | None = None):
        """Least member: by ``key`` over the support when finite, else the
        first element of ``enumeration`` outside the excluded set.

        ``enumeration`` must list the universe in the intended well-order.
        """
        if self.is_empty:
            raise ValueError("empty set has no least member")
        if self.is_finite:
            return min(self.support, key=key) if key else min(self.support)
        if enumeration is None:
            raise ValueError("cofinite set needs a universe enumeration")
        for x in enumeration:
            if x not in self.support:
                return x
        raise ValueError("enumeration exhausted")  # pragma: no cover

    # -- serialization ------------------------------------------------

    def to_json(self) -> dict:
        return {"polarity": self.polarity, "support": sorted(self.support)}

    @staticmethod
    def from_json(obj: dict) -> "FinCofSet":
        return FinCofSet(frozenset(obj["support"]), obj["polarity"])

    def __repr__(self) -> str:
        body = "{" + ", ".join(repr(x) for x in sorted(self.support)) + "}"
        if self.is_finite:
            return body
        return f"~{body}"
