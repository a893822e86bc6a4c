"""Operator signatures for Boolean algebras with operators.

A signature fixes the dimension and says which operator families are part of
the algebra: cylindrifications c_i, diagonal constants d_ij, transposition
substitutions s_[i,j] and replacement substitutions s_i^j.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Signature:
    dimension: int
    cylindrifications: bool = False
    diagonals: bool = False
    transpositions: bool = False
    replacements: bool = False

    def __post_init__(self) -> None:
        if self.dimension < 2:
            raise ValueError("dimension must be at least 2")
        if not (self.cylindrifications or self.diagonals
                or self.transpositions or self.replacements):
            raise ValueError("at least one operator family must be enabled")

    # Common signatures, by their usual class abbreviations.

    @staticmethod
    def pea(n: int) -> "Signature":
        """Polyadic equality algebras: everything enabled."""
        return Signature(n, True, True, True, True)

    @staticmethod
    def ca(n: int) -> "Signature":
        """Cylindric algebras: cylindrifications and diagonals."""
        return Signature(n, True, True, False, False)

    @staticmethod
    def sa(n: int) -> "Signature":
        """Substitution algebras: transpositions and replacements only."""
        return Signature(n, False, False, True, True)

    @staticmethod
    def qa(n: int) -> "Signature":
        """Quasi-polyadic (diagonal-free): cylindrifications and both
        substitution families, no diagonals."""
        return Signature(n, True, False, True, True)

    @staticmethod
    def replacement_only(n: int) -> "Signature":
        return Signature(n, False, False, False, True)
