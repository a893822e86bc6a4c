"""Atomic structures the atom games are played on.

A presentation is a product of components, each holding a supply of atoms
under its own designated unit constant.  A supply is a nonnegative count or
the UNBOUNDED marker (fresh atoms never run out).  The trace the games
compare: equalities among chosen atoms, which component each atom sits in,
and whether the atom coincides with its component's unit (exactly the
one-atom components).
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import PreconditionError


class _Unbounded:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "UNBOUNDED"


UNBOUNDED = _Unbounded()

Supply = "int | _Unbounded"


@dataclass(frozen=True)
class AtomicPresentation:
    components: tuple

    def __post_init__(self) -> None:
        if not self.components:
            raise PreconditionError("need at least one component")
        for size in self.components:
            if size is UNBOUNDED:
                continue
            if not isinstance(size, int) or size < 0:
                raise PreconditionError(f"bad component supply {size!r}")

    @property
    def is_finite(self) -> bool:
        return all(size is not UNBOUNDED for size in self.components)

    def atom_count(self) -> int:
        if not self.is_finite:
            raise PreconditionError("presentation has an unbounded component")
        return sum(self.components)

    def atoms(self) -> list[tuple[int, int]]:
        """Concrete atoms as (component, index-within-component) pairs."""
        if not self.is_finite:
            raise PreconditionError("presentation has an unbounded component")
        return [(u, i) for u, size in enumerate(self.components)
                for i in range(size)]

    def atom_is_unit(self, atom: tuple[int, int]) -> bool:
        return self.components[atom[0]] == 1

    def supply(self, u: int):
        return self.components[u]

    def reify(self, rounds: int) -> AtomicPresentation:
        """Replace unbounded supplies by a finite stand-in large enough that
        a rounds-bounded game cannot tell the difference.

        Size max(rounds, 2): at least `rounds` fresh atoms, and never a
        one-atom component (an unbounded component's atoms are not units).
        """
        size = max(rounds, 2)
        return AtomicPresentation(tuple(
            size if s is UNBOUNDED else s for s in self.components))


def boolean_algebra(atom_count: int) -> AtomicPresentation:
    """Single-component structure; with one atom, that atom is the unit."""
    return AtomicPresentation((atom_count,))


def product_model(supplies) -> AtomicPresentation:
    """Component product with a designated unit per component; supplies are
    atom counts or UNBOUNDED."""
    return AtomicPresentation(tuple(supplies))
