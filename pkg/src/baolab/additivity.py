"""Complete additivity checks for unary operators.

Finite complex algebras are handled exhaustively (finite joins are complete,
so the decomposition f(x) = sum of f over the atoms below x settles it).  The
symbolic partition algebra answers through its sup certificate, and is where
the interesting failure lives.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .algebra import ComplexAlgebra
from .errors import UnsupportedQueryError


@dataclass(frozen=True)
class Confirmed:
    op: str
    detail: str = ""


@dataclass(frozen=True)
class AdditivityWitness:
    """A family of elements whose sup is not carried to the sup of images.

    ``separating_y`` is an element strictly below op(sup) that still bounds
    every image, which is exactly how the failure is certified.
    """

    op: str
    family: str
    sup: Any
    op_of_sup: Any
    sup_of_images: Any
    separating_y: Any


def _parse_op(op_name: str) -> tuple:
    """Accepts 'c0', 'c_0', 't01', 's_[0,1]', 'r01', 's_0^1' and friends."""
    s = op_name.replace(" ", "")
    digits = [int(ch) for ch in s if ch.isdigit()]
    if s.startswith("c") and len(digits) == 1:
        return ("c", digits[0])
    if (s.startswith("t") or s.startswith("s_[") or s.startswith("s[")) \
            and len(digits) == 2:
        return ("t", digits[0], digits[1])
    if (s.startswith("r") or "^" in s) and len(digits) == 2:
        return ("r", digits[0], digits[1])
    raise UnsupportedQueryError(f"cannot parse operator name {op_name!r}")


def check_complete_additivity(op_name: str, alg) -> Confirmed | AdditivityWitness:
    op = _parse_op(op_name)

    if isinstance(alg, ComplexAlgebra):
        # exhaustive: every element is the finite join of its atoms
        images = [alg.unary_op(op, a) for a in alg.atoms()]
        for x in alg.elements():
            expect = alg.zero()
            for a in x.indices():
                expect = expect | images[a]
            got = alg.unary_op(op, x)
            if got != expect:
                # cannot happen for relational-image operators; reported for
                # completeness if a hand-built structure is inconsistent
                return AdditivityWitness(
                    op=op_name,
                    family=f"atoms below {x.indices()}",
                    sup=x,
                    op_of_sup=got,
                    sup_of_images=expect,
                    separating_y=expect,
                )
        return Confirmed(op_name, detail="finite algebra, exhaustive decomposition")

    # symbolic algebras must expose the sup-certificate interface
    needed = ("sup_of_atoms", "atom_image_family", "apply", "zero", "one")
    if not all(hasattr(alg, name) for name in needed):
        raise UnsupportedQueryError(
            "algebra offers no sup certificate for its atom family")

    sup, _certificate = alg.sup_of_atoms()
    family_kind = alg.atom_image_family(op)
    if family_kind == "zero":
        sup_images = alg.zero()
    elif family_kind == "identity":
        sup_images = sup
    else:  # pragma: no cover
        raise UnsupportedQueryError(f"unknown image family {family_kind!r}")

    op_of_sup = alg.apply(op, sup)
    if op_of_sup == sup_images:
        return Confirmed(op_name, detail="image sup equals op of sup")
    # any y strictly below op(sup) that dominates every image certifies the
    # failure; with all images zero the zero element does
    separating = sup_images
    return AdditivityWitness(
        op=op_name,
        family=alg.atom_family_description(),
        sup=sup,
        op_of_sup=op_of_sup,
        sup_of_images=sup_images,
        separating_y=separating,
    )
