"""The dimension-2 atomicity schema, in both published readings.

For each pair i != j the schema says: every nonzero y bounds (or meets,
depending on the reading) the replacement image of some atom whose image is
nonzero.  The literal reading demands s_i^j(x) <= y; the corrected reading
demands s_i^j(x) & y != 0.  Both are evaluated and reported; neither is
silently substituted for the other.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import ComplexAlgebra
from .errors import PreconditionError

LITERAL = "literal"
CORRECTED = "corrected"


@dataclass(frozen=True)
class SchemaVerdict:
    i: int
    j: int
    variant: str
    holds: bool
    counterexample: tuple[int, ...] | None  # atom indices of the failing y


def check_crpa2_schema(alg: ComplexAlgebra, variant: str) -> list[SchemaVerdict]:
    if alg.signature.dimension != 2:
        raise PreconditionError("schema is specific to dimension 2")
    if not alg.signature.replacements:
        raise PreconditionError("schema needs replacement operators")
    if variant not in (LITERAL, CORRECTED):
        raise ValueError(f"unknown variant {variant!r}")

    verdicts = []
    atoms = alg.atoms()
    for (i, j) in ((0, 1), (1, 0)):
        images = [alg.replace(i, j, a) for a in atoms]
        holds = True
        cex = None
        for y in alg.elements():
            if not y:
                continue
            if variant == LITERAL:
                ok = any(img and img <= y for img in images)
            else:
                ok = any(img and (img & y) for img in images)
            if not ok:
                holds = False
                cex = y.indices()
                break
        verdicts.append(SchemaVerdict(i, j, variant, holds, cex))
    return verdicts
