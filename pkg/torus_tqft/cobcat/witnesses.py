"""
Defining relations of the torus categories as pairs of expressions that must be equal.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List

from ..sl2z.matrix import D_A, D_B, MatSL2, j_flip
from .expr import BETA, EPS, ETA, GAMMA, ArrowExpr, Compose, Cyl, Id, Tau, Tensor, uses_unit


@dataclass(frozen=True)
class RelationWitness:
    name: str
    lhs: ArrowExpr
    rhs: ArrowExpr

    @property
    def uses_unit(self) -> bool:
        return uses_unit(self.lhs) or uses_unit(self.rhs)


def relation_witnesses(a: MatSL2 = D_A) -> List[RelationWitness]:
    """Every named identity, instantiated at the matrix ``a`` where one is needed."""
    one = Id(1)
    swap = Tau(1, 1)
    ca, cj = Cyl(a), Cyl(j_flip(a))
    return [
        RelationWitness("snake", Compose(Tensor(BETA, one), Tensor(one, GAMMA)), one),
        RelationWitness("snake-mirror", Compose(Tensor(one, BETA), Tensor(GAMMA, one)), one),
        RelationWitness("beta-tau", Compose(BETA, swap), BETA),
        RelationWitness("tau-gamma", Compose(swap, GAMMA), GAMMA),
        RelationWitness(
            "beta-jump", Compose(BETA, Tensor(ca, one)), Compose(BETA, Tensor(one, cj))
        ),
        RelationWitness(
            "gamma-jump", Compose(Tensor(ca, one), GAMMA), Compose(Tensor(one, cj), GAMMA)
        ),
        RelationWitness(
            "beta-gamma-jump",
            Compose(BETA, Compose(Tensor(ca, one), GAMMA)),
            Compose(BETA, Compose(Tensor(one, ca), GAMMA)),
        ),
        RelationWitness(
            "cylinders",
            Compose(Cyl(D_A), Cyl(a)),
            Cyl(D_A @ a),
        ),
        RelationWitness("da-eta", Compose(Cyl(D_A), ETA), ETA),
        RelationWitness("eps-db", Compose(EPS, Cyl(D_B)), EPS),
        RelationWitness("unit-counit", EPS, Compose(BETA, Tensor(one, ETA))),
    ]
