"""
The seven connected factor shapes C0..C6 and their canonical representatives.

    C0 = eps . rho_A . eta          0 -> 0
    C1 = beta . (rho_A (x) 1)       2 -> 0
    C2 = rho_A                      1 -> 1
    C3 = (rho_A (x) 1) . gamma      0 -> 2
    C4 = beta . (rho_A (x) 1) . gamma   0 -> 0
    C5 = rho_A . eta                0 -> 1
    C6 = eps . rho_A                1 -> 0
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Hashable, Tuple

from ..sl2z.conjugacy import bundle_key, conjugacy_representative
from ..sl2z.lens import lens_key
from ..sl2z.matrix import MatSL2, j_flip
from .expr import BETA, EPS, ETA, GAMMA, ArrowExpr, Compose, Cyl, Id, Tensor

ARITY: Dict[str, Tuple[int, int]] = {
    "C0": (0, 0),
    "C1": (2, 0),
    "C2": (1, 1),
    "C3": (0, 2),
    "C4": (0, 0),
    "C5": (0, 1),
    "C6": (1, 0),
}

CLOSED_KINDS = frozenset({"C0", "C4"})


@dataclass(frozen=True)
class Factor:
    kind: str
    param: MatSL2

    def __post_init__(self) -> None:
        if self.kind not in ARITY:
            raise ValueError(f"Unknown factor kind: {self.kind}")

    @property
    def source(self) -> int:
        return ARITY[self.kind][0]

    @property
    def target(self) -> int:
        return ARITY[self.kind][1]

    @property
    def closed(self) -> bool:
        return self.kind in CLOSED_KINDS

    def to_expr(self) -> ArrowExpr:
        a = Cyl(self.param)
        if self.kind == "C0":
            return Compose(EPS, Compose(a, ETA))
        if self.kind == "C1":
            return Compose(BETA, Tensor(a, Id(1)))
        if self.kind == "C2":
            return a
        if self.kind == "C3":
            return Compose(Tensor(a, Id(1)), GAMMA)
        if self.kind == "C4":
            return Compose(BETA, Compose(Tensor(a, Id(1)), GAMMA))
        if self.kind == "C5":
            return Compose(a, ETA)
        return Compose(EPS, a)

    def __str__(self) -> str:
        return f"{self.kind}({self.param})"


def _right_da_reduced(a: MatSL2) -> MatSL2:
    """Representative of {A D_a^m}: second column reduced against the first."""
    if a.p != 0:
        m = (a.r % abs(a.p) - a.r) // a.p
    else:
        m = -a.s * a.q
    return MatSL2(a.p, a.r + m * a.p, a.q, a.s + m * a.q)


def _left_db_reduced(a: MatSL2) -> MatSL2:
    """Representative of {D_b^m A}: second row reduced against the first."""
    if a.p != 0:
        m = (a.q - a.q % abs(a.p)) // a.p
    else:
        m = a.s * a.r
    return MatSL2(a.p, a.r, a.q - m * a.p, a.s - m * a.r)


def _lens_representative(key: Tuple[int, int]) -> MatSL2:
    p, q = key
    if p == 0:
        return MatSL2(0, -q, q, 0)
    if q == 0:
        return MatSL2(p, 0, 0, p)
    if q == 1:
        return MatSL2(p, -1, 1, 0)
    s = pow(p, -1, q)
    return MatSL2(p, (p * s - 1) // q, q, s)


def factor_key(x: Factor) -> Hashable:
    """Complete invariant of the factor's equality class (legs of C1/C3 aside)."""
    a = x.param
    if x.kind == "C2":
        return (x.kind, a.as_tuple())
    if x.kind in ("C1", "C3"):
        return (x.kind, min(a.as_tuple(), j_flip(a).as_tuple()))
    if x.kind == "C4":
        return (x.kind, bundle_key(a))
    if x.kind == "C5":
        return (x.kind, _right_da_reduced(a).as_tuple())
    if x.kind == "C6":
        return (x.kind, _left_db_reduced(a).as_tuple())
    return (x.kind, lens_key(a))


def canonical_factor(x: Factor) -> Factor:
    """Canonical representative of the factor's equality class.

    For C1 and C3 the representative may be the J-flip of the parameter; a placed factor
    then swaps its two legs (see ``normal_form.canonical_placement``).
    """
    a = x.param
    if x.kind == "C2":
        return x
    if x.kind in ("C1", "C3"):
        flipped = j_flip(a)
        return Factor(x.kind, min(a, flipped, key=MatSL2.as_tuple))
    if x.kind == "C4":
        return Factor(x.kind, conjugacy_representative(bundle_key(a)))
    if x.kind == "C5":
        return Factor(x.kind, _right_da_reduced(a))
    if x.kind == "C6":
        return Factor(x.kind, _left_db_reduced(a))
    return Factor(x.kind, _lens_representative(lens_key(a)))
