"""
Torus-bundle and lens-space invariants, with the closed-form Funar traces as an oracle.
"""

from __future__ import annotations

from typing import Tuple

from ..cobcat.expr import BETA, EPS, ETA, GAMMA, Compose, Cyl, Id, Tensor
from ..exceptions import MissingEtaError, PreconditionError
from ..scalars import RATIONALS, FieldElement, sqrt2_power
from ..sl2z.catalog import check_funar_triple
from ..sl2z.matrix import MatSL2
from .datum import TqftDatum, seal
from .evaluation import evaluate, rho


def bundle_invariant(d: TqftDatum, a: MatSL2) -> FieldElement:
    """F(Bun_A) = tr rho(A)."""
    return rho(d, a).trace()


def bundle_contraction(d: TqftDatum, a: MatSL2) -> FieldElement:
    """F(Bun_A) as the full contraction beta . (Cyl_A (x) 1) . gamma."""
    arrow = Compose(BETA, Compose(Tensor(Cyl(a), Id(1)), GAMMA))
    return evaluate(d, arrow).as_scalar()


def lens_invariant(d: TqftDatum, a: MatSL2) -> FieldElement:
    """F(L(p,q)) = eps . rho(A) . eta."""
    d = seal(d)
    if d.eta is None:
        raise MissingEtaError(f"TQFT {d.name} has no eta")
    return (d.counit() @ rho(d, a) @ d.eta).as_scalar()


def lens_contraction(d: TqftDatum, a: MatSL2) -> FieldElement:
    return evaluate(d, Compose(EPS, Compose(Cyl(a), ETA))).as_scalar()


def funar_trace_closed_form(
    which: str, k: int, q: int, v: int
) -> Tuple[FieldElement, FieldElement]:
    """Printed closed forms of tr rho(G_{k,q,v}) and tr rho(H_{k,q,v}) for F1 or F3."""
    check_funar_triple(k, q, v)
    a = abs(k)
    if which == "F1":
        return _f1_trace(a * v, a * q * q), _f1_trace(a * q * q * v, a)
    if which == "F3":
        return _f3_trace(a * v, a * q * q), _f3_trace(a * q * q * v, a)
    raise PreconditionError(f"closed forms exist for F1 and F3 only, not {which}")


def f1_bracket(x: int, y: int) -> int:
    """Integer factor of the F1 trace of D_b^-x D_a^y; odd by construction."""
    return 1 + 2 * (2**x - 1) * (2**y - 1) + 2 ** (x + y)


def _f1_trace(x: int, y: int) -> FieldElement:
    return sqrt2_power(-(x + y)) * f1_bracket(x, y)


def _f3_trace(x: int, y: int) -> FieldElement:
    u, w = 2**x - 1, 2**y - 1
    bracket = (
        1
        + 4 * w * u
        + 2 ** (x + y)
        + 4 * w * w * u * u
        + 2 ** (2 + x + y) * w * u
        + 4 ** (x + y)
    )
    return RATIONALS.element(bracket) / RATIONALS.element(2 ** (x + y))
