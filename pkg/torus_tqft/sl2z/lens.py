"""
Lens spaces from gluing matrices: parameters and the lens-inseparability relation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

from .matrix import MatSL2


@dataclass(frozen=True)
class LensParams:
    p: int
    q: int

    def __str__(self) -> str:
        return f"L({self.p},{self.q})"


def lens_params(a: MatSL2) -> LensParams:
    """First column of the gluing matrix."""
    return LensParams(a.p, a.q)


def lens_inseparable(a: MatSL2, a2: MatSL2) -> bool:
    """p = p' and q = q' or q q' = 1, congruences mod |p| (plain equalities when p = 0)."""
    x, y = lens_params(a), lens_params(a2)
    if x.p != y.p:
        return False
    if x.p == 0:
        return x.q == y.q or x.q * y.q == 1
    n = abs(x.p)
    return (x.q - y.q) % n == 0 or (x.q * y.q - 1) % n == 0


def lens_key(a: MatSL2) -> Tuple[int, int]:
    """Canonical pair of the lens-inseparability class: (p, min(q, q^-1) mod |p|)."""
    p, q = a.p, a.q
    if p == 0:
        return (0, q)
    n = abs(p)
    if n == 1:
        return (p, 0)
    residue = q % n
    return (p, min(residue, pow(residue, -1, n)))
