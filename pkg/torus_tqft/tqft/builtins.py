"""
The three shipped TQFTs and a registry to look them up by name.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Dict, List

from ..exceptions import UnknownNameError
from ..scalars import CYCLOTOMIC3, RATIONALS, SQRT2, FieldMatrix
from .datum import TqftDatum, seal


def _f1() -> TqftDatum:
    # 1/sqrt2 = sqrt2/2; no eta since 1 is not an eigenvalue of rho_a
    f = SQRT2
    half_root = f.element(0, Fraction(1, 2))
    root = f.element(0, 1)
    third = Fraction(1, 3)
    return TqftDatum(
        name="F1",
        field=f,
        n=2,
        rho_a=FieldMatrix.from_rows(f, [[half_root, half_root], [0, root]]),
        rho_b=FieldMatrix.from_rows(f, [[root, 0], [-root, half_root]]),
        beta=FieldMatrix.row(f, [2, 1, 1, -1]),
        gamma=FieldMatrix.column(f, [third, third, third, -2 * third]),
    )


def _f2() -> TqftDatum:
    f = CYCLOTOMIC3
    xi = f.generator()
    half = Fraction(1, 2)
    return TqftDatum(
        name="F2",
        field=f,
        n=2,
        rho_a=FieldMatrix.from_rows(f, [[1, 1], [0, xi]]),
        rho_b=FieldMatrix.from_rows(f, [[xi, 0], [-xi, 1]]),
        beta=FieldMatrix.row(f, [-xi, 1 - xi, 1 - xi, 1]),
        gamma=FieldMatrix.column(
            f, [xi**2 * half, (1 - xi**2) * half, (1 - xi**2) * half, -half]
        ),
        eta=FieldMatrix.column(f, [1, 0]),
        eps=FieldMatrix.row(f, [-xi, 1 - xi]),
    )


def _f3() -> TqftDatum:
    f = RATIONALS
    half = Fraction(1, 2)
    return TqftDatum(
        name="F3",
        field=f,
        n=3,
        rho_a=FieldMatrix.from_rows(f, [[1, 4, 2], [0, 2, 2], [0, 0, 4]]).scale(half),
        rho_b=FieldMatrix.from_rows(f, [[4, 0, 0], [-2, 2, 0], [2, -4, 1]]).scale(half),
        beta=FieldMatrix.row(f, [2, 4, 1, 4, -4, -4, 1, -4, 2]),
        gamma=FieldMatrix.column(f, [8, 4, 4, 4, -1, -4, 4, -4, 8]).scale(Fraction(1, 36)),
        eta=FieldMatrix.column(f, [4, 1, 0]),
        eps=FieldMatrix.row(f, [12, 12, 0]),
    )


class TqftRegistry:
    """Registry of named TQFT builders; created data are validated and sealed."""

    def __init__(self):
        self._builders: Dict[str, Callable[[], TqftDatum]] = {}
        self._instances: Dict[str, TqftDatum] = {}
        self._register_builtins()

    def register(self, name: str, builder: Callable[[], TqftDatum]) -> None:
        self._builders[name] = builder
        self._instances.pop(name, None)

    def create(self, name: str) -> TqftDatum:
        if name not in self._builders:
            raise UnknownNameError(f"Unknown TQFT: {name}")
        if name not in self._instances:
            self._instances[name] = seal(self._builders[name]())
        return self._instances[name]

    def raw(self, name: str) -> TqftDatum:
        """Unvalidated datum, for mutation experiments."""
        if name not in self._builders:
            raise UnknownNameError(f"Unknown TQFT: {name}")
        return self._builders[name]()

    def list(self) -> List[str]:
        return sorted(self._builders)

    def _register_builtins(self) -> None:
        self.register("F1", _f1)
        self.register("F2", _f2)
        self.register("F3", _f3)


tqft_registry = TqftRegistry()


def builtin(name: str) -> TqftDatum:
    return tqft_registry.create(name)
