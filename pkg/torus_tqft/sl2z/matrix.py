"""
Integral 2x2 matrices of determinant one, laid out as [[p, r], [q, s]].
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

from ..exceptions import NotInSL2ZError


@dataclass(frozen=True)
class MatSL2:
    p: int
    r: int
    q: int
    s: int

    def __post_init__(self) -> None:
        if self.p * self.s - self.q * self.r != 1:
            det = self.p * self.s - self.q * self.r
            raise NotInSL2ZError(f"determinant of {self} is {det}, not 1")

    @classmethod
    def from_rows(cls, rows: Tuple[Tuple[int, int], Tuple[int, int]]) -> MatSL2:
        (p, r), (q, s) = rows
        return cls(int(p), int(r), int(q), int(s))

    def rows(self) -> Tuple[Tuple[int, int], Tuple[int, int]]:
        return (self.p, self.r), (self.q, self.s)

    def as_tuple(self) -> Tuple[int, int, int, int]:
        """Row-major entries, the lexicographic order used for canonical choices."""
        return self.p, self.r, self.q, self.s

    def __matmul__(self, other: MatSL2) -> MatSL2:
        return MatSL2(
            self.p * other.p + self.r * other.q,
            self.p * other.r + self.r * other.s,
            self.q * other.p + self.s * other.q,
            self.q * other.r + self.s * other.s,
        )

    def __neg__(self) -> MatSL2:
        return MatSL2(-self.p, -self.r, -self.q, -self.s)

    def inv(self) -> MatSL2:
        return MatSL2(self.s, -self.r, -self.q, self.p)

    def __pow__(self, exponent: int) -> MatSL2:
        base = self.inv() if exponent < 0 else self
        exponent = abs(exponent)
        result = E
        while exponent:
            if exponent & 1:
                result = result @ base
            base = base @ base
            exponent >>= 1
        return result

    @property
    def trace(self) -> int:
        return self.p + self.s

    def __str__(self) -> str:
        return f"[[{self.p},{self.r}],[{self.q},{self.s}]]"


E = MatSL2(1, 0, 0, 1)
NEG_E = MatSL2(-1, 0, 0, -1)
D_A = MatSL2(1, 1, 0, 1)
D_B = MatSL2(1, 0, -1, 1)
# order-4 element S = D_a D_b D_a
S = MatSL2(0, 1, -1, 0)


def mat_mul(a: MatSL2, b: MatSL2) -> MatSL2:
    return a @ b


def mat_inv(a: MatSL2) -> MatSL2:
    return a.inv()


def mat_pow(a: MatSL2, exponent: int) -> MatSL2:
    return a**exponent


def trace(a: MatSL2) -> int:
    return a.trace


def j_flip(a: MatSL2) -> MatSL2:
    """J A^-1 J with J = [[0,1],[1,0]]; an involutive anti-automorphism."""
    return MatSL2(a.p, -a.q, -a.r, a.s)


def da_power(e: int) -> MatSL2:
    return MatSL2(1, e, 0, 1)


def db_power(e: int) -> MatSL2:
    return MatSL2(1, 0, -e, 1)
