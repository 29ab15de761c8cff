"""
Dense matrices of FieldElement with exact linear algebra.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Iterable, List, Sequence, Tuple, Union

import sympy

from ..exceptions import FieldMismatchError, ZeroDivisionFieldError
from .field import FieldDescriptor, FieldElement, Rational

Entry = Union[FieldElement, Rational]


@dataclass(frozen=True)
class FieldMatrix:
    """Immutable ``rows x cols`` matrix over a single field."""

    descriptor: FieldDescriptor
    entries: Tuple[Tuple[FieldElement, ...], ...]

    def __post_init__(self) -> None:
        if not self.entries or not self.entries[0]:
            raise ValueError("matrices must have at least one row and one column")
        width = len(self.entries[0])
        if any(len(row) != width for row in self.entries):
            raise ValueError("ragged matrix rows")

    # -- construction ----------------------------------------------------

    @classmethod
    def from_rows(cls, descriptor: FieldDescriptor, rows: Iterable[Iterable[Entry]]) -> FieldMatrix:
        coerced: List[Tuple[FieldElement, ...]] = []
        for row in rows:
            coerced.append(tuple(_coerce(descriptor, x) for x in row))
        return cls(descriptor, tuple(coerced))

    @classmethod
    def row(cls, descriptor: FieldDescriptor, values: Iterable[Entry]) -> FieldMatrix:
        return cls.from_rows(descriptor, [list(values)])

    @classmethod
    def column(cls, descriptor: FieldDescriptor, values: Iterable[Entry]) -> FieldMatrix:
        return cls.from_rows(descriptor, [[x] for x in values])

    @classmethod
    def identity(cls, descriptor: FieldDescriptor, n: int) -> FieldMatrix:
        one, zero = descriptor.one(), descriptor.zero()
        rows = tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n))
        return cls(descriptor, rows)

    @classmethod
    def zeros(cls, descriptor: FieldDescriptor, rows: int, cols: int) -> FieldMatrix:
        zero = descriptor.zero()
        return cls(descriptor, tuple(tuple(zero for _ in range(cols)) for _ in range(rows)))

    @classmethod
    def scalar(cls, x: FieldElement) -> FieldMatrix:
        return cls(x.descriptor, ((x,),))

    @classmethod
    def tensor_permutation(
        cls, descriptor: FieldDescriptor, n: int, perm: Sequence[int]
    ) -> FieldMatrix:
        """Permutation of tensor factors on an ``n``-dimensional space.

        Factor ``i`` of the source tensor lands at position ``perm[i]`` of the target.
        """
        return _permutation_matrix(descriptor, n, tuple(perm))

    @classmethod
    def block_swap(cls, descriptor: FieldDescriptor, n: int, m: int, k: int) -> FieldMatrix:
        """Matrix of tau_{m,k}: V^m (x) V^k -> V^k (x) V^m."""
        perm = [k + i for i in range(m)] + [i for i in range(k)]
        return cls.tensor_permutation(descriptor, n, perm)

    @classmethod
    def swap(cls, descriptor: FieldDescriptor, n: int) -> FieldMatrix:
        """The n^2 x n^2 commutation matrix sending e_i (x) e_j to e_j (x) e_i."""
        return cls.block_swap(descriptor, n, 1, 1)

    # -- shape -----------------------------------------------------------

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, index: Tuple[int, int]) -> FieldElement:
        i, j = index
        return self.entries[i][j]

    def is_square(self) -> bool:
        return self.rows == self.cols

    def as_scalar(self) -> FieldElement:
        if self.shape != (1, 1):
            raise ValueError(f"expected a 1x1 matrix, got {self.rows}x{self.cols}")
        return self.entries[0][0]

    def flat(self) -> List[FieldElement]:
        return [x for row in self.entries for x in row]

    # -- arithmetic ------------------------------------------------------

    def _check(self, other: FieldMatrix) -> None:
        if other.descriptor != self.descriptor:
            raise FieldMismatchError(f"{self.descriptor.name} vs {other.descriptor.name}")

    def __matmul__(self, other: FieldMatrix) -> FieldMatrix:
        self._check(other)
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        zero = self.descriptor.zero()
        columns = list(zip(*other.entries))
        out = []
        for row in self.entries:
            new_row = []
            for col in columns:
                acc = zero
                for x, y in zip(row, col):
                    if x.a or x.b:
                        acc = acc + x * y
                new_row.append(acc)
            out.append(tuple(new_row))
        return FieldMatrix(self.descriptor, tuple(out))

    def __add__(self, other: FieldMatrix) -> FieldMatrix:
        self._check(other)
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} + {other.shape}")
        return FieldMatrix(
            self.descriptor,
            tuple(tuple(x + y for x, y in zip(r, s)) for r, s in zip(self.entries, other.entries)),
        )

    def __neg__(self) -> FieldMatrix:
        return FieldMatrix(self.descriptor, tuple(tuple(-x for x in r) for r in self.entries))

    def __sub__(self, other: FieldMatrix) -> FieldMatrix:
        return self + (-other)

    def scale(self, c: Entry) -> FieldMatrix:
        c = _coerce(self.descriptor, c)
        return FieldMatrix(self.descriptor, tuple(tuple(c * x for x in r) for r in self.entries))

    def kron(self, other: FieldMatrix) -> FieldMatrix:
        """Kronecker product; row index of the result is ``i * other.rows + k``."""
        self._check(other)
        out = []
        for row in self.entries:
            for other_row in other.entries:
                out.append(tuple(x * y for x in row for y in other_row))
        return FieldMatrix(self.descriptor, tuple(out))

    def transpose(self) -> FieldMatrix:
        return FieldMatrix(self.descriptor, tuple(zip(*self.entries)))

    def trace(self) -> FieldElement:
        if not self.is_square():
            raise ValueError("trace of a non-square matrix")
        acc = self.descriptor.zero()
        for i in range(self.rows):
            acc = acc + self.entries[i][i]
        return acc

    def inverse(self) -> FieldMatrix:
        """Inverse computed by sympy on the rational regular representation.

        ``a + b*w`` acts on the basis ``(1, w)`` as ``[[a, u*b], [b, a + v*b]]``. The map is an
        injective ring homomorphism, so the first column of each 2x2 block of the inverted
        image holds the inverse over the field.
        """
        if not self.is_square():
            raise ValueError("inverse of a non-square matrix")
        image = sympy.Matrix(_regular_rows(self))
        if image.det() == 0:
            raise ZeroDivisionFieldError("singular matrix")
        inv = image.inv()
        d = self.descriptor
        step = 1 if d.is_rational else 2
        rows = []
        for i in range(self.rows):
            row = []
            for j in range(self.cols):
                a = _fraction(inv[step * i, step * j])
                b = 0 if d.is_rational else _fraction(inv[step * i + 1, step * j])
                row.append(d.element(a, b))
            rows.append(tuple(row))
        return FieldMatrix(d, tuple(rows))

    def __pow__(self, exponent: int) -> FieldMatrix:
        if not self.is_square():
            raise ValueError("power of a non-square matrix")
        base = self.inverse() if exponent < 0 else self
        exponent = abs(exponent)
        result = FieldMatrix.identity(self.descriptor, self.rows)
        while exponent:
            if exponent & 1:
                result = result @ base
            base = base @ base
            exponent >>= 1
        return result

    def differing_entries(self, other: FieldMatrix) -> List[Tuple[int, int]]:
        """Index pairs where two same-shape matrices disagree."""
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")
        return [
            (i, j)
            for i in range(self.rows)
            for j in range(self.cols)
            if self.entries[i][j] != other.entries[i][j]
        ]

    def to_text(self) -> List[List[str]]:
        return [[str(x) for x in row] for row in self.entries]

    def __str__(self) -> str:
        return "[" + ", ".join("[" + ", ".join(r) + "]" for r in self.to_text()) + "]"


def _coerce(descriptor: FieldDescriptor, x: Entry) -> FieldElement:
    if isinstance(x, FieldElement):
        if x.descriptor == descriptor:
            return x
        if x.b == 0:
            return descriptor.element(x.a)
        raise FieldMismatchError(f"entry over {x.descriptor.name} in a {descriptor.name} matrix")
    return descriptor.element(x)


@lru_cache(maxsize=256)
def _permutation_matrix(descriptor: FieldDescriptor, n: int, perm: Tuple[int, ...]) -> FieldMatrix:
    k = len(perm)
    if sorted(perm) != list(range(k)):
        raise ValueError(f"not a permutation: {perm}")
    size = n**k
    one, zero = descriptor.one(), descriptor.zero()
    rows = [[zero] * size for _ in range(size)]
    for source in product(range(n), repeat=k):
        target = [0] * k
        for i, position in enumerate(perm):
            target[position] = source[i]
        rows[_flat_index(target, n)][_flat_index(source, n)] = one
    return FieldMatrix(descriptor, tuple(tuple(r) for r in rows))


def _flat_index(multi: Sequence[int], n: int) -> int:
    index = 0
    for x in multi:
        index = index * n + x
    return index


def _regular_rows(m: FieldMatrix) -> List[List[sympy.Rational]]:
    """Rational image of ``m``: each entry becomes its 2x2 multiplication matrix."""
    d = m.descriptor
    if d.is_rational:
        return [[_rational(x.a) for x in row] for row in m.entries]
    u, v = d.u, d.v
    out: List[List[sympy.Rational]] = []
    for row in m.entries:
        top: List[sympy.Rational] = []
        bottom: List[sympy.Rational] = []
        for x in row:
            top.extend(_rational(y) for y in (x.a, u * x.b))
            bottom.extend(_rational(y) for y in (x.b, x.a + v * x.b))
        out.extend([top, bottom])
    return out


def _rational(x: Fraction) -> sympy.Rational:
    return sympy.Rational(x.numerator, x.denominator)


def _fraction(x: sympy.Rational) -> Fraction:
    return Fraction(int(x.p), int(x.q))
