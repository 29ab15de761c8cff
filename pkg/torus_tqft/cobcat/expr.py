"""
Formal arrow expressions. Objects are tensor powers of the torus, represented by their arity.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Iterable

from ..exceptions import ArityError
from ..sl2z.matrix import E, MatSL2


class ArrowExpr(ABC):
    """An arrow ``source -> target``."""

    @property
    @abstractmethod
    def source(self) -> int: ...

    @property
    @abstractmethod
    def target(self) -> int: ...

    def __matmul__(self, other: ArrowExpr) -> ArrowExpr:
        return compose_expr(self, other)

    def __and__(self, other: ArrowExpr) -> ArrowExpr:
        return tensor_expr(self, other)


@dataclass(frozen=True)
class Id(ArrowExpr):
    n: int

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ArityError(f"identity on a negative arity {self.n}", self)

    @property
    def source(self) -> int:
        return self.n

    @property
    def target(self) -> int:
        return self.n


@dataclass(frozen=True)
class Tau(ArrowExpr):
    """Symmetry m + n -> n + m moving the first m strands past the last n."""

    m: int
    n: int

    def __post_init__(self) -> None:
        if self.m < 0 or self.n < 0:
            raise ArityError(f"tau with negative arity ({self.m},{self.n})", self)

    @property
    def source(self) -> int:
        return self.m + self.n

    @property
    def target(self) -> int:
        return self.m + self.n


@dataclass(frozen=True)
class Cyl(ArrowExpr):
    matrix: MatSL2

    @property
    def source(self) -> int:
        return 1

    @property
    def target(self) -> int:
        return 1


@dataclass(frozen=True)
class Beta(ArrowExpr):
    @property
    def source(self) -> int:
        return 2

    @property
    def target(self) -> int:
        return 0


@dataclass(frozen=True)
class Gamma(ArrowExpr):
    @property
    def source(self) -> int:
        return 0

    @property
    def target(self) -> int:
        return 2


@dataclass(frozen=True)
class Eta(ArrowExpr):
    @property
    def source(self) -> int:
        return 0

    @property
    def target(self) -> int:
        return 1


@dataclass(frozen=True)
class Eps(ArrowExpr):
    @property
    def source(self) -> int:
        return 1

    @property
    def target(self) -> int:
        return 0


@dataclass(frozen=True)
class Compose(ArrowExpr):
    """``outer`` after ``inner``."""

    outer: ArrowExpr
    inner: ArrowExpr
    _source: int = field(init=False, repr=False, compare=False)
    _target: int = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.outer.source != self.inner.target:
            raise ArityError(
                f"cannot compose: outer source {self.outer.source}"
                f" != inner target {self.inner.target}",
                self.outer,
            )
        object.__setattr__(self, "_source", self.inner.source)
        object.__setattr__(self, "_target", self.outer.target)

    @property
    def source(self) -> int:
        return self._source

    @property
    def target(self) -> int:
        return self._target


@dataclass(frozen=True)
class Tensor(ArrowExpr):
    left: ArrowExpr
    right: ArrowExpr
    _source: int = field(init=False, repr=False, compare=False)
    _target: int = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "_source", self.left.source + self.right.source)
        object.__setattr__(self, "_target", self.left.target + self.right.target)

    @property
    def source(self) -> int:
        return self._source

    @property
    def target(self) -> int:
        return self._target


BETA = Beta()
GAMMA = Gamma()
ETA = Eta()
EPS = Eps()


def compose_expr(f: ArrowExpr, g: ArrowExpr) -> Compose:
    """f after g; raises ArityError unless source(f) = target(g)."""
    return Compose(f, g)


def tensor_expr(f: ArrowExpr, g: ArrowExpr) -> Tensor:
    return Tensor(f, g)


def compose_all(arrows: Iterable[ArrowExpr]) -> ArrowExpr:
    """Left-to-right reading: compose_all([f, g, h]) is f after g after h."""
    items = list(arrows)
    result = items[-1]
    for f in reversed(items[:-1]):
        result = Compose(f, result)
    return result


def tensor_all(arrows: Iterable[ArrowExpr]) -> ArrowExpr:
    items = list(arrows)
    if not items:
        return Id(0)
    result = items[0]
    for g in items[1:]:
        result = Tensor(result, g)
    return result


def cyl(a: MatSL2 = E) -> Cyl:
    return Cyl(a)


def uses_unit(expr: ArrowExpr) -> bool:
    """Whether the expression needs eta (directly or through eps)."""
    if isinstance(expr, (Eta, Eps)):
        return True
    if isinstance(expr, Compose):
        return uses_unit(expr.outer) or uses_unit(expr.inner)
    if isinstance(expr, Tensor):
        return uses_unit(expr.left) or uses_unit(expr.right)
    return False


def depth(expr: ArrowExpr) -> int:
    if isinstance(expr, Compose):
        return 1 + max(depth(expr.outer), depth(expr.inner))
    if isinstance(expr, Tensor):
        return 1 + max(depth(expr.left), depth(expr.right))
    return 0
