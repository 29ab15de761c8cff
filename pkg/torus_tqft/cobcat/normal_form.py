"""
Normal forms tau^t . (C_1 (x) ... (x) C_k) . tau^s and the normalization procedure.

A normal form is stored as a list of placed factors: each factor records the boundary position
of every one of its legs. The permutations tau^t and tau^s are read off from that placement.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, Hashable, Iterator, List, Sequence, Tuple, Union

from ..exceptions import ArityError
from ..log import get_logger
from ..sl2z.matrix import E, MatSL2, j_flip
from .expr import (
    ArrowExpr,
    Beta,
    Compose,
    Cyl,
    Eps,
    Eta,
    Gamma,
    Id,
    Tau,
    Tensor,
    compose_all,
    tensor_all,
)
from .factors import Factor, canonical_factor, factor_key

logger = get_logger(__name__)


@dataclass(frozen=True)
class Perm:
    """Permutation of {0, ..., n-1}: strand ``i`` goes to position ``images[i]``."""

    images: Tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.images) != list(range(len(self.images))):
            raise ValueError(f"not a permutation: {self.images}")

    @property
    def size(self) -> int:
        return len(self.images)

    def inverse(self) -> Perm:
        inv = [0] * self.size
        for i, j in enumerate(self.images):
            inv[j] = i
        return Perm(tuple(inv))

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def to_expr(self) -> ArrowExpr:
        """Adjacent transpositions realizing the permutation."""
        n = self.size
        arrangement = list(range(n))
        layers: List[ArrowExpr] = []
        changed = True
        while changed:
            changed = False
            for pos in range(n - 1):
                if self.images[arrangement[pos]] > self.images[arrangement[pos + 1]]:
                    arrangement[pos], arrangement[pos + 1] = arrangement[pos + 1], arrangement[pos]
                    layers.append(tensor_all([Id(pos), Tau(1, 1), Id(n - pos - 2)]))
                    changed = True
        if not layers:
            return Id(n)
        return compose_all(reversed(layers))

    def __str__(self) -> str:
        return "[" + ",".join(str(i + 1) for i in self.images) + "]"


@dataclass(frozen=True)
class PlacedFactor:
    """A factor with its legs attached to boundary positions.

    ``sources`` lists source positions of the factor's input legs in leg order; ``targets`` does the
    same for output legs. Leg 0 of C1/C3 is the one carrying the parameter.
    """

    factor: Factor
    sources: Tuple[int, ...] = ()
    targets: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if len(self.sources) != self.factor.source or len(self.targets) != self.factor.target:
            raise ArityError(f"placement of {self.factor} has the wrong number of legs", self)


@dataclass(frozen=True)
class NormalForm:
    source: int
    target: int
    factors: Tuple[PlacedFactor, ...] = field(default=())

    def __post_init__(self) -> None:
        srcs = sorted(p for f in self.factors for p in f.sources)
        tgts = sorted(p for f in self.factors for p in f.targets)
        if srcs != list(range(self.source)) or tgts != list(range(self.target)):
            raise ArityError("factor legs do not cover the boundary exactly once", self)

    @property
    def is_empty(self) -> bool:
        """The degenerate form for the identity on the empty surface."""
        return self.source == 0 and self.target == 0 and not self.factors

    @property
    def factor_list(self) -> List[Factor]:
        return [f.factor for f in self.factors]

    @property
    def target_perm(self) -> Perm:
        """tau^t: output leg ``i`` of the factor tensor lands at ``images[i]``."""
        return Perm(tuple(p for f in self.factors for p in f.targets))

    @property
    def source_perm(self) -> Perm:
        """tau^s: boundary source ``j`` feeds input leg ``images[j]`` of the factor tensor."""
        legs = [p for f in self.factors for p in f.sources]
        return Perm(tuple(legs)).inverse()

    def to_expr(self) -> ArrowExpr:
        core = tensor_all([f.factor.to_expr() for f in self.factors])
        return Compose(self.target_perm.to_expr(), Compose(core, self.source_perm.to_expr()))

    def __str__(self) -> str:
        if self.is_empty:
            return "1_0"
        body = " (x) ".join(str(f.factor) for f in self.factors)
        return f"tau{self.target_perm} . ({body}) . tau{self.source_perm}"


def identity_form(n: int) -> NormalForm:
    return NormalForm(n, n, tuple(PlacedFactor(Factor("C2", E), (i,), (i,)) for i in range(n)))


# -- normalization -------------------------------------------------------


class _Leg:
    __slots__ = ("kind", "param", "sources", "targets")

    def __init__(self, kind: str, param: MatSL2, sources: List[int], targets: List[int]):
        self.kind = kind
        self.param = param
        self.sources = sources
        self.targets = targets


class _Diagram:
    """Mutable working copy of a normal form while layers are absorbed."""

    def __init__(self, n: int):
        self.source = n
        self.target = n
        self.parts: List[_Leg] = [_Leg("C2", E, [i], [i]) for i in range(n)]

    def find(self, position: int) -> Tuple[_Leg, int]:
        for part in self.parts:
            if position in part.targets:
                return part, part.targets.index(position)
        raise ArityError(f"no strand at target position {position}")

    def shift(self, start: int, delta: int) -> None:
        for part in self.parts:
            part.targets = [p + delta if p >= start else p for p in part.targets]

    def absorb(self, offset: int, gen: ArrowExpr) -> None:
        if isinstance(gen, Tau):
            self._tau(offset, gen.m, gen.n)
        elif isinstance(gen, Cyl):
            self._cyl(offset, gen.matrix)
        elif isinstance(gen, Gamma):
            self.shift(offset, 2)
            self.parts.append(_Leg("C3", E, [], [offset, offset + 1]))
            self.target += 2
        elif isinstance(gen, Eta):
            self.shift(offset, 1)
            self.parts.append(_Leg("C5", E, [], [offset]))
            self.target += 1
        elif isinstance(gen, Eps):
            self._eps(offset)
        elif isinstance(gen, Beta):
            self._beta(offset)
        else:
            raise TypeError(f"not a generator: {gen!r}")

    def _tau(self, offset: int, m: int, n: int) -> None:
        def move(p: int) -> int:
            if offset <= p < offset + m:
                return p + n
            if offset + m <= p < offset + m + n:
                return p - m
            return p

        for part in self.parts:
            part.targets = [move(p) for p in part.targets]

    def _cyl(self, offset: int, a: MatSL2) -> None:
        part, leg = self.find(offset)
        if part.kind == "C3" and leg == 1:
            # (1 (x) rho_A)(rho_B (x) 1) gamma = (rho_{B J A^-1 J} (x) 1) gamma
            part.param = part.param @ j_flip(a)
        else:
            part.param = a @ part.param

    def _remove(self, part: _Leg, leg: int) -> None:
        position = part.targets.pop(leg)
        self.shift(position + 1, -1)
        self.target -= 1

    def _eps(self, offset: int) -> None:
        part, leg = self.find(offset)
        self._remove(part, leg)
        if part.kind == "C2":
            part.kind = "C6"
        elif part.kind == "C5":
            part.kind = "C0"
        else:
            # C3: eps on the leg carrying rho_{B'} leaves rho_{J B'^-1 J} eta on the other leg
            part.param = j_flip(_leg_param(part.param, leg))
            part.kind = "C5"

    def _beta(self, offset: int) -> None:
        x, x_leg = self.find(offset)
        y, y_leg = self.find(offset + 1)
        if x is y:
            # both legs of one C3; beta is symmetric so the leg order is irrelevant
            self.parts.remove(x)
            self.shift(offset + 2, -2)
            self.target -= 2
            x.targets = []
            x.kind = "C4"
            self.parts.append(x)
            return

        # beta is symmetric: order the pair by kind
        if (x.kind, x_leg) > (y.kind, y_leg):
            x, x_leg, y, y_leg = y, y_leg, x, x_leg
        x_param = _leg_param(x.param, x_leg) if x.kind == "C3" else x.param
        y_param = _leg_param(y.param, y_leg) if y.kind == "C3" else y.param
        x_other = [p for i, p in enumerate(x.targets) if i != x_leg]
        y_other = [p for i, p in enumerate(y.targets) if i != y_leg]
        # beta(rho_X u, rho_Y w) = beta(rho_{J Y^-1 J X} u, w)
        merged_param = j_flip(y_param) @ x_param
        kinds = (x.kind, y.kind)
        if kinds == ("C2", "C2"):
            merged = _Leg("C1", merged_param, x.sources + y.sources, [])
        elif kinds == ("C2", "C3"):
            merged = _Leg("C2", merged_param, list(x.sources), y_other)
        elif kinds == ("C2", "C5"):
            merged = _Leg("C6", merged_param, list(x.sources), [])
        elif kinds == ("C3", "C3"):
            merged = _Leg("C3", j_flip(x_param) @ y_param, [], x_other + y_other)
        elif kinds == ("C3", "C5"):
            merged = _Leg("C5", j_flip(x_param) @ y_param, [], x_other)
        elif kinds == ("C5", "C5"):
            merged = _Leg("C0", merged_param, [], [])
        else:
            raise ArityError(f"beta cannot join {kinds}")

        self.parts = [p for p in self.parts if p is not x and p is not y]
        removed = sorted([offset, offset + 1], reverse=True)
        for part in self.parts:
            for r in removed:
                part.targets = [p - 1 if p > r else p for p in part.targets]
        for r in removed:
            merged.targets = [p - 1 if p > r else p for p in merged.targets]
        self.target -= 2
        self.parts.append(merged)

    def freeze(self) -> NormalForm:
        placed = [
            PlacedFactor(Factor(p.kind, p.param), tuple(p.sources), tuple(p.targets))
            for p in self.parts
        ]
        placed.sort(key=_placement_order)
        return NormalForm(self.source, self.target, tuple(placed))


def _leg_param(param: MatSL2, leg: int) -> MatSL2:
    """Parameter of a C3 rewritten onto ``leg``.

    (rho_B (x) 1) gamma = (1 (x) rho_{J B^-1 J}) gamma.
    """
    return param if leg == 0 else j_flip(param)


def _placement_order(f: PlacedFactor) -> Tuple:
    legs = sorted([("t", p) for p in f.targets] + [("s", p) for p in f.sources])
    return (1 if f.factor.closed else 0, legs, f.factor.kind, f.factor.param.as_tuple())


def _layers(expr: ArrowExpr, offset: int = 0) -> Iterator[Tuple[int, ArrowExpr]]:
    """Generators in application order with the offset of their first strand."""
    if isinstance(expr, Id):
        return
    if isinstance(expr, Compose):
        yield from _layers(expr.inner, offset)
        yield from _layers(expr.outer, offset)
    elif isinstance(expr, Tensor):
        # f (x) g = (f (x) 1)(1 (x) g)
        yield from _layers(expr.right, offset + expr.left.source)
        yield from _layers(expr.left, offset)
    else:
        yield offset, expr


def normalize(expr: Union[ArrowExpr, NormalForm]) -> NormalForm:
    """Normal form of an arrow expression, absorbing one generator layer at a time."""
    if isinstance(expr, NormalForm):
        expr = expr.to_expr()
    diagram = _Diagram(expr.source)
    for offset, gen in _layers(expr):
        logger.debug("absorb %s at %d", type(gen).__name__, offset)
        diagram.absorb(offset, gen)
    return diagram.freeze()


# -- equality -------------------------------------------------------------


def canonical_placement(f: PlacedFactor) -> Tuple[Hashable, Tuple, Tuple]:
    """(class key, source legs, target legs) with C1/C3 legs oriented canonically.

    C1(A) on legs (x, y) equals C1(J A^-1 J) on legs (y, x); likewise for C3.
    """
    key = factor_key(f.factor)
    if f.factor.kind not in ("C1", "C3"):
        return key, f.sources, f.targets
    a = f.factor.param
    flipped = j_flip(a)
    if a == flipped:
        return key, tuple(sorted(f.sources)), tuple(sorted(f.targets))
    if flipped.as_tuple() < a.as_tuple():
        return key, f.sources[::-1], f.targets[::-1]
    return key, f.sources, f.targets


def canonical_form(nf: NormalForm) -> NormalForm:
    """The same arrow with every factor replaced by its canonical representative."""
    placed = []
    for f in nf.factors:
        _, sources, targets = canonical_placement(f)
        placed.append(PlacedFactor(canonical_factor(f.factor), sources, targets))
    placed.sort(key=_placement_order)
    return NormalForm(nf.source, nf.target, tuple(placed))


def _signature(nf: NormalForm) -> Tuple[Dict[frozenset, Tuple], Counter]:
    open_parts: Dict[frozenset, Tuple] = {}
    closed: Counter = Counter()
    for f in nf.factors:
        key, sources, targets = canonical_placement(f)
        if f.factor.closed:
            closed[key] += 1
            continue
        legs = frozenset([("s", p) for p in sources] + [("t", p) for p in targets])
        open_parts[legs] = (key, sources, targets)
    return open_parts, closed


def arrows_equal(f: NormalForm, g: NormalForm) -> bool:
    """Equality of arrows given in normal form.

    Open factors are pinned by the boundary legs they touch, so the component matching is
    decided leg set by leg set; closed factors are compared as multisets of class keys.
    """
    if (f.source, f.target) != (g.source, g.target):
        raise ArityError(
            f"cannot compare {f.source}->{f.target} with {g.source}->{g.target}", (f, g)
        )
    return _signature(f) == _signature(g)


def expressions_equal(f: ArrowExpr, g: ArrowExpr) -> bool:
    return arrows_equal(normalize(f), normalize(g))


def factors_of(nf: NormalForm) -> Sequence[Factor]:
    return nf.factor_list
