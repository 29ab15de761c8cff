"""
Functorial evaluation of SL(2,Z) elements and arrows through a TQFT datum.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Union

from ..cobcat.expr import ArrowExpr, Beta, Compose, Cyl, Eps, Eta, Gamma, Id, Tau, Tensor
from ..cobcat.normal_form import NormalForm
from ..exceptions import MissingEtaError
from ..scalars import FieldMatrix
from ..sl2z.matrix import MatSL2
from ..sl2z.words import GenWord, decompose
from .datum import TqftDatum, seal


@lru_cache(maxsize=4096)
def _generator_power(d: TqftDatum, gen: str, exponent: int) -> FieldMatrix:
    base = d.rho_a if gen == "a" else d.rho_b
    return base**exponent


def rho_word(d: TqftDatum, word: GenWord) -> FieldMatrix:
    result = d.identity()
    for gen, exponent in word:
        result = result @ _generator_power(d, gen, exponent)
    return result


@lru_cache(maxsize=4096)
def _rho(d: TqftDatum, a: MatSL2) -> FieldMatrix:
    word, _, _ = decompose(a)
    return rho_word(d, word)


def rho(d: TqftDatum, a: MatSL2) -> FieldMatrix:
    """The representation matrix of ``a``, computed through its Dehn-twist word."""
    return _rho(seal(d), a)


def evaluate(d: TqftDatum, f: Union[ArrowExpr, NormalForm]) -> FieldMatrix:
    """Matrix of an arrow, of shape n^target x n^source.

    Raises:
        MissingEtaError: when ``f`` uses eta or eps and the datum has no unit.
    """
    d = seal(d)
    if isinstance(f, NormalForm):
        f = f.to_expr()
    return _evaluate(d, f)


def _evaluate(d: TqftDatum, f: ArrowExpr) -> FieldMatrix:
    if isinstance(f, Compose):
        return _evaluate(d, f.outer) @ _evaluate(d, f.inner)
    if isinstance(f, Tensor):
        return _evaluate(d, f.left).kron(_evaluate(d, f.right))
    if isinstance(f, Id):
        return d.identity(f.n)
    if isinstance(f, Tau):
        return FieldMatrix.block_swap(d.field, d.n, f.m, f.n)
    if isinstance(f, Cyl):
        return _rho(d, f.matrix)
    if isinstance(f, Beta):
        return d.beta
    if isinstance(f, Gamma):
        return d.gamma
    if isinstance(f, (Eta, Eps)):
        if d.eta is None:
            raise MissingEtaError(f"TQFT {d.name} has no eta")
        return d.eta if isinstance(f, Eta) else d.counit()
    raise TypeError(f"cannot evaluate {f!r}")


# the name used throughout the docs
eval_arrow = evaluate
