"""
Named matrices: Stebe's pair, Funar's X_i/Y_i pairs, the lens gluing matrices
and the G_{k,q,v}/H_{k,q,v} family.
"""

from __future__ import annotations

from typing import Dict, List, Tuple

from sympy import factorint, isprime
from sympy.ntheory import is_quad_residue

from ..config import FunarGrid, get_settings
from ..exceptions import PreconditionError, UnknownNameError
from ..log import get_logger
from .matrix import MatSL2
from .words import GenWord

logger = get_logger(__name__)

_NAMED: Dict[str, MatSL2] = {
    "StebeG": MatSL2(188, 275, 121, 177),
    "StebeH": MatSL2(188, 11, 3025, 177),
    "X21": MatSL2(1, 21, 21, 442),
    "Y21": MatSL2(106, 189, 189, 337),
    # Y51 exactly as printed in the source table; a misprint was reported upstream of it
    "X51": MatSL2(1, 51, 51, 2602),
    "Y51": MatSL2(562, 1071, 1071, 2041),
    "X53": MatSL2(1, 53, 53, 2810),
    "Y53": MatSL2(425, 1007, 1007, 2386),
    "X55": MatSL2(1, 55, 55, 3026),
    "Y55": MatSL2(881, 1375, 1375, 2146),
    "Lambda1": MatSL2(7, -8, 1, -1),
    "Lambda2": MatSL2(7, -4, 2, -1),
    "Lambda8": MatSL2(65, 8, 8, 1),
    "Lambda18": MatSL2(65, 18, 18, 5),
}

XY_INDICES = (21, 51, 53, 55)
LENS_PAIRS = (("Lambda1", "Lambda2"), ("Lambda8", "Lambda18"))


def named_matrices() -> Dict[str, MatSL2]:
    return dict(_NAMED)


def named_matrix(name: str) -> MatSL2:
    try:
        return _NAMED[name]
    except KeyError:
        raise UnknownNameError(f"Unknown matrix: {name}") from None


def check_funar_triple(k: int, q: int, v: int) -> None:
    """Raise PreconditionError naming the first failed condition."""
    if k == 0:
        raise PreconditionError("k must be nonzero")
    if v <= 0:
        raise PreconditionError("v must be positive")
    if not (isprime(q) and q % 4 == 1):
        raise PreconditionError("q must be a prime congruent to 1 mod 4")
    residue = (-v) % q
    if residue == 0 or not is_quad_residue(residue, q):
        raise PreconditionError("-v mod q must be a nonzero square")
    if v % 4 != 0 and not any(prime % 4 == 3 for prime in factorint(v)):
        raise PreconditionError("v must be divisible by 4 or by a prime congruent to 3 mod 4")


def funar_pair(k: int, q: int, v: int) -> Tuple[MatSL2, MatSL2]:
    """G_{k,q,v} = [[1, kq^2], [kv, 1+k^2q^2v]] and H_{k,q,v} = [[1, k], [kq^2v, 1+k^2q^2v]]."""
    check_funar_triple(k, q, v)
    corner = 1 + k * k * q * q * v
    return MatSL2(1, k * q * q, k * v, corner), MatSL2(1, k, k * q * q * v, corner)


def funar_family(k: int, q: int, v: int) -> Tuple[GenWord, GenWord]:
    """Words D_b^{-kv} D_a^{kq^2} and D_b^{-kq^2v} D_a^{k} for the pair."""
    check_funar_triple(k, q, v)
    return (
        GenWord.of(("b", -k * v), ("a", k * q * q)),
        GenWord.of(("b", -k * q * q * v), ("a", k)),
    )


def default_funar_grid() -> FunarGrid:
    return get_settings().grid


def valid_triples(grid: FunarGrid) -> List[Tuple[int, int, int]]:
    """Grid triples that satisfy the preconditions, in grid order."""
    out = []
    for triple in grid.triples():
        try:
            check_funar_triple(*triple)
        except PreconditionError as exc:
            logger.warning("skipping grid triple %s: %s", triple, exc.clause)
            continue
        out.append(triple)
    return out
