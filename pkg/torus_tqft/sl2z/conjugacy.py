"""
Conjugacy in SL(2,Z): complete invariants, a brute-force oracle and torus-bundle classification.

Classes are keyed by trace:
  * |tr| < 2, elliptic: (0, tr, sign of the lower-left entry)
  * |tr| = 2, parabolic: (1, eps, m) for the class of eps*[[1, eps*m],[0,1]]
  * |tr| > 2, hyperbolic: (2, sign, runs) where runs are the exponents of the
    lexicographically least rotation of the positive cyclic word R^e0 L^e1 ... in
    R = [[1,1],[0,1]] and L = [[1,0],[1,1]].
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import floor, gcd
from typing import List, Optional, Tuple

from ..log import get_logger
from .matrix import E, S, MatSL2, j_flip

logger = get_logger(__name__)

ConjugacyKey = Tuple

_R = MatSL2(1, 1, 0, 1)
_L = MatSL2(1, 0, 1, 1)

ELLIPTIC_REPRESENTATIVES = {
    (0, 1): MatSL2(0, -1, 1, 0),
    (0, -1): MatSL2(0, 1, -1, 0),
    (1, 1): MatSL2(1, -1, 1, 0),
    (1, -1): MatSL2(0, 1, -1, 1),
    (-1, 1): MatSL2(-1, -1, 1, 0),
    (-1, -1): MatSL2(0, 1, -1, -1),
}


def _sign(x: int) -> int:
    return (x > 0) - (x < 0)


def conjugacy_key(a: MatSL2) -> ConjugacyKey:
    """Hashable complete invariant of the SL(2,Z) conjugacy class of ``a``."""
    t = a.trace
    if abs(t) < 2:
        # the form q x^2 + (s - p) xy - r y^2 is definite; its sign is invariant
        return (0, t, _sign(a.q))
    if abs(t) == 2:
        eps = t // 2
        if a.r != 0:
            m = _sign(a.r) * gcd(a.r, a.q)
        else:
            m = _sign(-a.q) * abs(a.q)
        return (1, eps, m)
    sign = _sign(t)
    runs = _cyclic_runs(_positive_conjugate(a if sign > 0 else -a))
    return (2, sign, _least_rotation(runs))


def conjugacy_representative(key: ConjugacyKey) -> MatSL2:
    """A fixed matrix in the class named by ``key``."""
    kind = key[0]
    if kind == 0:
        return ELLIPTIC_REPRESENTATIVES[(key[1], key[2])]
    if kind == 1:
        eps, m = key[1], key[2]
        return MatSL2(eps, m, 0, eps)
    sign, runs = key[1], key[2]
    result = E
    for i, e in enumerate(runs):
        result = result @ ((_R if i % 2 == 0 else _L) ** e)
    return result if sign > 0 else -result


def _conjugate(g: MatSL2, a: MatSL2) -> MatSL2:
    return g @ a @ g.inv()


def _positive_conjugate(a: MatSL2) -> MatSL2:
    """Conjugate a trace > 2 matrix until all entries are positive.

    The fixed points of x -> (px + r)/(qx + s) are the roots of
    f(x) = q x^2 + (s - p) x - r. Once they straddle 0 the off-diagonal entries share a sign.
    Otherwise both roots sit in some (n, n+1); translate by n and apply x -> -1/x.
    """
    m = a
    steps = 0
    while m.r * m.q < 0:
        center = Fraction(m.p - m.s, 2 * m.q)
        n0 = floor(center)
        straddled = None
        for n in (n0, n0 + 1):
            if m.q * (m.q * n * n + (m.s - m.p) * n - m.r) < 0:
                straddled = n
                break
        if straddled is not None:
            m = _conjugate(MatSL2(1, -straddled, 0, 1), m)
        else:
            m = _conjugate(S, _conjugate(MatSL2(1, -n0, 0, 1), m))
        steps += 1
    if m.r < 0:
        m = _conjugate(S, m)
    logger.debug("positive conjugate of %s is %s after %d steps", a, m, steps)
    return m


def _runs(m: MatSL2) -> List[Tuple[str, int]]:
    """Factor a nonnegative SL(2,Z) matrix into maximal R and L runs."""
    runs: List[Tuple[str, int]] = []
    p, r, q, s = m.as_tuple()
    while (p, r, q, s) != (1, 0, 0, 1):
        if p >= q and r >= s:
            k = min(p // q if q else r // s, r // s if s else p // q)
            p, r = p - k * q, r - k * s
            runs.append(("R", k))
        elif q >= p and s >= r:
            k = min(q // p if p else s // r, s // r if r else q // p)
            q, s = q - k * p, s - k * r
            runs.append(("L", k))
        else:
            raise ValueError(f"{m} is not a nonnegative SL(2,Z) matrix")
    return runs


def _cyclic_runs(m: MatSL2) -> Tuple[int, ...]:
    runs = _runs(m)
    if len(runs) > 1 and runs[0][0] == runs[-1][0]:
        letter, k = runs.pop()
        runs[0] = (letter, runs[0][1] + k)
    if runs[0][0] == "L":
        runs = runs[1:] + runs[:1]
    return tuple(k for _, k in runs)


def _least_rotation(runs: Tuple[int, ...]) -> Tuple[int, ...]:
    # rotations by an even offset keep R-runs in even slots
    return min(runs[i:] + runs[:i] for i in range(0, len(runs), 2))


def is_conjugate(a: MatSL2, b: MatSL2) -> bool:
    if a.trace != b.trace:
        return False
    return conjugacy_key(a) == conjugacy_key(b)


@lru_cache(maxsize=8)
def _candidates(bound: int) -> Tuple[Tuple[int, int], ...]:
    values = sorted(range(-bound, bound + 1), key=lambda x: (abs(x), x < 0))
    pairs = product(values, repeat=2)
    return tuple(sorted(pairs, key=lambda xy: max(abs(xy[0]), abs(xy[1]))))


def brute_force_conjugate(a: MatSL2, b: MatSL2, bound: int) -> Optional[MatSL2]:
    """Search C with |entries| <= bound and C a C^-1 = b.

    C a = b C is linear in C; two free entries are enumerated and the other two solved for.
    """
    if b.r == 0 and b.q == 0:
        return E if a == b else None
    for x, y in _candidates(bound):
        if b.r != 0:
            # C = [[x, y], [z, w]] from the first row of C a = b C
            z_num = (a.p - b.p) * x + a.q * y
            w_num = a.r * x + (a.s - b.p) * y
            if z_num % b.r or w_num % b.r:
                continue
            c = (x, y, z_num // b.r, w_num // b.r)
        else:
            # b lower triangular: enumerate the second row instead
            x_num = (a.p - b.s) * x + a.q * y
            y_num = a.r * x + (a.s - b.s) * y
            if x_num % b.q or y_num % b.q:
                continue
            c = (x_num // b.q, y_num // b.q, x, y)
        if max(abs(v) for v in c) > bound or c[0] * c[3] - c[1] * c[2] != 1:
            continue
        candidate = MatSL2(*c)
        if candidate @ a == b @ candidate:
            return candidate
    return None


def bundle_key(a: MatSL2) -> ConjugacyKey:
    """Invariant of the torus bundle of ``a``: the class up to conjugacy and J-flip."""
    return min(conjugacy_key(a), conjugacy_key(j_flip(a)))


def torus_bundle_homeomorphic(a: MatSL2, b: MatSL2) -> bool:
    return is_conjugate(a, b) or is_conjugate(a, j_flip(b))
