"""
Words in the Dehn twists D_a, D_b and the negative continued fraction decomposition.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Tuple

from ..exceptions import ParseError
from ..log import get_logger
from .matrix import E, MatSL2, da_power, db_power

logger = get_logger(__name__)

Letter = Tuple[str, int]

_TOKEN = re.compile(r"([ab])(?:\^([+-]?\d+))?$")


@dataclass(frozen=True)
class GenWord:
    """A reduced word: no zero exponents and no two adjacent letters on the same generator."""

    letters: Tuple[Letter, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "letters", _reduce(self.letters))

    @classmethod
    def of(cls, *letters: Letter) -> GenWord:
        return cls(tuple(letters))

    def __mul__(self, other: GenWord) -> GenWord:
        return GenWord(self.letters + other.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def inverse(self) -> GenWord:
        return GenWord(tuple((g, -e) for g, e in reversed(self.letters)))

    def __str__(self) -> str:
        return word_to_text(self)


def _reduce(letters: Iterable[Letter]) -> Tuple[Letter, ...]:
    out: List[Letter] = []
    for gen, exp in letters:
        if gen not in ("a", "b"):
            raise ValueError(f"unknown generator {gen!r}")
        exp = int(exp)
        if out and out[-1][0] == gen:
            exp += out.pop()[1]
        if exp:
            out.append((gen, exp))
    return tuple(out)


def evaluate_word(word: GenWord) -> MatSL2:
    """Left-to-right product of generator powers."""
    result = E
    for gen, exp in word.letters:
        result = result @ (da_power(exp) if gen == "a" else db_power(exp))
    return result


def word_to_text(word: GenWord) -> str:
    if not word.letters:
        return "1"
    return " ".join(f"{g}^{e}" for g, e in word.letters)


def word_from_text(text: str) -> GenWord:
    """Parse ``a^3 b^-1 a`` (``1`` or an empty string is the empty word)."""
    letters: List[Letter] = []
    stripped = text.strip()
    if stripped in ("", "1"):
        return GenWord()
    offset = 0
    for token in stripped.split():
        offset = text.index(token, offset)
        match = _TOKEN.match(token)
        if not match:
            raise ParseError(f"bad word token {token!r}", offset)
        letters.append((match.group(1), int(match.group(2) or 1)))
        offset += len(token)
    return GenWord(tuple(letters))


NEG_E_WORD = GenWord.of(*([("a", 1), ("b", 1)] * 3))


def negative_cf(p: int, q: int) -> List[int]:
    """Expansion p/q = m1 - 1/(m2 - 1/(... - 1/mk)) with mi >= 2 for i >= 2.

    Uses the ceiling recurrence m = ceil(p/q), (p, q) <- (q, m*q - p).
    """
    if q == 0:
        raise ZeroDivisionError("negative_cf needs q != 0")
    terms: List[int] = []
    while q != 0:
        m = -((-p) // q)
        terms.append(m)
        p, q = q, m * q - p
    return terms


def evaluate_cf(terms: List[int]) -> Fraction:
    value = Fraction(terms[-1])
    for m in reversed(terms[:-1]):
        value = m - 1 / value
    return value


def decompose(a: MatSL2) -> Tuple[GenWord, int, bool]:
    """Write ``a`` as a word in D_a, D_b.

    Returns:
        ``(word, residual_m, negated)`` where ``word`` evaluates to ``a``, ``residual_m`` is the
        exponent of the trailing D_a power and ``negated`` tells whether the -E subword
        (D_a D_b)^3 was prepended.
    """
    # the unsigned word has a positive lower-left entry, so the sign follows q, not p
    negated = a.q < 0 or (a.q == 0 and a.p < 0)
    b = -a if negated else a
    prefix = NEG_E_WORD if negated else GenWord()

    if b.q == 0:
        # b = D_a^r
        word = prefix * GenWord.of(("a", b.r))
        logger.debug("decompose %s: upper triangular, D_a^%d", a, b.r)
        return word, b.r, negated

    terms = negative_cf(b.p, b.q)
    letters: List[Letter] = [("a", terms[0] - 1), ("b", -1)]
    for m in terms[1:]:
        letters.extend([("a", m - 2), ("b", -1)])
    head = GenWord(tuple(letters))
    residual = evaluate_word(head).inv() @ b
    m = residual.r
    logger.debug("decompose %s: cf=%s residual D_a^%d negated=%s", a, terms, m, negated)
    return prefix * head * GenWord.of(("a", m)), m, negated
