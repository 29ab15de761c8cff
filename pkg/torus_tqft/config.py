"""
Environment-driven settings.
"""

import os
from dataclasses import dataclass, field
from typing import List, Tuple

from dotenv import load_dotenv

from .exceptions import ParseError

DEFAULT_GRID = "1,-1,2,-2;5:4,13:3"
DEFAULT_BRUTE_FORCE_BOUND = 40


@dataclass(frozen=True)
class FunarGrid:
    """Triples (k, q, v) swept by the Funar tables: every k against every (q, v)."""

    ks: Tuple[int, ...]
    qvs: Tuple[Tuple[int, int], ...]

    def triples(self) -> List[Tuple[int, int, int]]:
        return [(k, q, v) for q, v in self.qvs for k in self.ks]


def parse_grid(text: str) -> FunarGrid:
    """Parse ``k1,k2,...;q:v,q:v``.

    Raises:
        ParseError: on any malformed token.
    """
    if text.count(";") != 1:
        raise ParseError(f"grid must have the form 'k1,k2;q:v,q:v', got {text!r}")
    k_part, qv_part = text.split(";")
    ks: List[int] = []
    offset = 0
    for token in k_part.split(","):
        try:
            ks.append(int(token.strip()))
        except ValueError:
            raise ParseError(f"bad k value {token!r} in grid", offset) from None
        offset += len(token) + 1
    offset = len(k_part) + 1
    qvs: List[Tuple[int, int]] = []
    for token in qv_part.split(","):
        q_text, sep, v_text = token.partition(":")
        try:
            if not sep:
                raise ValueError(token)
            qvs.append((int(q_text.strip()), int(v_text.strip())))
        except ValueError:
            raise ParseError(f"bad q:v pair {token!r} in grid", offset) from None
        offset += len(token) + 1
    return FunarGrid(tuple(ks), tuple(qvs))


@dataclass(frozen=True)
class Settings:
    grid: FunarGrid = field(default_factory=lambda: parse_grid(DEFAULT_GRID))
    log_level: str = "WARNING"
    brute_force_bound: int = DEFAULT_BRUTE_FORCE_BOUND

    @classmethod
    def from_env(cls) -> "Settings":
        load_dotenv()
        bound_text = os.getenv("TORUS_TQFT_BRUTE_FORCE_BOUND", str(DEFAULT_BRUTE_FORCE_BOUND))
        try:
            bound = int(bound_text)
        except ValueError:
            raise ParseError(
                f"TORUS_TQFT_BRUTE_FORCE_BOUND must be an integer, got {bound_text!r}"
            ) from None
        return cls(
            grid=parse_grid(os.getenv("TORUS_TQFT_GRID", DEFAULT_GRID)),
            log_level=os.getenv("TORUS_TQFT_LOG_LEVEL", "WARNING"),
            brute_force_bound=bound,
        )


def get_settings() -> Settings:
    return Settings.from_env()
