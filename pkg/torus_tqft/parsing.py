"""
Text forms of matrices and arrow expressions.

Grammar::

    expr  := atom | "(" ("comp" | "tens") expr+ ")" | "(cyl " sl2 ")"
    atom  := "id:" N | "tau:" M "," N | "beta" | "gamma" | "eta" | "eps" | "cyl(" sl2 ")"
    sl2   := "[[p,r],[q,s]]" | word in a, b such as "a^2 b^-1" | a catalogue name
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from typing import List, Optional

from .cobcat.expr import (
    BETA,
    EPS,
    ETA,
    GAMMA,
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
from .exceptions import ArityError, ParseError
from .sl2z.catalog import named_matrices
from .sl2z.matrix import MatSL2
from .sl2z.words import evaluate_word, word_from_text

_ID = re.compile(r"id:(\d+)$")
_TAU = re.compile(r"tau:(\d+),(\d+)$")
_CONSTANTS = {"beta": BETA, "gamma": GAMMA, "eta": ETA, "eps": EPS}


def parse_matrix(text: str) -> MatSL2:
    """``[[p, r], [q, s]]`` as JSON.

    Raises:
        ParseError: if the text is not a 2x2 integer array.
        NotInSL2ZError: if the determinant is not 1.
    """
    try:
        rows = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"bad matrix {text!r}: {exc.msg}", exc.pos) from None
    if (
        not isinstance(rows, list)
        or len(rows) != 2
        or any(not isinstance(row, list) or len(row) != 2 for row in rows)
        or any(not isinstance(x, int) or isinstance(x, bool) for row in rows for x in row)
    ):
        raise ParseError(f"expected a 2x2 integer matrix, got {text!r}")
    return MatSL2.from_rows(rows)


def parse_sl2(text: str) -> MatSL2:
    """A matrix, a catalogue name or a Dehn-twist word."""
    stripped = text.strip()
    if stripped.startswith("["):
        return parse_matrix(stripped)
    named = named_matrices()
    if stripped in named:
        return named[stripped]
    return evaluate_word(word_from_text(text))


@dataclass
class _Token:
    kind: str  # "open", "close" or "atom"
    text: str
    position: int


def _tokenize(text: str) -> List[_Token]:
    tokens: List[_Token] = []
    i, n = 0, len(text)
    while i < n:
        c = text[i]
        if c.isspace():
            i += 1
        elif c == "(":
            tokens.append(_Token("open", c, i))
            i += 1
        elif c == ")":
            tokens.append(_Token("close", c, i))
            i += 1
        else:
            start = i
            while i < n and not text[i].isspace() and text[i] not in "()":
                i += 1
            if text.startswith("cyl", start) and i < n and text[i] == "(" and i - start == 3:
                # cyl(...) is one atom; its argument may hold spaces and brackets
                depth = 0
                while i < n:
                    if text[i] == "(":
                        depth += 1
                    elif text[i] == ")":
                        depth -= 1
                        if depth == 0:
                            i += 1
                            break
                    i += 1
                else:
                    raise ParseError("unterminated cyl(", start)
            tokens.append(_Token("atom", text[start:i], start))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.index = 0

    def peek(self) -> Optional[_Token]:
        return self.tokens[self.index] if self.index < len(self.tokens) else None

    def next(self) -> _Token:
        token = self.peek()
        if token is None:
            raise ParseError("unexpected end of expression", len(self.text))
        self.index += 1
        return token

    def parse(self) -> ArrowExpr:
        expr = self.expr()
        extra = self.peek()
        if extra is not None:
            raise ParseError(f"unexpected {extra.text!r}", extra.position)
        return expr

    def expr(self) -> ArrowExpr:
        token = self.next()
        if token.kind == "atom":
            return _atom(token)
        if token.kind == "close":
            raise ParseError("unexpected ')'", token.position)
        head = self.next()
        if head.kind == "atom" and head.text == "cyl":
            return self.cyl_form(head)
        if head.kind != "atom" or head.text not in ("comp", "tens"):
            raise ParseError(f"expected comp, tens or cyl, got {head.text!r}", head.position)
        args: List[ArrowExpr] = []
        while True:
            following = self.peek()
            if following is None:
                raise ParseError("missing ')'", len(self.text))
            if following.kind == "close":
                self.index += 1
                break
            args.append(self.expr())
        if not args:
            raise ParseError(f"{head.text} needs at least one argument", head.position)
        if head.text == "tens":
            return tensor_all(args)
        try:
            return compose_all(args)
        except ArityError as exc:
            message = f"{exc} in expression at position {token.position}"
            raise ArityError(message, exc.subterm) from None

    def cyl_form(self, head: _Token) -> ArrowExpr:
        """``(cyl a^2 b^-1)``: everything up to the closing parenthesis is the argument."""
        while True:
            token = self.next()
            if token.kind == "open":
                raise ParseError("unexpected '(' inside cyl", token.position)
            if token.kind == "close":
                break
        start = head.position + len(head.text)
        return _cyl(self.text[start : token.position], start)


def _atom(token: _Token) -> ArrowExpr:
    text = token.text
    if text in _CONSTANTS:
        return _CONSTANTS[text]
    match = _ID.match(text)
    if match:
        return Id(int(match.group(1)))
    match = _TAU.match(text)
    if match:
        return Tau(int(match.group(1)), int(match.group(2)))
    if text.startswith("cyl(") and text.endswith(")"):
        return _cyl(text[4:-1], token.position + 4)
    raise ParseError(f"unknown atom {text!r}", token.position)


def _cyl(argument: str, position: int) -> Cyl:
    if not argument.strip():
        raise ParseError("cyl needs a matrix, word or name", position)
    try:
        return Cyl(parse_sl2(argument))
    except ParseError as exc:
        offset = position + (exc.position or 0)
        raise ParseError(f"bad cyl argument {argument.strip()!r}", offset) from None


def parse_expr(text: str) -> ArrowExpr:
    """Parse the parenthesized grammar into an expression with checked arities.

    Raises:
        ParseError: on a syntax error, with the character position.
        ArityError: when a composition does not type-check.
    """
    return _Parser(text).parse()


def print_expr(expr: ArrowExpr) -> str:
    """Text that :func:`parse_expr` reads back to an equal expression."""
    if isinstance(expr, Compose):
        return f"(comp {print_expr(expr.outer)} {print_expr(expr.inner)})"
    if isinstance(expr, Tensor):
        return f"(tens {print_expr(expr.left)} {print_expr(expr.right)})"
    if isinstance(expr, Id):
        return f"id:{expr.n}"
    if isinstance(expr, Tau):
        return f"tau:{expr.m},{expr.n}"
    if isinstance(expr, Cyl):
        return f"cyl({expr.matrix})"
    if isinstance(expr, Beta):
        return "beta"
    if isinstance(expr, Gamma):
        return "gamma"
    if isinstance(expr, Eta):
        return "eta"
    if isinstance(expr, Eps):
        return "eps"
    raise TypeError(f"cannot print {expr!r}")
