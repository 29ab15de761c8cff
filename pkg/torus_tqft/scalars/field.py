"""
Exact scalars in Q and in quadratic extensions Q(w) with w^2 = u + v*w.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from ..exceptions import FieldMismatchError, ParseError, ZeroDivisionFieldError

Rational = Union[int, Fraction]


@dataclass(frozen=True)
class FieldDescriptor:
    """A field given by its defining data.

    ``u`` and ``v`` are None for Q itself; otherwise the generator ``w`` satisfies
    ``w**2 = u + v*w`` and ``x**2 - v*x - u`` is assumed irreducible.
    """

    name: str
    u: Optional[Fraction] = None
    v: Optional[Fraction] = None
    symbol: str = "w"

    @property
    def kind(self) -> str:
        return "rational" if self.u is None else "quadratic"

    @property
    def is_rational(self) -> bool:
        return self.u is None

    def element(self, a: Rational = 0, b: Rational = 0) -> "FieldElement":
        return FieldElement(self, Fraction(a), Fraction(b))

    def zero(self) -> "FieldElement":
        return self.element(0)

    def one(self) -> "FieldElement":
        return self.element(1)

    def generator(self) -> "FieldElement":
        if self.is_rational:
            raise FieldMismatchError(f"field {self.name} has no generator")
        return self.element(0, 1)

    @classmethod
    def quadratic(
        cls, name: str, u: Rational, v: Rational, symbol: str = "w"
    ) -> "FieldDescriptor":
        return cls(name, Fraction(u), Fraction(v), symbol)


RATIONALS = FieldDescriptor("Q")
SQRT2 = FieldDescriptor.quadratic("Q(sqrt2)", 2, 0, "sqrt2")
# xi = exp(2*pi*i/3), xi^2 = -1 - xi
CYCLOTOMIC3 = FieldDescriptor.quadratic("Q(zeta3)", -1, -1, "xi")

SHIPPED_FIELDS = {d.name: d for d in (RATIONALS, SQRT2, CYCLOTOMIC3)}


@dataclass(frozen=True)
class FieldElement:
    """The value ``a + b*w`` over ``descriptor``. ``b`` is always 0 over Q."""

    descriptor: FieldDescriptor
    a: Fraction
    b: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        if not isinstance(self.a, Fraction):
            object.__setattr__(self, "a", Fraction(self.a))
        if not isinstance(self.b, Fraction):
            object.__setattr__(self, "b", Fraction(self.b))
        if self.descriptor.is_rational and self.b != 0:
            raise FieldMismatchError("rational field element with a nonzero w-part")

    # -- coercion --------------------------------------------------------

    def _coerce(self, other: object) -> Optional["FieldElement"]:
        if isinstance(other, FieldElement):
            if other.descriptor == self.descriptor:
                return other
            if other.b == 0:
                return FieldElement(self.descriptor, other.a)
            if self.b == 0 and self.descriptor.is_rational:
                return None
            raise FieldMismatchError(
                f"cannot combine {self.descriptor.name} and {other.descriptor.name}"
            )
        if isinstance(other, (int, Fraction)):
            return FieldElement(self.descriptor, Fraction(other))
        return None

    def _lift(self, other: "FieldElement") -> "FieldElement":
        # self is rational, other lives in an extension
        return FieldElement(other.descriptor, self.a)

    # -- predicates ------------------------------------------------------

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def is_rational(self) -> bool:
        return self.b == 0

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other: object) -> bool:
        if isinstance(other, FieldElement):
            if other.descriptor == self.descriptor:
                return self.a == other.a and self.b == other.b
            return self.b == 0 and other.b == 0 and self.a == other.a
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.b == 0:
            return hash(self.a)
        return hash((self.descriptor.name, self.a, self.b))

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other: object) -> "FieldElement":
        y = self._coerce(other)
        if y is None:
            if isinstance(other, FieldElement):
                return self._lift(other) + other
            return NotImplemented
        return FieldElement(self.descriptor, self.a + y.a, self.b + y.b)

    def __radd__(self, other: object) -> "FieldElement":
        return self.__add__(other)

    def __neg__(self) -> "FieldElement":
        return FieldElement(self.descriptor, -self.a, -self.b)

    def __sub__(self, other: object) -> "FieldElement":
        y = self._coerce(other)
        if y is None:
            if isinstance(other, FieldElement):
                return self._lift(other) - other
            return NotImplemented
        return FieldElement(self.descriptor, self.a - y.a, self.b - y.b)

    def __rsub__(self, other: object) -> "FieldElement":
        return (-self).__add__(other)

    def __mul__(self, other: object) -> "FieldElement":
        y = self._coerce(other)
        if y is None:
            if isinstance(other, FieldElement):
                return self._lift(other) * other
            return NotImplemented
        d = self.descriptor
        if d.is_rational:
            return FieldElement(d, self.a * y.a)
        bb = self.b * y.b
        return FieldElement(
            d,
            self.a * y.a + d.u * bb,
            self.a * y.b + self.b * y.a + d.v * bb,
        )

    def __rmul__(self, other: object) -> "FieldElement":
        return self.__mul__(other)

    def conjugate(self) -> "FieldElement":
        """Galois conjugate: w is sent to the other root v - w."""
        d = self.descriptor
        if d.is_rational:
            return self
        return FieldElement(d, self.a + self.b * d.v, -self.b)

    def norm(self) -> Fraction:
        d = self.descriptor
        if d.is_rational:
            return self.a
        return self.a * self.a + self.a * self.b * d.v - self.b * self.b * d.u

    def inv(self) -> "FieldElement":
        if self.is_zero():
            raise ZeroDivisionFieldError("inverse of zero")
        if self.descriptor.is_rational:
            return FieldElement(self.descriptor, 1 / self.a)
        n = self.norm()
        c = self.conjugate()
        return FieldElement(self.descriptor, c.a / n, c.b / n)

    def __truediv__(self, other: object) -> "FieldElement":
        y = self._coerce(other)
        if y is None:
            if isinstance(other, FieldElement):
                return self._lift(other) / other
            return NotImplemented
        return self * y.inv()

    def __rtruediv__(self, other: object) -> "FieldElement":
        y = self._coerce(other)
        if y is None:
            return NotImplemented
        return y * self.inv()

    def __pow__(self, exponent: int) -> "FieldElement":
        if exponent < 0:
            return self.inv() ** (-exponent)
        result = self.descriptor.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    # -- text ------------------------------------------------------------

    def __str__(self) -> str:
        return format_scalar(self)

    def __repr__(self) -> str:
        return f"FieldElement({self.descriptor.name}, {format_scalar(self)})"


def field_mul(x: FieldElement, y: FieldElement) -> FieldElement:
    """Product of two elements over the same field."""
    if x.descriptor != y.descriptor:
        raise FieldMismatchError(f"{x.descriptor.name} vs {y.descriptor.name}")
    return x * y


def field_inv(x: FieldElement) -> FieldElement:
    return x.inv()


def sqrt2_power(m: int) -> FieldElement:
    """Exact 2^(m/2) in Q(sqrt2), stored as 2^floor(m/2) * sqrt2^(m mod 2)."""
    whole = Fraction(2) ** (m // 2)
    if m % 2:
        return SQRT2.element(0, whole)
    return SQRT2.element(whole)


def two_adic_valuation(x: Union[FieldElement, Rational]) -> int:
    """Exponent of 2 in a nonzero rational."""
    if isinstance(x, FieldElement):
        if not x.is_rational():
            raise FieldMismatchError("2-adic valuation needs a rational value")
        x = x.a
    x = Fraction(x)
    if x == 0:
        raise ZeroDivisionFieldError("2-adic valuation of zero")
    num, den = x.numerator, x.denominator
    val = 0
    while num % 2 == 0:
        num //= 2
        val += 1
    while den % 2 == 0:
        den //= 2
        val -= 1
    return val


def format_scalar(x: FieldElement) -> str:
    """Textual form: ``p/q`` for rationals, ``p/q + r/s*w`` otherwise."""
    sym = x.descriptor.symbol
    if x.b == 0:
        return str(x.a)
    b_text = f"{abs(x.b)}*{sym}" if abs(x.b) != 1 else sym
    if x.a == 0:
        return f"-{b_text}" if x.b < 0 else b_text
    sign = "-" if x.b < 0 else "+"
    return f"{x.a} {sign} {b_text}"


def parse_scalar(text: str, descriptor: FieldDescriptor) -> FieldElement:
    """Inverse of :func:`format_scalar`; also accepts ``1 + -3*w`` and bare integers."""
    s = str(text).replace(" ", "")
    if not s:
        raise ParseError("empty scalar")
    sym = descriptor.symbol
    # the generic generator name is accepted for every quadratic field
    if sym not in s and "w" in s and not descriptor.is_rational:
        sym = "w"
    try:
        if sym not in s:
            return descriptor.element(Fraction(s))
        if descriptor.is_rational:
            raise ParseError(f"'{sym}' not allowed over {descriptor.name}", s.index(sym))
        if not s.endswith(sym) or s.count(sym) != 1:
            raise ParseError(f"malformed scalar {text!r}", s.index(sym))
        body = s[: -len(sym)]
        if body.endswith("*"):
            body = body[:-1]
        split = None
        for i in range(1, len(body)):
            if body[i] in "+-" and body[i - 1] not in "+-/":
                split = i
                break
        a_text, b_text = ("", body) if split is None else (body[:split], body[split:])
        if b_text.startswith("+"):
            b_text = b_text[1:]
        if b_text in ("", "+"):
            b = Fraction(1)
        elif b_text == "-":
            b = Fraction(-1)
        else:
            b = Fraction(b_text)
        a = Fraction(a_text) if a_text else Fraction(0)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"malformed scalar {text!r}") from None
    return descriptor.element(a, b)
