"""Exact scalars and matrices over Q, Q(sqrt2) and Q(zeta3)."""

from .field import (
    CYCLOTOMIC3,
    RATIONALS,
    SHIPPED_FIELDS,
    SQRT2,
    FieldDescriptor,
    FieldElement,
    field_inv,
    field_mul,
    format_scalar,
    parse_scalar,
    sqrt2_power,
    two_adic_valuation,
)
from .matrix import FieldMatrix

__all__ = [
    "CYCLOTOMIC3",
    "RATIONALS",
    "SHIPPED_FIELDS",
    "SQRT2",
    "FieldDescriptor",
    "FieldElement",
    "FieldMatrix",
    "field_inv",
    "field_mul",
    "format_scalar",
    "parse_scalar",
    "sqrt2_power",
    "two_adic_valuation",
]
