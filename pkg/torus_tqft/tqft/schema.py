"""
JSON files describing a TQFT datum.

Example::

    {"name": "F3", "field": {"kind": "rational"}, "n": 3,
     "rho_a": [["1/2", 2, 1], ...], "rho_b": [...],
     "beta": [2, 4, 1, ...], "gamma": ["2/9", ...], "eta": [4, 1, 0]}
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import List, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, ValidationError as SchemaError

from ..exceptions import ParseError
from ..scalars import (
    RATIONALS,
    SHIPPED_FIELDS,
    FieldDescriptor,
    FieldMatrix,
    format_scalar,
    parse_scalar,
)
from .datum import TqftDatum

Scalar = Union[int, str]


class FieldSpec(BaseModel):
    model_config = ConfigDict(extra="forbid")

    kind: Literal["rational", "quadratic"]
    u: Optional[Scalar] = None
    v: Optional[Scalar] = None
    symbol: Optional[str] = None
    name: Optional[str] = None


class DatumPayload(BaseModel):
    model_config = ConfigDict(extra="forbid")

    name: str
    field: FieldSpec
    n: int
    rho_a: List[List[Scalar]]
    rho_b: List[List[Scalar]]
    beta: List[Scalar]
    gamma: List[Scalar]
    eta: Optional[List[Scalar]] = None
    eps: Optional[List[Scalar]] = None


def _descriptor(spec: FieldSpec) -> FieldDescriptor:
    if spec.kind == "rational":
        return RATIONALS
    if spec.u is None or spec.v is None:
        raise ParseError("quadratic field needs u and v")
    try:
        u, v = Fraction(spec.u), Fraction(spec.v)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"bad field data u={spec.u!r} v={spec.v!r}") from None
    symbol = spec.symbol
    for shipped in SHIPPED_FIELDS.values():
        if shipped.u == u and shipped.v == v:
            if symbol in (None, shipped.symbol):
                return shipped
            return FieldDescriptor.quadratic(shipped.name, u, v, symbol)
    name = spec.name or f"Q[w]/(w^2-({v})w-({u}))"
    return FieldDescriptor.quadratic(name, u, v, symbol or "w")


def _scalar(x: Scalar, field: FieldDescriptor):
    return field.element(x) if isinstance(x, int) else parse_scalar(x, field)


def _scalar_out(x) -> Scalar:
    if x.b == 0 and x.a.denominator == 1:
        return int(x.a)
    return format_scalar(x)


def datum_from_payload(payload: DatumPayload) -> TqftDatum:
    f = _descriptor(payload.field)

    def matrix(rows: List[List[Scalar]]) -> FieldMatrix:
        return FieldMatrix.from_rows(f, [[_scalar(x, f) for x in row] for row in rows])

    def row(values: List[Scalar]) -> FieldMatrix:
        return FieldMatrix.row(f, [_scalar(x, f) for x in values])

    def column(values: List[Scalar]) -> FieldMatrix:
        return FieldMatrix.column(f, [_scalar(x, f) for x in values])

    return TqftDatum(
        name=payload.name,
        field=f,
        n=payload.n,
        rho_a=matrix(payload.rho_a),
        rho_b=matrix(payload.rho_b),
        beta=row(payload.beta),
        gamma=column(payload.gamma),
        eta=column(payload.eta) if payload.eta is not None else None,
        eps=row(payload.eps) if payload.eps is not None else None,
    )


def parse_datum(text: str) -> TqftDatum:
    """Datum from JSON text. The result is not validated.

    Raises:
        ParseError: on malformed JSON, schema violations or bad scalars.
        ValueError: when the dimension is not positive.
    """
    try:
        payload = DatumPayload.model_validate_json(text)
    except SchemaError as exc:
        raise ParseError(f"invalid datum file: {exc.errors()[0]['msg']}") from None
    if payload.n < 1:
        raise ValueError(f"dimension n must be at least 1, got {payload.n}")
    try:
        return datum_from_payload(payload)
    except ValueError as exc:
        raise ParseError(f"invalid datum file: {exc}") from None


def load_datum(path: Union[str, Path]) -> TqftDatum:
    return parse_datum(Path(path).read_text(encoding="utf-8"))


def datum_payload(d: TqftDatum) -> DatumPayload:
    f = d.field
    if f.is_rational:
        spec = FieldSpec(kind="rational")
    else:
        spec = FieldSpec(kind="quadratic", u=str(f.u), v=str(f.v), symbol=f.symbol, name=f.name)
    return DatumPayload(
        name=d.name,
        field=spec,
        n=d.n,
        rho_a=[[_scalar_out(x) for x in row] for row in d.rho_a.entries],
        rho_b=[[_scalar_out(x) for x in row] for row in d.rho_b.entries],
        beta=[_scalar_out(x) for x in d.beta.flat()],
        gamma=[_scalar_out(x) for x in d.gamma.flat()],
        eta=[_scalar_out(x) for x in d.eta.flat()] if d.eta is not None else None,
        eps=[_scalar_out(x) for x in d.eps.flat()] if d.eps is not None else None,
    )


def dump_datum(d: TqftDatum) -> str:
    return json.dumps(datum_payload(d).model_dump(exclude_none=True), indent=2)
