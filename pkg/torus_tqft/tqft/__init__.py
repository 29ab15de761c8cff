"""TQFT data, validation, evaluation and the bundle/lens invariants."""

from .builtins import TqftRegistry, builtin, tqft_registry
from .datum import CheckResult, TqftDatum, ValidationReport, seal, validate
from .evaluation import eval_arrow, evaluate, rho, rho_word
from .invariants import (
    bundle_contraction,
    bundle_invariant,
    f1_bracket,
    funar_trace_closed_form,
    lens_contraction,
    lens_invariant,
)
from .schema import DatumPayload, dump_datum, load_datum, parse_datum

__all__ = [
    "CheckResult",
    "DatumPayload",
    "TqftDatum",
    "TqftRegistry",
    "ValidationReport",
    "builtin",
    "bundle_contraction",
    "bundle_invariant",
    "dump_datum",
    "eval_arrow",
    "evaluate",
    "f1_bracket",
    "funar_trace_closed_form",
    "lens_contraction",
    "lens_invariant",
    "load_datum",
    "parse_datum",
    "rho",
    "rho_word",
    "seal",
    "tqft_registry",
    "validate",
]
