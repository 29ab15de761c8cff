"""Arrow expressions in the torus categories, normal forms and decidable equality."""

from .expr import (
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
    compose_expr,
    cyl,
    depth,
    tensor_all,
    tensor_expr,
    uses_unit,
)
from .factors import ARITY, CLOSED_KINDS, Factor, canonical_factor, factor_key
from .normal_form import (
    NormalForm,
    Perm,
    PlacedFactor,
    arrows_equal,
    canonical_form,
    expressions_equal,
    factors_of,
    identity_form,
    normalize,
)
from .witnesses import RelationWitness, relation_witnesses

__all__ = [
    "ARITY",
    "BETA",
    "CLOSED_KINDS",
    "EPS",
    "ETA",
    "GAMMA",
    "ArrowExpr",
    "Beta",
    "Compose",
    "Cyl",
    "Eps",
    "Eta",
    "Factor",
    "Gamma",
    "Id",
    "NormalForm",
    "Perm",
    "PlacedFactor",
    "RelationWitness",
    "Tau",
    "Tensor",
    "arrows_equal",
    "canonical_factor",
    "canonical_form",
    "compose_all",
    "compose_expr",
    "cyl",
    "depth",
    "expressions_equal",
    "factor_key",
    "factors_of",
    "identity_form",
    "normalize",
    "relation_witnesses",
    "tensor_all",
    "tensor_expr",
    "uses_unit",
]
