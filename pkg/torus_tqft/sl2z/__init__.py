"""SL(2,Z): matrices, Dehn-twist words, conjugacy, lens parameters and named families."""

from .catalog import (
    LENS_PAIRS,
    XY_INDICES,
    check_funar_triple,
    default_funar_grid,
    funar_family,
    funar_pair,
    named_matrices,
    named_matrix,
    valid_triples,
)
from .conjugacy import (
    brute_force_conjugate,
    bundle_key,
    conjugacy_key,
    conjugacy_representative,
    is_conjugate,
    torus_bundle_homeomorphic,
)
from .lens import LensParams, lens_inseparable, lens_key, lens_params
from .matrix import D_A, D_B, E, NEG_E, S, MatSL2, j_flip, mat_inv, mat_mul, mat_pow, trace
from .words import (
    GenWord,
    decompose,
    evaluate_cf,
    evaluate_word,
    negative_cf,
    word_from_text,
    word_to_text,
)

__all__ = [
    "D_A",
    "D_B",
    "E",
    "LENS_PAIRS",
    "NEG_E",
    "S",
    "XY_INDICES",
    "GenWord",
    "LensParams",
    "MatSL2",
    "brute_force_conjugate",
    "bundle_key",
    "check_funar_triple",
    "conjugacy_key",
    "conjugacy_representative",
    "decompose",
    "default_funar_grid",
    "evaluate_cf",
    "evaluate_word",
    "funar_family",
    "funar_pair",
    "is_conjugate",
    "j_flip",
    "lens_inseparable",
    "lens_key",
    "lens_params",
    "mat_inv",
    "mat_mul",
    "mat_pow",
    "named_matrices",
    "named_matrix",
    "negative_cf",
    "torus_bundle_homeomorphic",
    "trace",
    "word_from_text",
    "word_to_text",
]
