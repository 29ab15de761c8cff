"""
torus_tqft - Exact arithmetic for TQFTs on thickened and solid tori
"""
from dotenv import load_dotenv
load_dotenv()

__version__ = "0.1.0"
__author__ = "torus-tqft contributors"
__license__ = "MIT"

from torus_tqft.cobcat import ArrowExpr, NormalForm, arrows_equal, normalize
from torus_tqft.scalars import FieldElement, FieldMatrix
from torus_tqft.sl2z import MatSL2, decompose, is_conjugate
from torus_tqft.tqft import TqftDatum, builtin, bundle_invariant, lens_invariant, validate

__all__ = [
    "ArrowExpr",
    "FieldElement",
    "FieldMatrix",
    "MatSL2",
    "NormalForm",
    "TqftDatum",
    "arrows_equal",
    "builtin",
    "bundle_invariant",
    "decompose",
    "is_conjugate",
    "lens_invariant",
    "normalize",
    "validate",
]
