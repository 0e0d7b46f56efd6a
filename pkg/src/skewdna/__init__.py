"""Skew cyclic codes over F16 + uF16 + vF16 + uvF16 and reversible DNA 8-mer codes."""

from .code import SkewCyclicCode, contains, encode, make_code, min_distance, params
from .dna import codeword_to_dna, phi_dna, rho, verify_reversible
from .r16 import R16Elem, gray, theta
from .search import search_divisors
from .skewpoly import SkewPoly, from_text, sp_mul, sp_right_divmod, to_text

__all__ = [
    "R16Elem",
    "SkewCyclicCode",
    "SkewPoly",
    "codeword_to_dna",
    "contains",
    "encode",
    "from_text",
    "gray",
    "make_code",
    "min_distance",
    "params",
    "phi_dna",
    "rho",
    "search_divisors",
    "sp_mul",
    "sp_right_divmod",
    "theta",
    "to_text",
    "verify_reversible",
]
