"""ffcount - root counts of polynomial equations over finite fields."""

__version__ = "0.1.0"
__author__ = "Julio"

from ffcount.gf import FieldCtx, FieldElement, build_field
from ffcount.parser import parse_poly, print_poly
from ffcount.poly import SparsePoly, Term

__all__ = [
    "FieldCtx",
    "FieldElement",
    "SparsePoly",
    "Term",
    "build_field",
    "parse_poly",
    "print_poly",
    "__version__",
]
