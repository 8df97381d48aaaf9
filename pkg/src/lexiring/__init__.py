"""Exact arithmetic for lexicographically ordered semirings.

Structures are described by a small combinator grammar, elements carry a
level part that dominates comparison and addition, and everything is
computed over arbitrary-precision rationals extended with infinity.  On
top of the scalar engine: measures on finite atom spaces, integration of
atomwise functions, depth-valued probability with exact Bayes inference,
metric trees, and weight systems on branched graphs.
"""

from .descriptors import capabilities, parse_struct
from .errors import (
    CapabilityError,
    DomainError,
    InconsistentSlicesError,
    InfiniteMassError,
    LexiringError,
    NotRepresentableError,
    NotSummableError,
    ParseError,
    ShapeError,
)
from .ops import add, cmp, divide, inv, level, mul, residue
from .values import format_value, one, parse_value, zero
from .xreal import XReal

__version__ = "0.1.0"

__all__ = [
    "parse_struct",
    "capabilities",
    "parse_value",
    "format_value",
    "zero",
    "one",
    "add",
    "mul",
    "inv",
    "divide",
    "cmp",
    "level",
    "residue",
    "XReal",
    "LexiringError",
    "ParseError",
    "ShapeError",
    "CapabilityError",
    "DomainError",
    "NotSummableError",
    "NotRepresentableError",
    "InfiniteMassError",
    "InconsistentSlicesError",
    "__version__",
]
