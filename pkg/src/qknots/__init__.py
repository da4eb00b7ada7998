"""Knot invariants from braids: the bracket polynomial and Jones polynomial,
colored brackets through Temperley-Lieb recoupling, the Fibonacci model, and
simulated quantum estimators."""

from .braids import BraidParseError, BraidWord, Closure, format_braid, parse_braid
from .bracket import (
    SizeCapError,
    bracket_state_sum,
    bracket_tl,
    colored_bracket_bruteforce,
    jones_polynomial,
    normalized_invariant,
)
from .fibmodel import FIB, FibConstants, fib_braid_rep
from .qsim import (
    RegimeError,
    bracket_via_trace,
    colored_bracket_plat,
    hadamard_test,
    three_strand_rep,
    wrt_invariant,
)
from .recoupling import AdmissibilityError, RecouplingContext
from .scalars import LaurentPoly, Quaternion, RationalFn

__version__ = "0.1.0"

__all__ = [
    "AdmissibilityError", "BraidParseError", "BraidWord", "Closure", "FIB", "FibConstants",
    "LaurentPoly", "Quaternion", "RationalFn", "RecouplingContext", "RegimeError", "SizeCapError",
    "bracket_state_sum", "bracket_tl", "bracket_via_trace", "colored_bracket_bruteforce",
    "colored_bracket_plat", "fib_braid_rep", "format_braid", "hadamard_test", "jones_polynomial",
    "normalized_invariant", "parse_braid", "three_strand_rep", "wrt_invariant",
]
