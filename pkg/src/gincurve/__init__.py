"""Generic initial ideals of space curves: Borel-fixed monomial ideals, their
f-tables and invariants, and the admissibility rules a curve's gin must obey."""

from .fileformat import format_ideal, parse_ideal, read_ideal
from .ftable import INF, FTable, f_table, render_diagram
from .generic import GinReport, gin
from .groebner import buchberger, initial_ideal
from .ideals import MonomialIdeal
from .invariants import check_connected, check_gruson_peskine, invariant_table
from .polynomials import Polynomial, PolynomialIdeal, Ring
from .rules import admissibility, ek_syzygies, sporadic_zeros

__version__ = "0.1.0"

__all__ = [
    "INF", "FTable", "GinReport", "MonomialIdeal", "Polynomial", "PolynomialIdeal", "Ring",
    "admissibility", "buchberger", "check_connected", "check_gruson_peskine", "ek_syzygies",
    "f_table", "format_ideal", "gin", "initial_ideal", "invariant_table", "parse_ideal",
    "read_ideal", "render_diagram", "sporadic_zeros",
]
