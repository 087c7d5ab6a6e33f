"""Delta-matroids of ribbon graphs: operations, polynomials and property suites."""

from .dm import (
    DeltaMatroid,
    check_symmetric_exchange,
    contract,
    delete,
    dual,
    element_class,
    is_connected,
    is_even,
    is_matroid,
    lower_matroid,
    minor,
    plus,
    rho,
    spread,
    toggle,
    twist,
    upper_matroid,
    width,
)
from .formats import format_dm, format_rg, parse_dm, parse_rg, read_dm, read_rg
from .laurent import LaurentPoly
from .polynomials import bollobas_riordan, br_two_var, krushkal, las_vergnas, polynomial, tutte
from .rep import Gf2Matrix, dm_from_matrix, interlacement_matrix, is_binary
from .ribbon import RibbonGraph, build, delta_matroid, single_vertex
from .search import find_isomorphism, find_minor, has_minor, is_twist_of_matroid
from .suites import run_suite

__version__ = "0.1.0"
