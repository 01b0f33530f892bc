"""Universal graphs W(s, t) for s-wide colorings, their maps into Kneser graphs,
generalized Mycielskians, and exact (fractional, multi-) chromatic numbers."""

from .errors import BudgetExhausted, CapExceeded, ConstructionError, ParseError
from .graph import Graph, Status, complete_graph, cycle_graph, kneser_graph, odd_girth
from .universal import Coloring, build_Omega, build_W, canonical_coloring, is_s_wide, iso_g
from .homomorphism import VertexMap, compose, theorem_hom_f, verify_homomorphism
from .mycielski import mycielskian, tardif_fractional_step
from .search import search_homomorphism
from .chromatic import chromatic_number, fractional_chromatic, multichromatic_number

__version__ = "0.1.0"
