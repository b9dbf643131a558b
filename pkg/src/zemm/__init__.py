"""Integral edge-minimizing metrics on graphs of genus at most 8."""

from .catalog import get as catalog_entry, verify_catalog
from .homology import cycle_matrix, spanning_forest
from .lattice import LatticeClass, classify
from .multigraph import Multigraph, bridges, genus, irreducible_components
from .search import GramMatrix, Status, ZemmResult, solve_all, solve_zemm, verify_zemm
from .surgery import enumerate_extensions, genus8_corpus, op_a, op_b, op_c

__version__ = "0.1.0"

__all__ = [
    "GramMatrix", "LatticeClass", "Multigraph", "Status", "ZemmResult", "bridges",
    "catalog_entry", "classify", "cycle_matrix", "enumerate_extensions", "genus",
    "genus8_corpus", "irreducible_components", "op_a", "op_b", "op_c", "solve_all",
    "solve_zemm", "spanning_forest", "verify_catalog", "verify_zemm",
]
