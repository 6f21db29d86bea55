"""q-analogues of h-polynomials for nestohedra, graph associahedra and braid-fan coarsenings."""

from .btrees import BTree, enumerate_btrees, f_vector, h_polynomial, tree_stats
from .buildsets import BuildingSet, family, restrict, validate
from .combinat import Poset, euler_mahonian, perm_stats, qh_from_posets
from .graphs import Graph, h_graph
from .polyring import Polynomial, format_poly

__all__ = [
    "BTree", "BuildingSet", "Graph", "Polynomial", "Poset",
    "enumerate_btrees", "euler_mahonian", "f_vector", "family", "format_poly",
    "h_graph", "h_polynomial", "perm_stats", "qh_from_posets", "restrict",
    "tree_stats", "validate",
]
__version__ = "0.1.0"
