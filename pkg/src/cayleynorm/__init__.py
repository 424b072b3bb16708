"""Cayley graphs of the symmetric group generated by transpositions.

Build Cay(S_n, T), compute its full automorphism group by searching the
stabilizer of the identity vertex, and decide whether the graph is normal.
"""

from .cayley import CayleyGraph, build
from .graphcore import Graph
from .permcore import Permutation, Transposition, compose, inverse, rank, unrank
from .symmetry import Method, aut_order, is_normal, verify_direct_product
from .transgraph import TranspositionSet, classify, generates_sn, graph_of

__all__ = [
    "CayleyGraph",
    "Graph",
    "Method",
    "Permutation",
    "Transposition",
    "TranspositionSet",
    "aut_order",
    "build",
    "classify",
    "compose",
    "generates_sn",
    "graph_of",
    "inverse",
    "is_normal",
    "rank",
    "unrank",
    "verify_direct_product",
]

__version__ = "0.1.0"
