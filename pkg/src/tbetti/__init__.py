"""Betti numbers of real toric manifolds over graph associahedra and cubeahedra."""
from .graphs import Graph, parse_edge_list, parse_graph6, encode_graph6, family
from .invariants import a_number, b_number, a_table, b_table
from .betti import betti_assoc, betti_cube
from .toric import betti_via_homology

__all__ = [
    "Graph", "parse_edge_list", "parse_graph6", "encode_graph6", "family",
    "a_number", "b_number", "a_table", "b_table", "betti_assoc", "betti_cube",
    "betti_via_homology",
]
