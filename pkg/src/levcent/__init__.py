"""Exact leverage centrality on undirected graphs."""

from .centrality import (DegreeProfile, LeverageReport, degree_centrality, leverage_all,
                         leverage_of_profile, leverage_values, leverage_vertex,
                         realize_profile, vertex_profile)
from .exactq import Rational, rat, to_decimal_string, to_text
from .graph import Graph, cartesian_product, iterated_product, path_power

__all__ = [
    "DegreeProfile", "Graph", "LeverageReport", "Rational", "cartesian_product",
    "degree_centrality", "iterated_product", "leverage_all", "leverage_of_profile",
    "leverage_values", "leverage_vertex", "path_power", "rat", "realize_profile",
    "to_decimal_string", "to_text", "vertex_profile",
]
