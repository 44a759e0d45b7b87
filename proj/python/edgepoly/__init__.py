"""Ehrhart series and polynomials of edge polytopes.

Thin re-export of the compiled extension. Graphs are passed as text: one
edge per line, two whitespace-separated vertex labels, '#' comments.
"""

from fractions import Fraction

from ._core import (
    ResourceLimitError,
    count_lattice_points_lp,
    count_lattice_points_monoid,
    dimension,
    edge_ring_series,
    ehrhart_series,
    exceptional_pairs,
    generators,
    groebner_basis,
    hstar_vector,
    lattice_points,
    odd_cycle_condition,
    validate,
)
from ._core import ehrhart_polynomial as _ehrhart_polynomial_strings


def ehrhart_polynomial(graph, order="lex"):
    """Coefficients of the counting polynomial as Fractions, constant first."""
    return [Fraction(c) for c in _ehrhart_polynomial_strings(graph, order)]


def load(path):
    """Read a graph description file and return its text."""
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


__all__ = [
    "ResourceLimitError",
    "count_lattice_points_lp",
    "count_lattice_points_monoid",
    "dimension",
    "edge_ring_series",
    "ehrhart_polynomial",
    "ehrhart_series",
    "exceptional_pairs",
    "generators",
    "groebner_basis",
    "hstar_vector",
    "lattice_points",
    "load",
    "odd_cycle_condition",
    "validate",
]
