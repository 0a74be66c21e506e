"""Exact metric dimension and fractional metric dimension of small graphs."""
from .drg import IntersectionNumbers, drg_fracdim, is_distance_regular, pii_sum
from .errors import FracdimError
from .graph import DistanceMatrix, Graph, cartesian_product, distance_matrix, is_connected
from .ratlp import CoveringLP, LPSolution, fracdim, format_rational
from .resolve import ResolutionSystem, metric_dimension, r_min, resolution_system
from .symmetry import automorphism_orbits, is_vertex_transitive, vt_fracdim

__all__ = [
    "CoveringLP",
    "DistanceMatrix",
    "FracdimError",
    "Graph",
    "IntersectionNumbers",
    "LPSolution",
    "ResolutionSystem",
    "automorphism_orbits",
    "cartesian_product",
    "distance_matrix",
    "drg_fracdim",
    "format_rational",
    "fracdim",
    "is_connected",
    "is_distance_regular",
    "is_vertex_transitive",
    "metric_dimension",
    "pii_sum",
    "r_min",
    "resolution_system",
    "vt_fracdim",
]
