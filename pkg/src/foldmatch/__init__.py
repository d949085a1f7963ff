"""Cluster expansion formulas from modified snake graphs for folded polygon types.

Diagonals of a polygon carry snake graphs whose perfect matchings expand
type-A cluster variables; half-turn orbits of a symmetric polygon carry
modified snake graphs (hexagon tiles, duplicated labels, an extra arc edge)
whose matchings expand the type-B and type-C cluster variables.  An
independent seed-mutation oracle over exact Laurent polynomials certifies the
expansion theorems by exhaustive comparison at small rank.
"""

from .errors import FoldmatchError
from .geometry import (
    PolygonConfig,
    Triangulation,
    full_polygon,
    restricted_polygon,
    plain_triangulation,
    theta_invariant_triangulation,
    theta_invariant_triangulations,
    plain_triangulations,
    all_orbits,
    orbit_of,
    restrict,
    restrict_orbit,
    rotated_restrict_orbit,
    flip_orbit,
)
from .polynomials import LaurentPolynomial, Polynomial
from .snake import (
    build_snake_graph,
    crossing_sequence,
    enumerate_matchings,
    f_and_g,
    f_polynomial,
    g_vector,
    minimal_matching,
    skein_check,
)
from .folded import (
    build_g_ab,
    build_g_ab_b,
    build_g_ab_c,
    build_hat_b,
    build_hat_c,
    f_b_formula,
    f_c_formula,
    g_c_formula,
    f_polynomial_modified,
    g_vector_modified,
    graph_f_and_g,
)
from .oracle import (
    explore,
    fold_exchange_matrix,
    oracle_f_and_g_a,
    signed_adjacency,
    verify_theorems,
)

__version__ = "0.1.0"

__all__ = [
    "FoldmatchError",
    "PolygonConfig",
    "Triangulation",
    "full_polygon",
    "restricted_polygon",
    "plain_triangulation",
    "theta_invariant_triangulation",
    "theta_invariant_triangulations",
    "plain_triangulations",
    "all_orbits",
    "orbit_of",
    "restrict",
    "restrict_orbit",
    "rotated_restrict_orbit",
    "flip_orbit",
    "LaurentPolynomial",
    "Polynomial",
    "build_snake_graph",
    "crossing_sequence",
    "enumerate_matchings",
    "f_and_g",
    "f_polynomial",
    "g_vector",
    "minimal_matching",
    "skein_check",
    "build_g_ab",
    "build_g_ab_b",
    "build_g_ab_c",
    "build_hat_b",
    "build_hat_c",
    "f_b_formula",
    "f_c_formula",
    "g_c_formula",
    "f_polynomial_modified",
    "g_vector_modified",
    "graph_f_and_g",
    "explore",
    "fold_exchange_matrix",
    "oracle_f_and_g_a",
    "signed_adjacency",
    "verify_theorems",
    "__version__",
]
