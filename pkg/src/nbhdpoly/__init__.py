"""Neighborhood polynomials of simple graphs.

Three independent routes compute ``N(G, x)``: brute-force enumeration of the
neighborhood complex, min-degree vertex peeling, and closed-form rules for
graph operations. The domination polynomial follows from the complement.
"""

from .decomposition import (
    TheoremMode,
    cartesian_poly,
    cut_vertex_split_poly,
    disjoint_union_poly,
    edge_addition_general,
    edge_addition_restricted,
    independent_cut_split_poly,
    join_poly,
    matching_cut_poly,
    vertex_attachment_poly,
)
from .domination import domination_oracle, domination_polynomial, domination_via_complement
from .errors import (
    CostGuardExceeded,
    GraphError,
    LimitExceeded,
    NbhdError,
    OracleLimitExceeded,
    PreconditionError,
)
from .generators import generate
from .graph import Graph, complement, from_edge_list
from .oracle import complex_enumerate, is_in_complex, neighborhood_polynomial_oracle
from .polynomial import Polynomial, binomial_power
from .reduction import estimate_cost, neighborhood_polynomial_reduction, removal_correction
from .solve import Limits, neighborhood_polynomial, solve

__version__ = "0.1.0"
