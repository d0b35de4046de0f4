"""A_alpha spectral radius tools for path-factor questions on graphs.

The package pairs exact rational algebra (polynomials with Fraction
coefficients, Sturm root isolation) with numpy eigensolvers, and uses the two
routes to cross-check each other.
"""

from .algebra import MultiPoly, char_poly, identity_equal
from .factor import (CapacityError, FactorCertificate, FactorOutcome, KanoReport, brute_force_factor_oracle,
                     has_p345_factor, has_pge3_factor, kano_condition, p_ge3_equivalence)
from .formats import ParseError, encode_graph6, parse_builder, parse_edge_list, parse_graph6, read_graph
from .graph import FamilySpec, Graph, exception_graph, extremal_g1
from .roots import RootBracket, largest_real_root
from .spectral import (ConsistencyError, ConvergenceError, SymmetricMatrix, a_alpha_matrix, interlace_check,
                       lambda_alpha, quotient_matrix, spectral_radius, threshold, threshold_result)

__version__ = "0.1.0"

__all__ = [
    "MultiPoly", "char_poly", "identity_equal",
    "CapacityError", "FactorCertificate", "FactorOutcome", "KanoReport", "brute_force_factor_oracle",
    "has_p345_factor", "has_pge3_factor", "kano_condition", "p_ge3_equivalence",
    "ParseError", "encode_graph6", "parse_builder", "parse_edge_list", "parse_graph6", "read_graph",
    "FamilySpec", "Graph", "exception_graph", "extremal_g1",
    "RootBracket", "largest_real_root",
    "ConsistencyError", "ConvergenceError", "SymmetricMatrix", "a_alpha_matrix", "interlace_check",
    "lambda_alpha", "quotient_matrix", "spectral_radius", "threshold", "threshold_result",
]
