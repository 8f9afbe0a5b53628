"""Exact carries Markov chain, Eulerian polynomials and the Phi_b operator."""

from .carries import (CarriesMatrix, carries_matrix_from_counts, carries_matrix_holte,
                      carries_stationary, r_step_transition)
from .combinatorics import (EulerianTable, digit_sum_count, digit_sum_count_by_powering,
                            eulerian_numbers, eulerian_polynomial)
from .errors import ConsistencyError, DomainError, ShapeError
from .exact import (ZERO_DEGREE, Polynomial, RatMatrix, binomial, format_rational, mat_mul,
                    mat_pow, parse_rational)
from .phib import (ClassAFunction, SeriesPrefix, convergence_trace, phi_b_iterate,
                   phi_b_limit, phi_b_matrix, phi_b_oracle, taylor_prefix)
from .simulator import (BACKEND, CarrySequence, SimulationConfig, empirical_transition,
                        occupation_distribution, simulate)
from .veronese import (HilbertFunction, VeroneseMatrix, carries_submatrix_check,
                       veronese_matrix, veronese_transform)

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "CarriesMatrix", "CarrySequence", "ClassAFunction", "ConsistencyError",
    "DomainError", "EulerianTable", "HilbertFunction", "Polynomial", "RatMatrix",
    "SeriesPrefix", "ShapeError", "SimulationConfig", "VeroneseMatrix", "ZERO_DEGREE",
    "binomial", "carries_matrix_from_counts", "carries_matrix_holte", "carries_stationary",
    "carries_submatrix_check", "convergence_trace", "digit_sum_count",
    "digit_sum_count_by_powering", "empirical_transition", "eulerian_numbers",
    "eulerian_polynomial", "format_rational", "mat_mul", "mat_pow", "occupation_distribution",
    "parse_rational", "phi_b_iterate", "phi_b_limit", "phi_b_matrix", "phi_b_oracle",
    "r_step_transition", "simulate", "taylor_prefix", "veronese_matrix", "veronese_transform",
]
