"""
Core numerics for the zeros of the Hermite polynomials.

- segment_solver: inversion of theta + sin(theta) = M
- asymptotic: circle-segment estimates of the zeros and the spin-disk partition
- hermite_oracle: exact zeros, Hermite functions and Gauss-Hermite weights
"""

from .errors import ConvergenceError
from .segment_solver import SolverConfig, SegmentSolution, segment_area, solve_segment, invert_segment_area
from .asymptotic import (
    ZeroEstimate,
    ZeroMethod,
    ZeroSet,
    SpinDomain,
    area_fraction,
    approx_positive_zero,
    approx_zero_set,
    spin_domain,
)
from .hermite_oracle import (
    HermitePair,
    RootRefinement,
    eval_hermite_function,
    exact_zero_set,
    gauss_weights,
    jacobi_zero_set,
    refine_zeros,
)

__all__ = [
    'ConvergenceError',
    'SolverConfig', 'SegmentSolution', 'segment_area', 'solve_segment', 'invert_segment_area',
    'ZeroEstimate', 'ZeroMethod', 'ZeroSet', 'SpinDomain',
    'area_fraction', 'approx_positive_zero', 'approx_zero_set', 'spin_domain',
    'HermitePair', 'RootRefinement', 'eval_hermite_function', 'exact_zero_set',
    'gauss_weights', 'jacobi_zero_set', 'refine_zeros',
]
