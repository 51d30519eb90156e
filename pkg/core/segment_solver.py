"""
Inversion of the circular-segment area equation  theta + sin(theta) = M.

The left-hand side is the area of the symmetric band of a disk between
x = -r sin(theta/2) and x = +r sin(theta/2), divided by r^2. It increases
monotonically from 0 to pi on [0, pi], so every M in [0, pi] has exactly one
preimage. The derivative 1 + cos(theta) vanishes at theta = pi, where the
inverse behaves like a cube root; plain Newton stalls there, so the solver
keeps a bisection bracket around every Newton step.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass

from core.errors import ConvergenceError

logger = logging.getLogger(__name__)

# Slack allowed on theta when evaluating the forward map.
THETA_SLACK = 1e-12

# Above this area the cube-root expansion is a better starting point than M/2.
_CUBE_ROOT_SWITCH = 3.0


@dataclass(frozen=True)
class SolverConfig:
    """Tolerances for every iterative routine in the repository.

    Attributes:
        abs_tol: residual tolerance |theta + sin(theta) - M| accepted by the solver
        max_iter: maximum number of iterations before giving up
    """

    abs_tol: float = 1e-14
    max_iter: int = 64

    def __post_init__(self):
        if not (self.abs_tol > 0.0) or not math.isfinite(self.abs_tol):
            raise ValueError("abs_tol must be a positive finite number")
        if isinstance(self.max_iter, bool) or int(self.max_iter) != self.max_iter or self.max_iter < 1:
            raise ValueError("max_iter must be a positive integer")


@dataclass(frozen=True)
class SegmentSolution:
    """Result of one inversion: the angle plus how it was reached."""

    M: float
    theta: float
    residual: float
    iterations: int

    def to_dict(self):
        return {
            "M": self.M,
            "theta": self.theta,
            "residual": self.residual,
            "iterations": self.iterations,
        }


def segment_area(theta: float) -> float:
    """Return theta + sin(theta) for theta in [0, pi]."""
    theta = float(theta)
    if not (-THETA_SLACK <= theta <= math.pi + THETA_SLACK):
        raise ValueError(f"theta must lie in [0, pi], got {theta!r}")
    return theta + math.sin(theta)


def _initial_guess(M: float) -> float:
    if M <= _CUBE_ROOT_SWITCH:
        return 0.5 * M
    # theta + sin(theta) = pi - eps^3/6 + O(eps^5) with eps = pi - theta
    return math.pi - (6.0 * (math.pi - M)) ** (1.0 / 3.0)


def solve_segment(M: float, config: SolverConfig = SolverConfig()) -> SegmentSolution:
    """Solve theta + sin(theta) = M on [0, pi] by Newton inside a bisection bracket.

    Termination is on the residual, never on the step size.

    Raises:
        ValueError: M is not a finite number in [0, pi]
        ConvergenceError: the residual was not met within ``config.max_iter``
    """
    M = float(M)
    if not (0.0 <= M <= math.pi):
        raise ValueError(f"M must lie in [0, pi], got {M!r}")

    if M == 0.0:
        return SegmentSolution(M=M, theta=0.0, residual=0.0, iterations=0)
    if M == math.pi:
        return SegmentSolution(M=M, theta=math.pi, residual=abs(segment_area(math.pi) - M), iterations=0)

    lo, hi = 0.0, math.pi
    theta = min(max(_initial_guess(M), lo), hi)

    for iteration in range(1, config.max_iter + 1):
        f = theta + math.sin(theta) - M
        if abs(f) <= config.abs_tol:
            return SegmentSolution(M=M, theta=theta, residual=abs(f), iterations=iteration)

        if f < 0.0:
            lo = theta
        else:
            hi = theta

        slope = 1.0 + math.cos(theta)
        candidate = theta - f / slope if slope > 0.0 else math.nan
        if not (lo < candidate < hi):
            candidate = 0.5 * (lo + hi)
            logger.debug("bisection fallback at M=%r, bracket=[%r, %r]", M, lo, hi)
        theta = candidate

    residual = abs(theta + math.sin(theta) - M)
    if residual <= config.abs_tol:
        return SegmentSolution(M=M, theta=theta, residual=residual, iterations=config.max_iter)
    raise ConvergenceError(
        f"segment equation did not converge for M={M!r}: residual {residual:.3e} after {config.max_iter} iterations"
    )


def invert_segment_area(M: float, config: SolverConfig = SolverConfig()) -> float:
    """Return the unique theta in [0, pi] with theta + sin(theta) = M."""
    return solve_segment(M, config).theta
