"""
Reference values for the zeros of H_n and the Gauss-Hermite weights.

Everything is computed from the orthonormal Hermite functions

    psi_n(x) = H_n(x) exp(-x^2/2) / (pi^(1/4) sqrt(2^n n!))

which share their zeros with H_n and stay bounded for every n, unlike H_n
itself which overflows binary64 near n = 300. The three-term recurrence is
run on the polynomial part h_n(x) = psi_n(x) exp(x^2/2) with a running
logarithmic scale, so the Gaussian factor is applied once at the end and
never overflows or underflows in the middle of the recurrence.

Zeros are isolated by sign changes of psi_n on a grid built from the
circle-segment estimates, then polished by Newton steps that stay inside
their bracket (bisection otherwise). All roots of one degree are iterated
together as numpy arrays.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Any, Dict, List, Sequence, Tuple

import numpy as np
from scipy.linalg import eigh_tridiagonal

from core.asymptotic import ZeroMethod, ZeroSet, approx_zero_set, disk_radius, rank_to_index
from core.errors import ConvergenceError
from core.segment_solver import SolverConfig

logger = logging.getLogger(__name__)

_PI_M_QUARTER = math.pi ** -0.25
_RESCALE_LIMIT = 1e100
# Relative step below which a Newton iterate counts as converged.
_STEP_TOL = 1e-14
# The outer bracket edges sit just outside the disk of radius sqrt(2n + 1).
_EDGE_FACTOR = 1.0 + 1e-3
_MAX_GRID_REFINEMENTS = 6


def _scaled_recurrence(n: int, x: np.ndarray) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Return (p_n, p_{n-1}, log_scale) with h_k(x) = p_k(x) * exp(log_scale)."""
    x = np.asarray(x, dtype=float)
    p_prev = np.zeros_like(x)
    p = np.full_like(x, _PI_M_QUARTER)
    log_scale = np.zeros_like(x)
    for k in range(n):
        p_next = math.sqrt(2.0 / (k + 1)) * x * p - math.sqrt(k / (k + 1)) * p_prev
        p_prev, p = p, p_next
        big = np.abs(p) > _RESCALE_LIMIT
        if big.any():
            factor = np.where(big, np.abs(p), 1.0)
            p = p / factor
            p_prev = p_prev / factor
            log_scale = log_scale + np.log(factor)
    return p, p_prev, log_scale


def hermite_functions(n: int, x) -> Tuple[np.ndarray, np.ndarray]:
    """Vectorized psi_n(x) and psi_{n-1}(x) (psi_{-1} = 0)."""
    if n < 0:
        raise ValueError(f"degree must be nonnegative, got {n}")
    x = np.asarray(x, dtype=float)
    p, p_prev, log_scale = _scaled_recurrence(n, x)
    gauss = np.exp(log_scale - 0.5 * x * x)
    return p * gauss, p_prev * gauss


@dataclass(frozen=True)
class HermitePair:
    """psi_n and psi_{n-1} evaluated at one abscissa."""

    n: int
    x: float
    psi_n: float
    psi_prev: float

    def to_dict(self) -> Dict[str, Any]:
        return {"n": self.n, "x": self.x, "psi_n": self.psi_n, "psi_prev": self.psi_prev}


def eval_hermite_function(n: int, x: float) -> HermitePair:
    """Evaluate the orthonormal Hermite functions of degree n and n - 1 at x."""
    x = float(x)
    if not math.isfinite(x):
        raise ValueError(f"x must be finite, got {x!r}")
    psi_n, psi_prev = hermite_functions(n, np.array([x]))
    return HermitePair(n=n, x=x, psi_n=float(psi_n[0]), psi_prev=float(psi_prev[0]))


@dataclass(frozen=True)
class RootRefinement:
    """Roots of psi_n polished from a set of seeds, with per-root iteration counts.

    ``roots[k]`` is the k-th smallest zero; ``iterations[k]`` counts the
    evaluations of psi_n spent on it.
    """

    n: int
    seeds: Tuple[float, ...]
    roots: Tuple[float, ...]
    iterations: Tuple[int, ...]

    @property
    def max_iterations(self) -> int:
        return max(self.iterations, default=0)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "seeds": list(self.seeds),
            "roots": list(self.roots),
            "iterations": list(self.iterations),
        }


def _sign_brackets(grid: np.ndarray, p: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    on_grid = p == 0.0
    negative = np.signbit(p)
    change = (negative[:-1] != negative[1:]) & ~on_grid[:-1] & ~on_grid[1:]
    lo = np.concatenate((grid[:-1][change], grid[on_grid]))
    hi = np.concatenate((grid[1:][change], grid[on_grid]))
    order = np.argsort(lo, kind="stable")
    return lo[order], hi[order]


def _bracket_roots(n: int, seeds: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """Find n intervals that each hold exactly one zero of psi_n."""
    edge = disk_radius(n) * _EDGE_FACTOR
    grid = np.concatenate(([-edge], 0.5 * (seeds[:-1] + seeds[1:]), [edge]))

    p, _, _ = _scaled_recurrence(n, grid)
    lo, hi = _sign_brackets(grid, p)
    if len(lo) == n:
        return lo, hi

    # Report the first seed interval without a sign change.
    negative = np.signbit(p)
    failed = np.nonzero((negative[:-1] == negative[1:]) & (p[:-1] != 0.0) & (p[1:] != 0.0))[0]
    first_bad = int(failed[0]) if len(failed) else 0

    for level in range(1, _MAX_GRID_REFINEMENTS + 1):
        logger.debug("n=%d: %d of %d zeros bracketed, refining grid (level %d)", n, len(lo), n, level)
        grid = np.sort(np.concatenate((grid, 0.5 * (grid[:-1] + grid[1:]))))
        p, _, _ = _scaled_recurrence(n, grid)
        lo, hi = _sign_brackets(grid, p)
        if len(lo) == n:
            return lo, hi

    raise ConvergenceError(
        f"could not isolate all zeros: {len(lo)} sign changes found for {n} zeros",
        n=n,
        j=rank_to_index(n, min(first_bad, n - 1)),
    )


def refine_zeros(n: int, seeds: Sequence[float], config: SolverConfig = SolverConfig()) -> RootRefinement:
    """Polish approximate zeros of H_n into exact ones.

    Seeds must be the n ascending estimates; the k-th root found is the one
    inside the k-th sign-change bracket, so pairing is by rank.

    Raises:
        ValueError: wrong number of seeds, or seeds not ascending
        ConvergenceError: a bracket could not be found, or Newton plus
            bisection did not settle within ``config.max_iter`` evaluations
    """
    if n < 0:
        raise ValueError(f"degree must be nonnegative, got {n}")
    seeds_arr = np.asarray(seeds, dtype=float)
    if seeds_arr.shape != (n,):
        raise ValueError(f"expected {n} seeds, got {seeds_arr.size}")
    if n == 0:
        return RootRefinement(n=0, seeds=(), roots=(), iterations=())
    if np.any(np.diff(seeds_arr) <= 0.0):
        raise ValueError("seeds must be strictly increasing")

    lo, hi = _bracket_roots(n, seeds_arr)
    x = np.where((seeds_arr > lo) & (seeds_arr < hi), seeds_arr, 0.5 * (lo + hi))
    lo_negative = np.signbit(_scaled_recurrence(n, lo)[0])
    active = lo < hi
    iterations = np.zeros(n, dtype=int)
    sqrt_2n = math.sqrt(2.0 * n)

    for _ in range(config.max_iter):
        if not active.any():
            break
        p, p_prev, _ = _scaled_recurrence(n, x)
        iterations[active] += 1

        hit = active & (p == 0.0)
        moving = active & ~hit
        same_as_lo = np.signbit(p) == lo_negative
        lo = np.where(moving & same_as_lo, x, lo)
        hi = np.where(moving & ~same_as_lo, x, hi)

        # psi_n' / psi_n = -x + sqrt(2n) psi_{n-1} / psi_n; the Gaussian factor cancels.
        with np.errstate(divide="ignore", invalid="ignore"):
            correction = p / (sqrt_2n * p_prev - x * p)
        tolerance = _STEP_TOL * np.maximum(1.0, np.abs(x))
        # A correction below tolerance means x already is the root, even when
        # it has just become a bracket endpoint.
        converged = np.isfinite(correction) & (np.abs(correction) <= tolerance)

        newton = x - correction
        # Closed bracket: an iterate on the root sits on an endpoint.
        inside = np.isfinite(newton) & (newton >= lo) & (newton <= hi)
        target = np.where(inside, newton, 0.5 * (lo + hi))

        settled = converged | (np.abs(target - x) <= tolerance)
        x = np.where(moving & ~converged, target, x)
        active &= ~(hit | settled)

    if active.any():
        rank = int(np.nonzero(active)[0][0])
        raise ConvergenceError(
            f"Newton iteration did not converge within {config.max_iter} steps",
            n=n,
            j=rank_to_index(n, rank),
        )

    # psi_n has exact mirror symmetry; average out the last-bit differences.
    roots = 0.5 * (x - x[::-1])
    logger.debug("n=%d: zeros refined, max iterations %d", n, int(iterations.max()))
    return RootRefinement(
        n=n,
        seeds=tuple(float(s) for s in seeds_arr),
        roots=tuple(float(r) for r in roots),
        iterations=tuple(int(i) for i in iterations),
    )


def exact_zero_set(n: int, config: SolverConfig = SolverConfig()) -> ZeroSet:
    """Zeros of H_n to full precision, seeded by the circle-segment estimates."""
    seeds = approx_zero_set(n, config).values
    refinement = refine_zeros(n, seeds, config)
    return ZeroSet(n=n, method=ZeroMethod.EXACT, values=refinement.roots)


def weights_at(n: int, nodes: Sequence[float]) -> np.ndarray:
    """Evaluate the Gauss-Hermite weight formula 1 / (n h_{n-1}(x)^2) at arbitrary nodes.

    h_{n-1} is the normalized polynomial psi_{n-1} exp(x^2/2); the factor
    exp(x^2) is carried in the logarithmic scale and never formed.
    """
    if n < 1:
        raise ValueError(f"weights need at least one node, got n={n}")
    x = np.asarray(nodes, dtype=float)
    _, p_prev, log_scale = _scaled_recurrence(n, x)
    with np.errstate(under="ignore", divide="ignore", over="ignore"):
        weights = np.exp(-2.0 * log_scale) / (n * p_prev * p_prev)
    return require_positive_weights(n, weights)


def require_positive_weights(n: int, weights: np.ndarray) -> np.ndarray:
    """Return ``weights`` unchanged, or raise ConvergenceError when one underflowed to 0 or is not finite."""
    bad = ~(np.isfinite(weights) & (weights > 0.0))
    if bad.any():
        rank = int(np.nonzero(bad)[0][0])
        raise ConvergenceError(
            f"weight {weights[rank]!r} is not a positive binary64 number (underflow for large n)",
            n=n,
            j=rank_to_index(n, rank),
        )
    return weights


def gauss_weights(n: int, nodes: ZeroSet) -> List[float]:
    """Gauss-Hermite weights for the exact zeros of H_n."""
    if nodes.method is not ZeroMethod.EXACT:
        raise ValueError(f"gauss_weights needs exact nodes, got method={nodes.method.value}")
    if nodes.n != n:
        raise ValueError(f"node set is for n={nodes.n}, not n={n}")
    return [float(w) for w in weights_at(n, nodes.values)]


def jacobi_nodes_and_weights(n: int) -> Tuple[np.ndarray, np.ndarray]:
    """Golub-Welsch: eigen-decomposition of the symmetric tridiagonal Jacobi matrix.

    The matrix has a zero diagonal and off-diagonals sqrt(k/2), k = 1 .. n-1;
    its eigenvalues are the zeros of H_n and the weights are
    sqrt(pi) times the squared first eigenvector components.
    """
    if n < 0:
        raise ValueError(f"degree must be nonnegative, got {n}")
    if n == 0:
        return np.empty(0), np.empty(0)
    if n == 1:
        return np.zeros(1), np.array([math.sqrt(math.pi)])
    off_diagonal = np.sqrt(np.arange(1, n) / 2.0)
    nodes, vectors = eigh_tridiagonal(np.zeros(n), off_diagonal)
    weights = math.sqrt(math.pi) * vectors[0, :] ** 2
    return 0.5 * (nodes - nodes[::-1]), 0.5 * (weights + weights[::-1])


def jacobi_zero_set(n: int) -> ZeroSet:
    """Zeros of H_n as eigenvalues of the Jacobi matrix (independent cross-check)."""
    nodes, _ = jacobi_nodes_and_weights(n)
    return ZeroSet(n=n, method=ZeroMethod.JACOBI, values=tuple(float(v) for v in nodes))
