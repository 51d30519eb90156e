"""
Gauss-Hermite rules for integrals of the form  integral f(x) exp(-x^2) dx.

A rule can take its nodes from three sources:

- exact_nodes:      Newton-polished zeros of H_n with the standard weights
- asymptotic_nodes: the circle-segment estimates, weighted with the same
                    formula evaluated at the estimates (a heuristic, used to
                    measure how far the estimates are from a usable rule)
- jacobi_nodes:     Golub-Welsch eigen-decomposition, as a cross-check

The weights absorb exp(-x^2), so ``integrate`` simply returns sum w_j f(x_j).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Any, Callable, Dict, Optional, Tuple

import numpy as np

from core.asymptotic import SYMMETRY_TOL, approx_zero_set
from core.hermite_oracle import (
    exact_zero_set,
    gauss_weights,
    jacobi_nodes_and_weights,
    require_positive_weights,
    weights_at,
)
from core.segment_solver import SolverConfig

SQRT_PI = math.sqrt(math.pi)
# Weight-sum tolerance enforced for rules built on true Gauss nodes.
WEIGHT_SUM_RTOL = 1e-10


class NodeSource(str, Enum):
    EXACT = "exact_nodes"
    ASYMPTOTIC = "asymptotic_nodes"
    JACOBI = "jacobi_nodes"


@dataclass(frozen=True)
class QuadratureRule:
    """An n-point rule for the weight exp(-x^2).

    Attributes:
        n: node count
        source: where the nodes came from
        nodes: ascending abscissas, symmetric about 0
        weights: positive weights, same length and symmetry as nodes
    """

    n: int
    source: NodeSource
    nodes: Tuple[float, ...]
    weights: Tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "source", NodeSource(self.source))
        object.__setattr__(self, "nodes", tuple(float(x) for x in self.nodes))
        object.__setattr__(self, "weights", tuple(float(w) for w in self.weights))

        if len(self.nodes) != self.n or len(self.weights) != self.n:
            raise ValueError(f"rule needs {self.n} nodes and weights, got {len(self.nodes)} and {len(self.weights)}")
        for a, b in zip(self.nodes, self.nodes[1:]):
            if not a < b:
                raise ValueError("nodes must be strictly increasing")
        for a, b in zip(self.nodes, reversed(self.nodes)):
            if abs(a + b) > SYMMETRY_TOL:
                raise ValueError("nodes must be symmetric about 0")
        if any(not (w > 0.0) for w in self.weights):
            raise ValueError("weights must be positive")
        for a, b in zip(self.weights, reversed(self.weights)):
            if abs(a - b) > SYMMETRY_TOL * max(abs(a), 1.0):
                raise ValueError("weights must be symmetric")
        if self.source is not NodeSource.ASYMPTOTIC:
            total = math.fsum(self.weights)
            if abs(total - SQRT_PI) > WEIGHT_SUM_RTOL * SQRT_PI:
                raise ValueError(f"weights sum to {total!r}, expected sqrt(pi)")

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "source": self.source.value,
            "nodes": list(self.nodes),
            "weights": list(self.weights),
        }


def build_rule(n: int, source: NodeSource, config: SolverConfig = SolverConfig()) -> QuadratureRule:
    """Build an n-point rule from the requested node source.

    Raises:
        ValueError: n < 1
        ConvergenceError: the zeros did not converge, or a weight underflowed
            (outer weights of rules with a few hundred nodes fall below binary64)
    """
    if n < 1:
        raise ValueError(f"a rule needs at least one node, got n={n}")
    source = NodeSource(source)

    if source is NodeSource.EXACT:
        zeros = exact_zero_set(n, config)
        nodes, weights = zeros.values, gauss_weights(n, zeros)
    elif source is NodeSource.ASYMPTOTIC:
        nodes = approx_zero_set(n, config).values
        weights = weights_at(n, nodes)
        # mirror so the weights share the exact symmetry of the nodes
        weights = 0.5 * (weights + weights[::-1])
    else:
        nodes, weights = jacobi_nodes_and_weights(n)
        weights = require_positive_weights(n, weights)

    return QuadratureRule(n=n, source=source, nodes=tuple(nodes), weights=tuple(weights))


def integrate(rule: QuadratureRule, f: Callable[[float], float]) -> float:
    """Return sum_j w_j f(x_j); NaNs from f propagate."""
    return math.fsum(w * float(f(x)) for x, w in zip(rule.nodes, rule.weights))


def gaussian_moment(k: int) -> float:
    """integral x^k exp(-x^2) dx: 0 for odd k, sqrt(pi) (k-1)!! / 2^(k/2) for even k."""
    if isinstance(k, bool) or int(k) != k or k < 0:
        raise ValueError(f"moment order must be a nonnegative integer, got {k!r}")
    k = int(k)
    if k % 2 == 1:
        return 0.0
    double_factorial = math.prod(range(k - 1, 0, -2))
    return SQRT_PI * double_factorial / 2.0 ** (k // 2)


class IntegrandKind(str, Enum):
    MONOMIAL = "monomial"
    COS = "cos"
    EXP = "exp"


@dataclass(frozen=True)
class Integrand:
    """Built-in test integrand with a closed-form reference value.

    monomial: x^k with k = param (nonnegative integer)
    cos:      cos(a x) with a = param
    exp:      exp(b x) with b = param
    """

    kind: IntegrandKind
    param: float

    def __post_init__(self):
        object.__setattr__(self, "kind", IntegrandKind(self.kind))
        if not math.isfinite(self.param):
            raise ValueError(f"integrand parameter must be finite, got {self.param!r}")
        if self.kind is IntegrandKind.MONOMIAL and (int(self.param) != self.param or self.param < 0):
            raise ValueError(f"monomial degree must be a nonnegative integer, got {self.param!r}")

    def __call__(self, x: float) -> float:
        if self.kind is IntegrandKind.MONOMIAL:
            return x ** int(self.param)
        if self.kind is IntegrandKind.COS:
            return math.cos(self.param * x)
        return math.exp(self.param * x)

    def reference(self) -> float:
        """Exact value of integral f(x) exp(-x^2) dx."""
        if self.kind is IntegrandKind.MONOMIAL:
            return gaussian_moment(int(self.param))
        if self.kind is IntegrandKind.COS:
            return SQRT_PI * math.exp(-self.param ** 2 / 4.0)
        return SQRT_PI * math.exp(self.param ** 2 / 4.0)

    def describe(self) -> str:
        if self.kind is IntegrandKind.MONOMIAL:
            return f"x^{int(self.param)}"
        return f"{self.kind.value}({self.param!r}*x)"


@dataclass(frozen=True)
class QuadratureResult:
    rule: QuadratureRule
    integrand: Integrand
    value: float
    reference: float

    @property
    def abs_err(self) -> float:
        return abs(self.value - self.reference)

    @property
    def rel_err(self) -> Optional[float]:
        """Relative error, or None when the reference is 0."""
        return self.abs_err / abs(self.reference) if self.reference != 0.0 else None


def evaluate(rule: QuadratureRule, integrand: Integrand) -> QuadratureResult:
    """Integrate a built-in integrand and pair it with its analytic reference."""
    return QuadratureResult(
        rule=rule,
        integrand=integrand,
        value=integrate(rule, integrand),
        reference=integrand.reference(),
    )


def relative_error_curve(source: NodeSource, degrees, integrand: Integrand,
                         config: SolverConfig = SolverConfig()) -> np.ndarray:
    """Relative error of ``integrand`` for rules of each degree in ``degrees``."""
    reference = integrand.reference()
    values = np.array([integrate(build_rule(n, source, config), integrand) for n in degrees])
    return np.abs(values - reference) / abs(reference)
