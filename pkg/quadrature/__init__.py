"""
Quadrature Package

Gauss-Hermite rules built from exact, estimated or eigenvalue nodes, plus
analytic reference values for the built-in test integrands.
"""

from .gauss_hermite import NodeSource, QuadratureRule, Integrand, build_rule, integrate, gaussian_moment

__all__ = ['NodeSource', 'QuadratureRule', 'Integrand', 'build_rule', 'integrate', 'gaussian_moment']
