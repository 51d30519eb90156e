"""
Demo runner for the circle-segment estimates of Hermite polynomial zeros.

Walks through the main pieces in one process:

- Solve the segment equation for a few area values
- Estimate the zeros of H_4 and polish them into exact zeros
- Show the spin-1 disk partition
- Compare estimates and exact zeros for the first 50 degrees (summary only)
- Integrate x^2 exp(-x^2) with exact and estimated nodes

Run: python3 main.py
"""

from __future__ import annotations

import math

from comparison.comparison import summarize, sweep
from core.asymptotic import approx_estimates, approx_zero_set, spin_domain
from core.hermite_oracle import refine_zeros
from core.segment_solver import solve_segment
from quadrature.gauss_hermite import Integrand, IntegrandKind, NodeSource, relative_error_curve


def demo_sequence():
    print("Segment equation theta + sin(theta) = M:")
    for M in (0.0, math.pi / 3, math.pi / 2, math.pi - 1e-6):
        sol = solve_segment(M)
        print(f"  M={M:.10f}  theta={sol.theta:.15f}  residual={sol.residual:.1e}  iterations={sol.iterations}")

    print("\nZeros of H_4 (estimate -> exact):")
    for e in approx_estimates(4):
        print(f"  j={e.j}  M={e.M:.6f}  theta={e.theta:.6f}  x~{e.x:.6f}")
    refinement = refine_zeros(4, approx_zero_set(4).values)
    print("  exact:", ", ".join(f"{x:.10f}" for x in refinement.roots))
    print("  Newton evaluations per zero:", list(refinement.iterations))

    domain = spin_domain(1)
    print(f"\nSpin S=1: radius={domain.radius:.6f}")
    print("  boundaries:", ", ".join(f"{b:.6f}" for b in domain.boundaries))
    print("  cell areas:", ", ".join(f"{a:.6f}" for a in domain.cell_areas()))

    print("\nEstimate vs exact, n = 1..50 (abs_err per degree):")
    for s in summarize(sweep(1, 50)):
        if s.n in (1, 2, 5, 10, 20, 30, 40, 50):
            print(f"  n={s.n:3d}  zeros={s.count:3d}  min={s.min_abs_err:.3e}  max={s.max_abs_err:.3e}  mean={s.mean_abs_err:.3e}")

    degrees = [4, 10, 20, 40]
    x_squared = Integrand(IntegrandKind.MONOMIAL, 2)
    print("\nRelative error of integral x^2 exp(-x^2) dx:")
    for source in (NodeSource.EXACT, NodeSource.ASYMPTOTIC):
        errs = relative_error_curve(source, degrees, x_squared)
        print(f"  {source.value:17s}", "  ".join(f"n={n}: {e:.2e}" for n, e in zip(degrees, errs)))


if __name__ == '__main__':
    demo_sequence()
