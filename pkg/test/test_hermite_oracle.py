"""
Tests for the Hermite functions, the exact-zero oracle and the Gauss weights.
"""

import logging
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.integrate import quad

from core.asymptotic import ZeroMethod, approx_zero_set
from core.errors import ConvergenceError
from core.hermite_oracle import (
    eval_hermite_function,
    exact_zero_set,
    gauss_weights,
    hermite_functions,
    jacobi_nodes_and_weights,
    jacobi_zero_set,
    refine_zeros,
    weights_at,
)
from core.segment_solver import SolverConfig

SQRT_PI = math.sqrt(math.pi)


@pytest.fixture(scope="module")
def exact_sets():
    """Exact zero sets for n = 0 .. 200, computed once."""
    return {n: exact_zero_set(n) for n in range(0, 201)}


class TestHermiteFunctions:

    def test_ground_state_at_origin(self):
        pair = eval_hermite_function(0, 0.0)
        assert pair.psi_n == pytest.approx(0.7511255444649425, rel=1e-15)
        assert pair.psi_prev == 0.0

    def test_odd_function_vanishes_at_origin(self):
        assert eval_hermite_function(1, 0.0).psi_n == 0.0
        assert eval_hermite_function(7, 0.0).psi_n == 0.0

    def test_zero_of_degree_two(self):
        assert abs(eval_hermite_function(2, 1 / math.sqrt(2)).psi_n) <= 1e-15

    @pytest.mark.parametrize("x", [-2.3, -0.4, 0.3, 1.7, 4.1])
    def test_matches_closed_form(self, x):
        gauss = math.exp(-x * x / 2) / math.pi ** 0.25
        psi_2 = (4 * x * x - 2) * gauss / math.sqrt(8)
        psi_3 = (8 * x ** 3 - 12 * x) * gauss / math.sqrt(48)
        assert eval_hermite_function(2, x).psi_n == pytest.approx(psi_2, rel=1e-13, abs=1e-16)
        pair = eval_hermite_function(3, x)
        assert pair.psi_n == pytest.approx(psi_3, rel=1e-13, abs=1e-16)
        assert pair.psi_prev == pytest.approx(psi_2, rel=1e-13, abs=1e-16)

    @pytest.mark.parametrize("n", [0, 1, 3, 8])
    def test_unit_norm(self, n):
        norm, _ = quad(lambda x: eval_hermite_function(n, x).psi_n ** 2, -np.inf, np.inf, epsabs=0.0, epsrel=1e-12)
        assert norm == pytest.approx(1.0, rel=1e-9)

    def test_bounded_for_large_degree(self):
        x = np.linspace(-250.0, 250.0, 41)
        for n in (500, 5000, 20000):
            psi_n, psi_prev = hermite_functions(n, x)
            assert np.all(np.isfinite(psi_n)) and np.all(np.isfinite(psi_prev))
            assert np.max(np.abs(psi_n)) <= 1.0
            assert np.max(np.abs(psi_prev)) <= 1.0

    def test_far_tail_underflows_to_zero(self):
        assert eval_hermite_function(10, 60.0).psi_n == 0.0

    def test_non_finite_abscissa(self):
        with pytest.raises(ValueError):
            eval_hermite_function(3, float("inf"))

    def test_negative_degree(self):
        with pytest.raises(ValueError):
            hermite_functions(-1, 0.0)


@settings(max_examples=200, deadline=None)
@given(st.integers(min_value=0, max_value=80), st.floats(min_value=-30.0, max_value=30.0, allow_nan=False))
def test_parity(n, x):
    plus = eval_hermite_function(n, x).psi_n
    minus = eval_hermite_function(n, -x).psi_n
    assert abs(minus - (-1) ** n * plus) <= 1e-14


class TestExactZeros:

    def test_closed_forms(self):
        assert exact_zero_set(0).values == ()
        assert exact_zero_set(1).values == (0.0,)
        two = exact_zero_set(2)
        assert two.method is ZeroMethod.EXACT
        assert list(two.values) == pytest.approx([-1 / math.sqrt(2), 1 / math.sqrt(2)], abs=1e-14)
        three = exact_zero_set(3)
        assert list(three.values) == pytest.approx([-math.sqrt(1.5), 0.0, math.sqrt(1.5)], abs=1e-14)
        assert three.values[1] == 0.0

    def test_degree_four(self):
        outer = math.sqrt((3 + math.sqrt(6)) / 2)
        inner = math.sqrt((3 - math.sqrt(6)) / 2)
        assert list(exact_zero_set(4).values) == pytest.approx([-outer, -inner, inner, outer], abs=1e-14)

    def test_residual_up_to_200(self, exact_sets):
        for n, zeros in exact_sets.items():
            psi_n, _ = hermite_functions(n, np.asarray(zeros.values))
            assert len(zeros.values) == n
            assert np.all(np.abs(psi_n) <= 1e-12), n

    def test_symmetric(self, exact_sets):
        for zeros in exact_sets.values():
            values = np.asarray(zeros.values)
            assert np.all(np.abs(values + values[::-1]) <= 1e-12)

    def test_interlacing_up_to_100(self, exact_sets):
        for n in range(2, 101):
            outer = exact_sets[n].values
            inner = exact_sets[n - 1].values
            for k, z in enumerate(inner):
                assert outer[k] < z < outer[k + 1], (n, k)

    def test_agrees_with_jacobi_eigenvalues(self, exact_sets):
        for n in range(1, 201, 7):
            assert np.allclose(exact_sets[n].values, jacobi_zero_set(n).values, rtol=0.0, atol=1e-11)

    def test_agrees_with_numpy_hermgauss(self):
        for n in (5, 17, 64, 100):
            nodes, weights = np.polynomial.hermite.hermgauss(n)
            assert np.allclose(exact_zero_set(n).values, nodes, rtol=0.0, atol=1e-11)

    def test_logs_refinement(self, caplog):
        caplog.set_level(logging.DEBUG, logger="core.hermite_oracle")
        exact_zero_set(6)
        assert "zeros refined" in caplog.text


class TestSeedAdequacy:

    def test_estimates_converge_within_twenty_iterations(self, exact_sets):
        for n in range(1, 201):
            seeds = approx_zero_set(n).values
            refinement = refine_zeros(n, seeds)
            assert refinement.max_iterations <= 20, n
            assert refinement.roots == exact_sets[n].values

    def test_estimates_isolate_every_zero(self, exact_sets):
        # Each seed cell (between midpoints of neighbouring estimates) holds
        # the exact zero of the same rank.
        for n in range(2, 201):
            seeds = np.asarray(approx_zero_set(n).values)
            exact = np.asarray(exact_sets[n].values)
            mids = 0.5 * (seeds[:-1] + seeds[1:])
            assert np.all(exact[:-1] < mids), n
            assert np.all(mids < exact[1:]), n

    def test_large_degree(self):
        n = 2000
        zeros = exact_zero_set(n)
        psi_n, _ = hermite_functions(n, np.asarray(zeros.values))
        assert np.all(np.abs(psi_n) <= 1e-11)
        assert zeros.values[-1] < math.sqrt(2 * n + 1)

    def test_newton_stops_once_on_the_root(self, exact_sets):
        refinement = refine_zeros(5, approx_zero_set(5).values)
        assert refinement.max_iterations <= 8
        assert refinement.roots == exact_sets[5].values
        for n in (17, 64, 150):
            assert max(refine_zeros(n, approx_zero_set(n).values).iterations) <= 20, n

    def test_bad_seeds(self):
        with pytest.raises(ValueError):
            refine_zeros(3, [0.0, 1.0])
        with pytest.raises(ValueError):
            refine_zeros(2, [0.5, -0.5])

    def test_iteration_limit_names_degree(self):
        with pytest.raises(ConvergenceError) as excinfo:
            refine_zeros(10, approx_zero_set(10).values, SolverConfig(max_iter=1))
        assert excinfo.value.n == 10
        assert excinfo.value.j is not None
        assert "n=10" in str(excinfo.value)


class TestGaussWeights:

    def test_closed_forms(self):
        assert gauss_weights(1, exact_zero_set(1)) == pytest.approx([SQRT_PI], rel=1e-15)
        assert gauss_weights(2, exact_zero_set(2)) == pytest.approx([SQRT_PI / 2] * 2, rel=1e-14)
        three = gauss_weights(3, exact_zero_set(3))
        assert three[1] == pytest.approx(2 * SQRT_PI / 3, rel=1e-14)
        assert three[0] == pytest.approx(SQRT_PI / 6, rel=1e-14)
        assert three[2] == pytest.approx(SQRT_PI / 6, rel=1e-14)

    def test_positive_symmetric_and_summing_to_sqrt_pi(self, exact_sets):
        for n in range(1, 101):
            w = np.asarray(gauss_weights(n, exact_sets[n]))
            assert np.all(w > 0)
            assert np.array_equal(w, w[::-1])
            assert math.fsum(w) == pytest.approx(SQRT_PI, rel=1e-13)

    def test_agree_with_golub_welsch(self, exact_sets):
        for n in (4, 11, 30, 60):
            _, jacobi_w = jacobi_nodes_and_weights(n)
            assert np.allclose(gauss_weights(n, exact_sets[n]), jacobi_w, rtol=1e-9, atol=1e-14)

    def test_agree_with_numpy_hermgauss(self, exact_sets):
        for n in (5, 17, 64, 100):
            _, weights = np.polynomial.hermite.hermgauss(n)
            assert np.allclose(gauss_weights(n, exact_sets[n]), weights, rtol=1e-9, atol=1e-14)

    def test_underflow_raises_with_degree(self):
        with pytest.raises(ConvergenceError) as excinfo:
            gauss_weights(400, exact_zero_set(400))
        assert excinfo.value.n == 400
        assert "underflow" in str(excinfo.value)

    def test_needs_exact_nodes(self):
        with pytest.raises(ValueError):
            gauss_weights(4, approx_zero_set(4))
        with pytest.raises(ValueError):
            gauss_weights(5, exact_zero_set(4))

    def test_formula_at_arbitrary_nodes(self):
        x = approx_zero_set(2).values[1]
        # 1 / (2 h_1(x)^2) with h_1 = sqrt(2) x pi^(-1/4)
        assert weights_at(2, [x])[0] == pytest.approx(SQRT_PI / (4 * x * x), rel=1e-14)
