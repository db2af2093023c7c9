"""Backward-stability properties checked against the wide-precision oracle.

The per-prefix inequality under test is

    |computed_n - exact_n| <= eps * k * S_n

with S_n the absolute term sum from ``condition_sums``.  The constant k is
5(N+1) for the product-sum evaluator under any ordering (8+2*sqrt(2) per
knot in the complex case), and 5N for the triangular scheme on sorted real
knots.  The t values used here keep every product t*z_j exactly
representable, which is the regime the constants are stated for.
"""

import math

import pytest

from interpstab import (
    EvalSpec,
    InterpProblem,
    aitken_evaluate,
    algorithm1_prefix,
    algorithm2_prefix,
    condition_sums,
    divided_differences,
    monomial_values,
    order_leja,
    order_monotone,
    unit_roundoff,
)
from interpstab.generation import UniformStream, random_uniform_knots
from interpstab.numerics import _oracle_prefix_wide, magnitude, narrow

EPS = unit_roundoff()
D_REAL = 5.0
D_COMPLEX = 8.0 + 2.0 * math.sqrt(2.0)

EXACT_PRODUCT_TS = (0.0, 1.0, -1.0, 2.0, 0.5, -0.25)


def _oracle(problem, spec):
    wide_vals = _oracle_prefix_wide(problem.knots, problem.values, spec.z, spec.t)
    return [narrow(v) for v in wide_vals]


def _random_problem(seed, n, interval=(-1.0, 1.0)):
    stream = UniformStream(seed)
    u = stream.draw(2 * (n + 1))
    a, b = interval
    knots = [a + (b - a) * float(x) for x in u[: n + 1]]
    values = [float(2 * x - 1) for x in u[n + 1 :]]
    return InterpProblem(knots, values)


@pytest.mark.parametrize("seed", [1, 2, 3, 4, 5])
@pytest.mark.parametrize("t", EXACT_PRODUCT_TS)
def test_product_sum_bound_any_ordering(seed, t):
    n = 14
    base = _random_problem(seed, n)
    z = 0.6 if t != 1.0 else 1.37  # keep z off the coincidence set
    spec = EvalSpec(z, t)
    k = D_REAL * (n + 1)
    for prob in (base, order_leja(base)[0], order_monotone(base, "decreasing")[0]):
        exact = _oracle(prob, spec)
        sums = condition_sums(prob, spec)
        got = algorithm2_prefix(prob, spec)
        for i in range(n + 1):
            assert abs(got[i] - exact[i]) <= EPS * k * sums[i]


@pytest.mark.parametrize("seed", [11, 12, 13])
def test_product_sum_bound_complex(seed):
    n = 10
    stream = UniformStream(seed)
    u = stream.draw(4 * (n + 1))
    knots = [complex(2 * u[4 * j] - 1, 2 * u[4 * j + 1] - 1) for j in range(n + 1)]
    values = [
        complex(2 * u[4 * j + 2] - 1, 2 * u[4 * j + 3] - 1) for j in range(n + 1)
    ]
    prob = InterpProblem(knots, values)
    k = D_COMPLEX * (n + 1)
    for t in (1.0, 2.0, -0.5, 2.0j):
        spec = EvalSpec(complex(0.3, -0.8), t)
        exact = _oracle(prob, spec)
        sums = condition_sums(prob, spec)
        got = algorithm2_prefix(prob, spec)
        for i in range(n + 1):
            assert magnitude(got[i] - exact[i]) <= EPS * k * sums[i]


@pytest.mark.parametrize("seed", [21, 22, 23])
@pytest.mark.parametrize("n", [5, 20, 40])
def test_triangular_scheme_bound_monotone(seed, n):
    base = _random_problem(seed, n, interval=(0.0, 1.0))
    prob = order_monotone(base, "increasing")[0]
    spec = EvalSpec(1.0, 0.0)
    exact = _oracle(prob, spec)
    sums = condition_sums(prob, spec)
    got = algorithm1_prefix(prob, spec)[0]
    k = D_REAL * n
    for i in range(1, n + 1):
        assert abs(got[i] - exact[i]) <= EPS * k * sums[i]


@pytest.mark.parametrize("seed", [31, 32])
def test_interpolation_property_at_knots(seed):
    n = 12
    base = _random_problem(seed, n)
    prob = order_monotone(base, "increasing")[0]
    for j, (zj, fj) in enumerate(zip(prob.knots, prob.values)):
        sums = condition_sums(prob, EvalSpec(zj, 1.0))
        classical = aitken_evaluate(prob, zj, "classical")
        stable = aitken_evaluate(prob, zj, "stable")
        for i in range(j, n + 1):
            assert abs(classical[i] - fj) <= EPS * D_REAL * n * sums[i]
            assert abs(stable[i] - fj) <= EPS * D_REAL * (n + 1) * sums[i]


@pytest.mark.parametrize("seed", [41, 42, 43])
@pytest.mark.parametrize("s", [2, 5])
def test_high_coefficients_vanish_within_bound(seed, s):
    # computed coefficients above the monomial degree are pure noise and
    # must stay below the stability allowance, for every n > s
    n = 16
    knots = random_uniform_knots(0.0, 1.0, n, seed)
    base = InterpProblem(knots, monomial_values(knots, s))
    for prob in (base, order_leja(base)[0]):
        sums = condition_sums(prob, EvalSpec(1.0, 0.0))
        allowance = EPS * (D_REAL * (n + 1) + 1.0) * max(sums)
        coeffs = divided_differences(prob)
        for i in range(s + 1, n + 1):
            assert abs(coeffs[i]) <= allowance


@pytest.mark.parametrize("seed", [51, 52, 53])
def test_top_degree_agreement_between_orderings(seed):
    n = 15
    base = _random_problem(seed, n)
    spec = EvalSpec(1.61, 1.0)
    k = D_REAL * (n + 1)
    p_base = algorithm2_prefix(base, spec)
    s_base = condition_sums(base, spec)
    for prob in (order_leja(base)[0], order_monotone(base, "increasing")[0]):
        p_other = algorithm2_prefix(prob, spec)
        s_other = condition_sums(prob, spec)
        tol = EPS * k * (s_base[-1] + s_other[-1])
        assert abs(p_base[-1] - p_other[-1]) <= tol


def test_state_is_consistent_with_debug_invariant():
    from interpstab import algorithm2_state

    prob = _random_problem(61, 9)
    spec = EvalSpec(0.77, 0.5)
    state = algorithm2_state(prob, spec)
    for n, (a, b, p) in enumerate(zip(state.A, state.B, state.p)):
        assert p == a * b
        assert len(state.b[n]) == n + 1
