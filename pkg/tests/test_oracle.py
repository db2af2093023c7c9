"""Ground-truth evaluator: worked examples, exactness, and independence checks."""

import math
from fractions import Fraction
from itertools import permutations

import pytest

from interpstab import (
    EvalSpec,
    InterpProblem,
    condition_sums,
    oracle_prefix_values,
    unit_roundoff,
)
from interpstab.generation import UniformStream
from interpstab.numerics import magnitude


def test_reproduces_square_at_three():
    p = InterpProblem([0, 1, 2], [0, 1, 4])
    assert oracle_prefix_values(p, EvalSpec(3.0, 1.0)) == [0.0, 3.0, 9.0]


def test_hand_evaluated_half_t():
    p = InterpProblem([0.0, 1.0], [1.0, 3.0])
    got = oracle_prefix_values(p, EvalSpec(1.0, 0.5))
    assert got[0] == 1.0
    assert got[1] == pytest.approx(2.5, abs=1e-15)


def test_coincident_point_closed_form():
    p = InterpProblem([1.0, 3.0], [4.0, 7.0])
    assert oracle_prefix_values(p, EvalSpec(2.0, 2.0)) == [4.0, 8.0]


def test_newton_coefficients_of_square():
    p = InterpProblem([0, 1, 2], [0, 1, 4])
    got = oracle_prefix_values(p, EvalSpec(1.0, 0.0))
    assert got == [0.0, 1.0, 1.0]


def _pow(x, s):
    acc = 1.0
    for _ in range(s):
        acc *= x
    return acc


@pytest.mark.parametrize("s", [0, 1, 2, 3])
@pytest.mark.parametrize("z", [-3.0, -1.0, 2.0, 3.0])
def test_monomial_exact_at_integers(s, z):
    knots = [0.0, 1.0, -1.0, 2.0, -2.0, 3.0]
    values = [_pow(k, s) for k in knots]
    p = InterpProblem(knots, values)
    got = oracle_prefix_values(p, EvalSpec(z, 1.0))
    for n in range(s, len(knots)):
        assert got[n] == _pow(z, s)


def test_final_value_permutation_covariant():
    knots = [0.0, 0.5, -1.0, 2.0]
    values = [1.0, -2.0, 0.25, 3.0]
    z = 0.3
    ref = None
    for perm in permutations(range(4)):
        p = InterpProblem([knots[i] for i in perm], [values[i] for i in perm])
        v = oracle_prefix_values(p, EvalSpec(z, 1.0))[-1]
        if ref is None:
            ref = v
        else:
            assert abs(v - ref) <= 8 * unit_roundoff() * abs(ref)


def test_complex_data_supported():
    p = InterpProblem([0.0, 1j, 1.0], [1.0, 2.0, 1j])
    got = oracle_prefix_values(p, EvalSpec(0.5 + 0.5j, 1.0))
    assert got[0] == 1.0
    assert all(isinstance(v, (float, complex)) for v in got)
    # cross-check degree-1 prefix by hand: f0*(z-z1)/(z0-z1) + f1*(z-z0)/(z1-z0)
    z = 0.5 + 0.5j
    by_hand = 1.0 * (z - 1j) / (0 - 1j) + 2.0 * (z - 0) / (1j - 0)
    assert magnitude(got[1] - by_hand) <= 8 * unit_roundoff() * magnitude(by_hand)


def _fraction_condition_sums(knots, values, z, t):
    """Exact rational recomputation, valid for real data."""
    n_pts = len(knots)
    out = []
    for n in range(n_pts):
        s = Fraction(0)
        for j in range(n + 1):
            term = abs(Fraction(values[j]))
            for i in range(n + 1):
                if i == j:
                    continue
                term *= abs(Fraction(z) - Fraction(t) * Fraction(knots[i]))
                term /= abs(Fraction(knots[j]) - Fraction(knots[i]))
            s += term
        out.append(s)
    return out


@pytest.mark.parametrize("t", [0.0, 1.0, 0.5, -2.0])
def test_condition_sums_match_exact_rational(t):
    stream = UniformStream(321)
    u = stream.draw(16)
    knots = [float(2 * x - 1) for x in u[:6]]
    values = [float(2 * x - 1) for x in u[6:12]]
    z = float(4 * u[12] - 2)
    p = InterpProblem(knots, values)
    got = condition_sums(p, EvalSpec(z, t))
    want = _fraction_condition_sums(knots, values, z, t)
    for g, w in zip(got, want):
        assert abs(Fraction(g) - w) <= Fraction(4) * Fraction(unit_roundoff()) * w


def test_condition_sums_prefix_shapes():
    p = InterpProblem([5.0], [9.0])
    assert condition_sums(p, EvalSpec(2.0, 1.0)) == [9.0]


def test_oracle_with_zero_t_and_zero_z():
    # z = t*z_0 = 0 for every knot; smallest index wins, 0**0 == 1
    p = InterpProblem([2.0, 3.0, 5.0], [7.0, 1.0, 4.0])
    assert oracle_prefix_values(p, EvalSpec(0.0, 0.0)) == [7.0, 0.0, 0.0]


def test_integer_coincidence_exact_for_all_orders():
    knots = [1.0, 2.0, 4.0, 8.0]
    values = [5.0, -3.0, 7.0, 11.0]
    p = InterpProblem(knots, values)
    for j, t in ((0, 3.0), (1, 3.0), (2, -2.0), (3, 5.0)):
        z = t * knots[j]
        got = oracle_prefix_values(p, EvalSpec(z, t))
        power = _pow(t, j)
        for n in range(j, len(knots)):
            assert got[n] == values[j] * power
            power *= t
