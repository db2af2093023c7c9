"""The two prefix evaluators and their Newton/Aitken convenience wrappers.

Both algorithms compute the same family of values p_0(z;t), ..., p_N(z;t):
the classical triangular recurrence (a generalization of the divided
difference scheme and of Aitken's evaluation) and the factored product-sum
algorithm whose accuracy does not depend on the knot ordering.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ShapeError
from .numerics import coincidence_index
from .problem import EvalSpec, InterpProblem, Scalar

PrefixResults = list
DividedDifferenceTable = list


def algorithm1_prefix(
    problem: InterpProblem, spec: EvalSpec
) -> tuple[PrefixResults, DividedDifferenceTable]:
    """Triangular recurrence; returns the prefix values and the full table.

    Row n of the table holds the order-n entries c_0^(n) .. c_{N-n}^(n);
    row 0 is a copy of the sample values, and p_n is the leading entry of
    row n.  With t=0, z=1 the entries are the divided differences; with
    t=1 they are interpolant values on the knot windows.
    """
    knots, values = problem.knots, problem.values
    p, table = _alg1_core(knots, values, spec.z, spec.t)
    return p, table


def _alg1_core(knots, values, z, t):
    n_pts = len(knots)
    u = [z - t * zk for zk in knots]
    row = list(values)
    table = [row]
    p = [values[0]]
    for n in range(1, n_pts):
        prev = table[n - 1]
        row = [
            (u[n + k] * prev[k] - u[k] * prev[k + 1]) / (knots[k] - knots[k + n])
            for k in range(n_pts - n)
        ]
        table.append(row)
        p.append(row[0])
    return p, table


def algorithm2_prefix(problem: InterpProblem, spec: EvalSpec) -> PrefixResults:
    """Factored product-sum evaluator; accurate under any knot ordering.

    Each prefix value is returned as the product of the running nodal
    polynomial with a sum of reciprocal-weighted samples.  When z equals
    t*z_j in working precision for some knot (smallest index j), the
    recurrence's precondition fails; prefixes from j onward take the
    closed-form value f_j * t^n and earlier prefixes are computed on the
    truncated problem.
    """
    knots, values = problem.knots, problem.values
    z, t = spec.z, spec.t
    j_star = coincidence_index(knots, z, t)
    if j_star is None:
        return _alg2_core(knots, values, z, t)

    p = _alg2_core(knots[:j_star], values[:j_star], z, t) if j_star else []
    power = 1.0
    for _ in range(j_star):
        power = power * t
    fj = values[j_star]
    for _ in range(j_star, len(knots)):
        p.append(fj * power)
        power = power * t
    return p


def _alg2_core(knots, values, z, t, state=None):
    n_pts = len(knots)
    u = [z - t * zk for zk in knots]
    b0 = [values[j] / u[j] for j in range(n_pts)]
    b = [b0[0]]
    a = u[0]
    p = [a * b[0]]
    if state is not None:
        state.append((a, b[0], list(b)))
    for n in range(1, n_pts):
        a = u[n] * a
        for j in range(n):
            b[j] = b[j] / (knots[j] - knots[n])
        den = knots[n] - knots[0]
        for j in range(1, n):
            den = den * (knots[n] - knots[j])
        b.append(b0[n] / den)
        s = b[0]
        for j in range(1, n + 1):
            s = s + b[j]
        p.append(a * s)
        if state is not None:
            state.append((a, s, list(b)))
    return p


@dataclass(frozen=True)
class AlgorithmIIState:
    """Per-step internals of the product-sum evaluator, for inspection.

    ``p[n]`` is exactly the floating-point product ``A[n] * B[n]``.
    """

    A: list
    B: list
    b: list  # b[n] holds the step-n reciprocal-weighted terms b_0..b_n
    p: list


def algorithm2_state(problem: InterpProblem, spec: EvalSpec) -> AlgorithmIIState:
    """Run the product-sum evaluator and capture its internal sequences.

    Raises ValueError when z coincides with t*z_j, where the factored form
    is not defined.
    """
    if coincidence_index(problem.knots, spec.z, spec.t) is not None:
        raise ValueError(
            "z coincides with t*z_j; the factored state is not defined"
        )
    steps = []
    p = _alg2_core(problem.knots, problem.values, spec.z, spec.t, state=steps)
    return AlgorithmIIState(
        A=[s[0] for s in steps],
        B=[s[1] for s in steps],
        b=[s[2] for s in steps],
        p=p,
    )


def divided_differences(problem: InterpProblem, method: str = "stable") -> PrefixResults:
    """Newton coefficients c_0..c_N of the interpolating polynomial.

    ``method="stable"`` uses the product-sum evaluator; ``"classical"``
    routes through the triangular scheme for comparison experiments.
    """
    spec = EvalSpec(z=1.0, t=0.0)
    if method == "stable":
        return algorithm2_prefix(problem, spec)
    if method == "classical":
        return algorithm1_prefix(problem, spec)[0]
    raise ValueError(f"unknown method {method!r}; expected 'stable' or 'classical'")


def aitken_evaluate(
    problem: InterpProblem, z: Scalar, method: str = "classical"
) -> PrefixResults:
    """Values of the successive interpolants at z (t=1).

    ``method="classical"`` is the triangular scheme evaluated at z;
    ``"stable"`` routes through the product-sum evaluator.
    """
    spec = EvalSpec(z=z, t=1.0)
    if method == "classical":
        return algorithm1_prefix(problem, spec)[0]
    if method == "stable":
        return algorithm2_prefix(problem, spec)
    raise ValueError(f"unknown method {method!r}; expected 'classical' or 'stable'")


def newton_evaluate(coefficients, knots, z: Scalar) -> Scalar:
    """Nested evaluation of the Newton form at z.

    ``coefficients`` has length N+1 and ``knots`` must supply at least the
    first N centers z_0..z_{N-1}.
    """
    n = len(coefficients) - 1
    if n < 0:
        raise ShapeError("need at least one coefficient")
    if len(knots) < n:
        raise ShapeError(
            f"{len(coefficients)} coefficients need at least {n} knots, got {len(knots)}"
        )
    acc = coefficients[n]
    for j in range(n - 1, -1, -1):
        acc = coefficients[j] + (z - knots[j]) * acc
    return acc
