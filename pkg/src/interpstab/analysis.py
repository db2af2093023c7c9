"""Sensitivity and accuracy diagnostics for the prefix evaluators.

Everything here treats the wide-precision results from ``numerics`` as
exact: condition numbers, the ordering-dependent growth constant of the
triangular scheme, the per-algorithm stability constants, and the three
normalized error measurements used by the experiment harness.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DegenerateConditioning, DistinctnessViolation, ShapeError
from .interp import _alg1_core, _alg2_core, algorithm2_prefix
from .numerics import (
    DD,
    _condition_sums_wide,
    _oracle_prefix_wide,
    condition_sums,
    magnitude,
    narrow,
    unit_roundoff,
    wide,
    wide_pow,
)
from .problem import NEWTON_COEFFICIENTS, EvalSpec, InterpProblem, as_scalar, is_real

REAL = "real"
COMPLEX = "complex"

# Per-operation rounding constant of the backward-error bounds: 5 in real
# arithmetic, 8 + 2*sqrt(2) when complex products and quotients are built
# from real operations.
_D_REAL = 5.0
_D_COMPLEX = 8.0 + 2.0 * math.sqrt(2.0)


def rounding_constant(case: str) -> float:
    if case == REAL:
        return _D_REAL
    if case == COMPLEX:
        return _D_COMPLEX
    raise ValueError(f"case must be {REAL!r} or {COMPLEX!r}")


@dataclass(frozen=True)
class StabilityBounds:
    """Stability constants k_N for the two algorithms at a given size."""

    kN_alg2: float
    kN_alg1_monotone: float
    kN_alg1_general: float


@dataclass(frozen=True)
class StabilityReport:
    cond: float
    growth: float
    kN_alg2: float
    kN_alg1_monotone: float
    kN_alg1_general: float
    case: str


@dataclass(frozen=True)
class ErrorMetrics:
    """Normalized error measurements; entries are inf when a denominator is zero."""

    s: int
    error1: float = math.nan
    error2: float = math.nan
    error3: tuple = field(default_factory=tuple)


def condition_number(problem: InterpProblem, spec: EvalSpec) -> float:
    """Sensitivity of the prefix values to relative perturbations of the samples.

    The ratio of the largest absolute term sum to the largest exact prefix
    magnitude; both sides come from the wide evaluator.
    """
    num = max(condition_sums(problem, spec))
    wide_vals = _oracle_prefix_wide(problem.knots, problem.values, spec.z, spec.t)
    den = max(abs(v).to_float() for v in wide_vals)
    if den == 0.0:
        raise DegenerateConditioning("every exact prefix value is zero")
    return num / den


def growth_constant_L(knots) -> float:
    """Largest triangle ratio (|z_i-z_j| + |z_j-z_k|) / |z_i-z_k| over i<j<k.

    Returns 1.0 for fewer than three knots.  Ratios are formed in wide
    arithmetic so collinear index-ordered knots (sorted real data, points
    equally spaced along a segment) give exactly 1.0.
    """
    ks = [as_scalar(k) for k in knots]
    if len(set(ks)) != len(ks):
        raise DistinctnessViolation("knots must be pairwise distinct")
    n = len(ks)
    if n < 3:
        return 1.0

    # Pairwise distance matrix in wide precision; the ratio only ever sees
    # magnitudes, so real and complex data share the code from here on.
    if all(is_real(k) for k in ks):
        arr = np.array([float(k) for k in ks])
        dist = abs(DD(arr[:, None]) - DD(arr[None, :]))
    else:
        re = np.array([complex(k).real for k in ks])
        im = np.array([complex(k).imag for k in ks])
        dre = DD(re[:, None]) - DD(re[None, :])
        dim = DD(im[:, None]) - DD(im[None, :])
        dist = (dre * dre + dim * dim).sqrt()

    above = np.triu(np.ones((n, n), dtype=bool), k=1)  # k > j
    best = 1.0
    with np.errstate(divide="ignore", invalid="ignore"):
        for i in range(n - 2):
            row_hi, row_lo = dist.hi[i], dist.lo[i]
            num = DD(row_hi[i + 1 :, None], row_lo[i + 1 :, None]) + DD(
                dist.hi[i + 1 :], dist.lo[i + 1 :]
            )
            rat = (num / DD(row_hi[None, :], row_lo[None, :])).to_float()
            m = float(np.max(np.where(above[i + 1 :], rat, 0.0)))
            if m > best:
                best = m
    return best


def stability_bounds(n: int, case: str, growth: float = 1.0) -> StabilityBounds:
    """Stability constants for problem size n (n+1 knots).

    The product-sum evaluator admits (n+1)*d for any ordering; the
    triangular scheme admits n*d when the growth constant is 1 (sorted
    real knots, or knots equally spaced along a segment) and n*d*growth^(n-1)
    in general.  d is the per-operation rounding constant of the case.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if growth < 1.0:
        raise ValueError("growth constant is always >= 1")
    d = rounding_constant(case)
    try:
        amplification = growth ** (n - 1)
    except OverflowError:
        amplification = math.inf
    return StabilityBounds(
        kN_alg2=(n + 1) * d,
        kN_alg1_monotone=n * d,
        kN_alg1_general=n * d * amplification,
    )


def stability_report(problem: InterpProblem, spec: EvalSpec) -> StabilityReport:
    """Condition number, growth constant, and stability bounds in one record."""
    case = REAL if problem.is_real and spec.is_real else COMPLEX
    growth = growth_constant_L(problem.knots)
    bounds = stability_bounds(problem.degree, case, growth)
    return StabilityReport(
        cond=condition_number(problem, spec),
        growth=growth,
        kN_alg2=bounds.kN_alg2,
        kN_alg1_monotone=bounds.kN_alg1_monotone,
        kN_alg1_general=bounds.kN_alg1_general,
        case=case,
    )


def monomial(x, s: int):
    """x**s by repeated working-precision multiplication (deterministic)."""
    acc = 1.0
    for _ in range(s):
        acc = acc * x
    return acc


def monomial_values(knots, s: int) -> list:
    return [monomial(k, s) for k in knots]


def _require_monomial_problem(problem: InterpProblem, s: int):
    if s < 0:
        raise ValueError("monomial degree s must be >= 0")
    for zj, fj in zip(problem.knots, problem.values):
        if fj != monomial(zj, s):
            raise ValueError(
                f"values must sample the degree-{s} monomial at the knots"
            )


def _high_coefficient_max(computed_coeffs, problem, s) -> float:
    if len(computed_coeffs) != len(problem):
        raise ShapeError(
            f"{len(computed_coeffs)} coefficients for {len(problem)} knots"
        )
    if problem.degree < s + 2:
        raise ShapeError(
            f"degree {problem.degree} leaves no coefficients above s+1={s + 1}"
        )
    _require_monomial_problem(problem, s)
    return max(magnitude(c) for c in computed_coeffs[s + 2 :])


def error1(computed_coeffs, problem: InterpProblem, s: int) -> float:
    """Largest spurious high-order coefficient over the perturbation weight.

    For monomial samples the exact coefficients above index s vanish, so
    any computed mass there is pure rounding error; it is normalized by
    the unit roundoff times the largest absolute term sum.  A stable
    algorithm keeps this at or below its stability constant.
    """
    num = _high_coefficient_max(computed_coeffs, problem, s)
    den = unit_roundoff() * max(condition_sums(problem, NEWTON_COEFFICIENTS))
    if den == 0.0:
        raise DegenerateConditioning("zero perturbation weight")
    return num / den


def error2(computed_coeffs, problem: InterpProblem, s: int) -> float:
    """Largest spurious high-order coefficient over the largest exact coefficient."""
    num = _high_coefficient_max(computed_coeffs, problem, s)
    exact = _oracle_prefix_wide(
        problem.knots, problem.values, NEWTON_COEFFICIENTS.z, NEWTON_COEFFICIENTS.t
    )
    cmax = max(abs(c).to_float() for c in exact)
    if cmax == 0.0:
        raise DegenerateConditioning("every exact coefficient is zero")
    return num / (unit_roundoff() * cmax)


def newton_coefficient_errors(
    computed_coeffs, problem: InterpProblem, s: int
) -> ErrorMetrics:
    """Both coefficient metrics, with zero denominators flagged as inf."""
    try:
        e1 = error1(computed_coeffs, problem, s)
    except DegenerateConditioning:
        e1 = math.inf
    try:
        e2 = error2(computed_coeffs, problem, s)
    except DegenerateConditioning:
        e2 = math.inf
    return ErrorMetrics(s=s, error1=e1, error2=e2)


EVALUATORS = ("alg1", "alg2", "oracle")


def _evaluate_final_prefix(problem, zs, evaluator):
    knots, values = problem.knots, problem.values
    if evaluator == "alg1":
        p = _alg1_core(knots, values, zs, 1.0)
        last = p[0][-1]
        return last + zs * 0 if not isinstance(last, np.ndarray) else last
    if evaluator == "alg2":
        hits = np.zeros(zs.shape, dtype=bool)
        for zk in knots:
            hits |= zs == 1.0 * zk
        with np.errstate(divide="ignore", invalid="ignore"):
            p = _alg2_core(knots, values, zs, 1.0)
        last = p[-1]
        if not isinstance(last, np.ndarray):
            last = last + zs * 0
        if hits.any():
            last = np.array(last)
            for k in np.nonzero(hits)[0]:
                spec = EvalSpec(z=zs[k].item(), t=1.0)
                last[k] = algorithm2_prefix(problem, spec)[-1]
        return last
    if evaluator == "oracle":
        vals = [
            narrow(_oracle_prefix_wide(knots, values, as_scalar(z.item()), 1.0)[-1])
            for z in zs
        ]
        return np.array(vals)
    raise ValueError(f"evaluator must be one of {EVALUATORS}")


def error3_table(
    problem: InterpProblem,
    z_points,
    evaluators,
    s: int = 7,
    on_degenerate: str = "raise",
):
    """Normalized evaluation error at each z for one or more evaluators.

    Each row is (z, err_for_first_evaluator, ...).  The error is the
    distance of the evaluator's final prefix value from the monomial value
    z**s, over the unit roundoff times the largest absolute term sum at z.
    ``on_degenerate="flag"`` reports inf where that sum vanishes instead
    of raising.
    """
    _require_monomial_problem(problem, s)
    for ev in evaluators:
        if ev not in EVALUATORS:
            raise ValueError(f"evaluator must be one of {EVALUATORS}")
    if on_degenerate not in ("raise", "flag"):
        raise ValueError("on_degenerate must be 'raise' or 'flag'")

    pts = [as_scalar(z) for z in z_points]
    cplx = any(not is_real(z) for z in pts) or not problem.is_real
    zs = np.array(pts, dtype=complex if cplx else float)

    wide_sums = _condition_sums_wide(problem.knots, problem.values, zs, 1.0)
    weights = np.max(np.stack([w.to_float() for w in wide_sums]), axis=0)
    den = unit_roundoff() * weights
    if not np.all(den > 0.0):
        if on_degenerate == "raise":
            raise DegenerateConditioning("zero perturbation weight at some z")
        den = np.where(den > 0.0, den, np.nan)

    ref = wide_pow(wide(zs), s)
    columns = []
    for ev in evaluators:
        p_last = _evaluate_final_prefix(problem, zs, ev)
        numer = abs(wide(p_last) - ref).to_float()
        with np.errstate(invalid="ignore"):
            ratio = numer / den
        columns.append(np.where(np.isnan(ratio), math.inf, ratio))
    return [
        (pts[k], *(float(col[k]) for col in columns)) for k in range(len(pts))
    ]


def error3(
    problem: InterpProblem,
    z_points,
    evaluator: str = "alg2",
    s: int = 7,
    on_degenerate: str = "raise",
):
    """Normalized evaluation error at each z; list of (z, error) pairs."""
    rows = error3_table(problem, z_points, (evaluator,), s, on_degenerate)
    return [(z, err) for z, err, in rows]
