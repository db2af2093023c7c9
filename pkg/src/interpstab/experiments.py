"""Experiment runners producing the delimited reports behind the CLI."""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import ordering as ordering_mod
from .analysis import (
    error3_table,
    monomial_values,
    newton_coefficient_errors,
    stability_report,
)
from .errors import ConfigError, DegenerateConditioning
from .generation import KnotSource, generate_knots
from .interp import algorithm1_prefix, algorithm2_prefix, divided_differences
from .numerics import oracle_prefix_values, unit_roundoff
from .problem import EvalSpec, InterpProblem, Scalar

ALGORITHM_CHOICES = ("alg1", "alg2", "both", "oracle")


def _fmt(x: float) -> str:
    """Scientific notation, 16 significant digits; round-trips binary64."""
    if isinstance(x, float) and math.isinf(x):
        return "inf"
    return "%.15e" % (x + 0.0)


def render_csv(comments, header, rows) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append(",".join(header))
    lines.extend(",".join(row) for row in rows)
    return "\n".join(lines) + "\n"


_ORDER_FUNCS = {
    ordering_mod.AS_GIVEN: ordering_mod.order_as_given,
    ordering_mod.LEJA: ordering_mod.order_leja,
    ordering_mod.INCREASING: lambda p: ordering_mod.order_monotone(
        p, ordering_mod.INCREASING
    ),
    ordering_mod.DECREASING: lambda p: ordering_mod.order_monotone(
        p, ordering_mod.DECREASING
    ),
}


def reorder(problem: InterpProblem, strategy: str) -> InterpProblem:
    try:
        func = _ORDER_FUNCS[strategy]
    except KeyError:
        raise ConfigError("--ordering", f"unknown strategy {strategy!r}") from None
    return func(problem)[0]


def _expand_algorithms(algorithm: str) -> tuple[str, ...]:
    if algorithm == "both":
        return ("alg1", "alg2")
    if algorithm in ("alg1", "alg2", "oracle"):
        return (algorithm,)
    raise ConfigError("--alg", f"expected one of {ALGORITHM_CHOICES}, got {algorithm!r}")


def _newton_coefficients(problem: InterpProblem, algorithm: str):
    if algorithm == "alg1":
        return divided_differences(problem, method="classical")
    if algorithm == "alg2":
        return divided_differences(problem, method="stable")
    return oracle_prefix_values(problem, EvalSpec(z=1.0, t=0.0))


@dataclass(frozen=True)
class NewtonTableConfig:
    n: int
    degree: int
    source: KnotSource
    orderings: tuple[str, ...]
    algorithm: str


def run_newton_table(config: NewtonTableConfig) -> str:
    """Coefficient error table: one row per (ordering, algorithm) cell."""
    if config.degree < 0:
        raise ConfigError("--degree", "monomial degree must be >= 0")
    knots = generate_knots(config.source, config.n)
    n = len(knots) - 1
    if n < config.degree + 2:
        raise ConfigError(
            "--n",
            f"n={n} leaves no coefficients above degree+1; need n >= {config.degree + 2}",
        )
    base = InterpProblem(knots, monomial_values(knots, config.degree))
    algorithms = _expand_algorithms(config.algorithm)

    rows = []
    for strategy in config.orderings:
        problem = reorder(base, strategy)
        for alg in algorithms:
            coeffs = _newton_coefficients(problem, alg)
            metrics = newton_coefficient_errors(coeffs, problem, config.degree)
            rows.append(
                [str(n), strategy, alg, _fmt(metrics.error1), _fmt(metrics.error2)]
            )

    comments = [
        "interpstab newton-table",
        f"n={n} degree={config.degree}",
        f"knots={config.source.describe()}",
        f"ordering={','.join(config.orderings)} algorithm={config.algorithm}",
        f"unit_roundoff={_fmt(unit_roundoff())}",
    ]
    return render_csv(comments, ["N", "ordering", "algorithm", "error1", "error2"], rows)


@dataclass(frozen=True)
class EvalGrid:
    a: float
    b: float
    count: int

    def points(self) -> list[float]:
        if self.count < 1:
            raise ConfigError("--eval-grid", "need at least one point")
        if self.count == 1:
            return [self.a]
        if self.a == self.b:
            raise ConfigError("--eval-grid", "grid endpoints must differ")
        h = (self.b - self.a) / (self.count - 1)
        return [self.a + k * h for k in range(self.count)]


@dataclass(frozen=True)
class FigureSweepConfig:
    n: int
    degree: int
    source: KnotSource
    ordering: str
    algorithm: str
    grid: EvalGrid


@dataclass(frozen=True)
class SweepResult:
    csv: str
    columns: tuple[str, ...]  # error column names, one per evaluator
    rows: list  # (z, err..., ) tuples with float entries


def run_figure_sweep(config: FigureSweepConfig) -> SweepResult:
    """Normalized evaluation error along a grid, one column per evaluator."""
    if config.degree < 0:
        raise ConfigError("--degree", "monomial degree must be >= 0")
    knots = generate_knots(config.source, config.n)
    base = InterpProblem(knots, monomial_values(knots, config.degree))
    problem = reorder(base, config.ordering)
    evaluators = _expand_algorithms(config.algorithm)

    grid = config.grid.points()
    rows = error3_table(problem, grid, evaluators, config.degree, on_degenerate="flag")

    columns = tuple(f"error3_{ev}" for ev in evaluators)
    text_rows = [[_fmt(row[0])] + [_fmt(v) for v in row[1:]] for row in rows]
    comments = [
        "interpstab figure-sweep",
        f"n={len(knots) - 1} degree={config.degree}",
        f"knots={config.source.describe()}",
        f"ordering={config.ordering} algorithm={config.algorithm}",
        f"eval_grid=[{config.grid.a!r},{config.grid.b!r}] count={config.grid.count}",
        f"unit_roundoff={_fmt(unit_roundoff())}",
    ]
    csv = render_csv(comments, ["z"] + list(columns), text_rows)
    return SweepResult(csv=csv, columns=columns, rows=rows)


@dataclass(frozen=True)
class PointConfig:
    knots: tuple[Scalar, ...]
    values: tuple[Scalar, ...]
    source_desc: str
    z: Scalar
    t: Scalar
    algorithm: str


def _scalar_text(x: Scalar) -> str:
    if isinstance(x, complex):
        return f"{_fmt(x.real)} {_fmt(x.imag)}"
    return _fmt(x)


def _report_lines(problem: InterpProblem, spec: EvalSpec) -> list[str]:
    try:
        report = stability_report(problem, spec)
        cond = report.cond
    except DegenerateConditioning:
        report = None
        cond = math.inf
    lines = [f"cond={_fmt(cond)}"]
    if report is not None:
        lines += [
            f"growth_constant={_fmt(report.growth)}",
            f"kN_alg2={_fmt(report.kN_alg2)}",
            f"kN_alg1_monotone={_fmt(report.kN_alg1_monotone)}",
            f"kN_alg1_general={_fmt(report.kN_alg1_general)}",
            f"case={report.case}",
        ]
    return lines


def run_single_point(config: PointConfig) -> str:
    """Prefix values at one (z, t) plus the stability report, as plain text."""
    problem = InterpProblem(config.knots, config.values)
    spec = EvalSpec(z=config.z, t=config.t)
    evaluators = _expand_algorithms(config.algorithm)

    series = {}
    for ev in evaluators:
        if ev == "alg1":
            series[ev] = algorithm1_prefix(problem, spec)[0]
        elif ev == "alg2":
            series[ev] = algorithm2_prefix(problem, spec)
        else:
            series[ev] = oracle_prefix_values(problem, spec)

    lines = [
        f"# interpstab point  knots={config.source_desc}",
        f"# z={_scalar_text(spec.z)}  t={_scalar_text(spec.t)}",
        "n " + " ".join(f"p_{ev}" for ev in evaluators),
    ]
    for i in range(len(problem)):
        entries = " ".join(_scalar_text(series[ev][i]) for ev in evaluators)
        lines.append(f"{i} {entries}")
    lines.extend(_report_lines(problem, spec))
    return "\n".join(lines) + "\n"


def run_cond(config: PointConfig) -> str:
    """Stability report only, as plain text."""
    problem = InterpProblem(config.knots, config.values)
    spec = EvalSpec(z=config.z, t=config.t)
    lines = [
        f"# interpstab cond  knots={config.source_desc}",
        f"# z={_scalar_text(spec.z)}  t={_scalar_text(spec.t)}",
    ]
    lines.extend(_report_lines(problem, spec))
    return "\n".join(lines) + "\n"
