"""Command-line experiment harness.

Subcommands:
  newton-table   coefficient error table (CSV)
  figure-sweep   evaluation error along a grid (CSV + figure)
  point          prefix values and stability report at one (z, t)
  cond           stability report only
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import ordering as ordering_mod
from .analysis import monomial_values
from .errors import ConfigError, InterpstabError
from .experiments import (
    EvalGrid,
    FigureSweepConfig,
    NewtonTableConfig,
    PointConfig,
    run_cond,
    run_figure_sweep,
    run_newton_table,
    run_single_point,
)
from .generation import KnotSource, generate_knots, read_scalar_file

_ORDERING_NAMES = {
    "asis": ordering_mod.AS_GIVEN,
    "inc": ordering_mod.INCREASING,
    "dec": ordering_mod.DECREASING,
    "leja": ordering_mod.LEJA,
}


def _add_source_args(sp, with_n=True):
    if with_n:
        sp.add_argument("--n", type=int, help="prefix degree; generators emit n+1 knots")
    sp.add_argument(
        "--equispaced", nargs=2, type=float, metavar=("A", "B"),
        help="knots a + j*(b-a)/n",
    )
    sp.add_argument(
        "--random", nargs=2, type=float, metavar=("A", "B"),
        help="seeded uniform knots in [a, b)",
    )
    sp.add_argument("--seed", type=int, help="seed for --random")
    sp.add_argument(
        "--complex-segment", nargs=4, type=float, metavar=("REA", "IMA", "REB", "IMB"),
        help="knots equally spaced along a complex segment",
    )
    sp.add_argument("--knots", type=str, metavar="PATH", help="knot file, one scalar per line")


def _resolve_source(args) -> tuple[KnotSource, int]:
    chosen = [
        name
        for name, given in (
            ("--equispaced", args.equispaced),
            ("--random", args.random),
            ("--complex-segment", args.complex_segment),
            ("--knots", args.knots),
        )
        if given is not None
    ]
    if len(chosen) != 1:
        raise ConfigError(
            "--equispaced/--random/--complex-segment/--knots",
            "choose exactly one knot source",
        )
    if args.knots is not None:
        knots = read_scalar_file(args.knots)
        n = len(knots) - 1
        if getattr(args, "n", None) is not None and args.n != n:
            raise ConfigError("--n", f"file provides {n + 1} knots but --n={args.n}")
        return KnotSource(kind="file", path=args.knots), n
    n = getattr(args, "n", None)
    if n is None:
        raise ConfigError("--n", "required with generated knots")
    if args.equispaced is not None:
        a, b = args.equispaced
        return KnotSource(kind="equispaced", a=a, b=b), n
    if args.random is not None:
        if args.seed is None:
            raise ConfigError("--seed", "a seed is required with --random")
        a, b = args.random
        return KnotSource(kind="random", a=a, b=b, seed=args.seed), n
    ra, ia, rb, ib = args.complex_segment
    return KnotSource(kind="complex-segment", a=complex(ra, ia), b=complex(rb, ib)), n


def _parse_scalar_flag(flag, parts):
    if parts is None:
        return None
    if len(parts) == 1:
        return parts[0]
    if len(parts) == 2:
        return complex(parts[0], parts[1])
    raise ConfigError(flag, "expects RE or RE IM")


def _write_text(path, text: str):
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="interpstab",
        description="Interpolation stability experiments: coefficient and "
        "evaluation error reports with reproducible seeded inputs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    nt = sub.add_parser("newton-table", help="coefficient error table (CSV)")
    _add_source_args(nt)
    nt.add_argument("--degree", type=int, default=7, help="monomial degree s (default 7)")
    nt.add_argument(
        "--ordering", action="append", choices=sorted(_ORDERING_NAMES),
        help="repeatable; one table block per ordering (default asis)",
    )
    nt.add_argument("--alg", default="both", choices=["alg1", "alg2", "both", "oracle"])
    nt.add_argument("--out", required=True, metavar="PATH")

    fs = sub.add_parser("figure-sweep", help="evaluation error along a grid (CSV + figure)")
    _add_source_args(fs)
    fs.add_argument("--degree", type=int, default=7)
    fs.add_argument("--ordering", default="asis", choices=sorted(_ORDERING_NAMES))
    fs.add_argument("--alg", default="both", choices=["alg1", "alg2", "both", "oracle"])
    fs.add_argument(
        "--eval-grid", nargs=3, type=float, required=True, metavar=("A", "B", "COUNT")
    )
    fs.add_argument("--out", required=True, metavar="PATH")
    fs.add_argument("--fig", metavar="PATH", help="figure path (default: OUT with .png)")
    fs.add_argument("--no-fig", action="store_true", help="skip figure rendering")

    pt = sub.add_parser("point", help="prefix values and stability report at one (z, t)")
    _add_source_args(pt)
    pt.add_argument("--values", type=str, metavar="PATH", help="value file; else monomial via --degree")
    pt.add_argument("--degree", type=int, help="monomial degree for generated values")
    pt.add_argument("--z", nargs="+", type=float, required=True, metavar="RE [IM]")
    pt.add_argument("--t", nargs="+", type=float, default=[1.0], metavar="RE [IM]")
    pt.add_argument("--alg", default="both", choices=["alg1", "alg2", "both", "oracle"])
    pt.add_argument("--out", metavar="PATH", help="also write the report to a file")

    cd = sub.add_parser("cond", help="stability report only")
    _add_source_args(cd)
    cd.add_argument("--values", type=str, metavar="PATH")
    cd.add_argument("--degree", type=int)
    cd.add_argument("--z", nargs="+", type=float, required=True, metavar="RE [IM]")
    cd.add_argument("--t", nargs="+", type=float, default=[1.0], metavar="RE [IM]")
    cd.add_argument("--out", metavar="PATH")
    return parser


def _point_config(args, algorithm) -> PointConfig:
    source, n = _resolve_source(args)
    knots = generate_knots(source, n)
    if args.values is not None:
        values = read_scalar_file(args.values)
        if len(values) != len(knots):
            raise ConfigError(
                "--values", f"{len(values)} values for {len(knots)} knots"
            )
    elif args.degree is not None:
        values = monomial_values(knots, args.degree)
    else:
        raise ConfigError("--values/--degree", "provide sample values one way")
    return PointConfig(
        knots=tuple(knots),
        values=tuple(values),
        source_desc=source.describe(),
        z=_parse_scalar_flag("--z", args.z),
        t=_parse_scalar_flag("--t", args.t),
        algorithm=algorithm,
    )


def _run(args) -> int:
    if args.command == "newton-table":
        source, n = _resolve_source(args)
        orderings = tuple(_ORDERING_NAMES[o] for o in (args.ordering or ["asis"]))
        config = NewtonTableConfig(
            n=n, degree=args.degree, source=source,
            orderings=orderings, algorithm=args.alg,
        )
        _write_text(args.out, run_newton_table(config))
        return 0

    if args.command == "figure-sweep":
        source, n = _resolve_source(args)
        a, b, count = args.eval_grid
        if count != int(count) or int(count) < 1:
            raise ConfigError("--eval-grid", "COUNT must be a positive integer")
        config = FigureSweepConfig(
            n=n, degree=args.degree, source=source,
            ordering=_ORDERING_NAMES[args.ordering], algorithm=args.alg,
            grid=EvalGrid(a=a, b=b, count=int(count)),
        )
        result = run_figure_sweep(config)
        _write_text(args.out, result.csv)
        if not args.no_fig:
            from .plotting import render_error_curves

            fig_path = args.fig or str(Path(args.out).with_suffix(".png"))
            render_error_curves(
                result, fig_path,
                title=f"ordering={_ORDERING_NAMES[args.ordering]}, degree={args.degree}",
            )
        return 0

    if args.command == "point":
        text = run_single_point(_point_config(args, args.alg))
    else:  # cond
        text = run_cond(_point_config(args, "alg2"))
    sys.stdout.write(text)
    if args.out:
        _write_text(args.out, text)
    return 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _run(args)
    except InterpstabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OverflowError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
