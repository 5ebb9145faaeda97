"""Command-line surface: figure data, verification suite, spectrum sweeps.

All delimited output is deterministic: 17 significant digits, '.' decimal
separator, '\\n' line endings, rows emitted in grid order no matter how many
workers computed them.  Exit codes: 0 success, 1 verification or solver
failure, 2 usage error.  The default quadrature tolerance can be overridden
with the BIAXPOT_TOL environment variable or the --tol flag.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Sequence

import numpy as np

from .fields import AxialConfig
from .potentials import (
    PotentialKind,
    effective_potential,
    phi_at_electron,
    phi_minus_infinity,
    phi_tilde_at_electron,
    single_particle_potential,
)
from .quadrature import QuadratureError, Tolerance
from .spectrum import BoundStateShortfallError, BracketingError, spectrum_spread
from .specfun import C_BETA_QUARTER
from .verify import run_checks

__all__ = ["main"]

_TOL_ENV_VAR = "BIAXPOT_TOL"
_SOLVER_TOL = 1e-8
_PLOT_AUTO = "__auto__"
_PLOT_DEFAULT = "__default__"


class _UsageError(Exception):
    pass


class _PointFailure(Exception):
    def __init__(self, r: float, cause: Exception):
        super().__init__(f"computation failed at r = {r!r}: {cause}")
        self.r = r
        self.cause = cause


def _fmt(value: float) -> str:
    return f"{value:.17g}"


def _resolve_tolerance(args: argparse.Namespace) -> Tolerance:
    value = getattr(args, "tol", None)
    if value is None:
        env = os.environ.get(_TOL_ENV_VAR)
        if env is not None:
            try:
                value = float(env)
            except ValueError as exc:
                raise _UsageError(f"{_TOL_ENV_VAR} must be a float, got {env!r}") from exc
    if value is None:
        return Tolerance()
    if not (0.0 < value < 1.0):
        raise _UsageError(f"tolerance must be in (0, 1), got {value!r}")
    return Tolerance(absolute=value, relative=value)


def _make_grid(args: argparse.Namespace) -> np.ndarray:
    if not (args.r_min > 0.0 and args.r_max > 0.0):
        raise _UsageError("r-min and r-max must be positive")
    if not args.r_min < args.r_max:
        raise _UsageError(f"require r-min < r-max, got {args.r_min} >= {args.r_max}")
    if args.points < 2:
        raise _UsageError(f"points must be >= 2, got {args.points}")
    if args.log_spacing:
        return np.geomspace(args.r_min, args.r_max, args.points)
    return np.linspace(args.r_min, args.r_max, args.points)


def _compute_rows(fn: Callable, grid: Sequence, workers: int) -> list:
    def guarded(r):
        try:
            return fn(r)
        except QuadratureError as exc:
            raise _PointFailure(float(r), exc)

    if workers <= 1:
        return [guarded(r) for r in grid]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(guarded, grid))


def _serialize(header: list[str], rows: list[tuple], fmt: str) -> str:
    if fmt == "json":
        payload = {"header": header, "rows": [list(row) for row in rows]}
        return json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n"
    lines = [",".join(header)]
    for row in rows:
        cells = []
        for v in row:
            if v is None:
                cells.append("NA")
            elif isinstance(v, float):
                cells.append(_fmt(v))
            else:
                cells.append(str(v))
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


def _write_output(text: str, path: str) -> None:
    if path == "-":
        sys.stdout.write(text)
        return
    with open(path, "w", newline="") as fh:
        fh.write(text)


def _plot_target(args: argparse.Namespace) -> str | None:
    if getattr(args, "no_plot", False):
        return None
    choice = getattr(args, "plot", _PLOT_DEFAULT)
    if choice == _PLOT_DEFAULT:
        if args.out == "-":
            return None
        return os.path.splitext(args.out)[0] + ".png"
    if choice == _PLOT_AUTO:
        if args.out == "-":
            raise _UsageError("--plot needs an explicit path when writing data to stdout")
        return os.path.splitext(args.out)[0] + ".png"
    return choice


def _cmd_fig1(args: argparse.Namespace) -> int:
    tol = _resolve_tolerance(args)
    grid = _make_grid(args)

    def row(r: float) -> tuple[float, float]:
        return (float(r), phi_minus_infinity(AxialConfig(args.beta, float(r)), tol))

    rows = _compute_rows(row, grid, args.workers)
    _write_output(_serialize(["r", "phi_minus_infinity"], rows, args.format), args.out)
    plot_path = _plot_target(args)
    if plot_path is not None:
        from .plotting import render_fig1

        render_fig1(rows, plot_path, args.log_spacing)
    return 0


def _cmd_fig2(args: argparse.Namespace) -> int:
    tol = _resolve_tolerance(args)
    grid = _make_grid(args)
    quarter_c = 0.25 * C_BETA_QUARTER.value
    beta = args.beta

    def row(r: float) -> tuple[float, float, float, float, float]:
        cfg = AxialConfig(beta, float(r))
        # One quadrature per curve; COULOMB is closed-form.
        def1 = -(beta * phi_at_electron(cfg, tol) + quarter_c)
        def2 = -(beta * phi_tilde_at_electron(cfg, tol) + quarter_c)
        coulomb = -beta / float(r)
        single = -beta * single_particle_potential(beta, float(r), tol)
        return (float(r), def1, def2, coulomb, single)

    rows = _compute_rows(row, grid, args.workers)
    _write_output(_serialize(["r", "def1", "def2", "coulomb", "single"], rows, args.format), args.out)
    plot_path = _plot_target(args)
    if plot_path is not None:
        from .plotting import render_fig2

        render_fig2(rows, plot_path, args.log_spacing)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    tol = _resolve_tolerance(args)
    perturb = None
    if args.perturb is not None:
        target, amount = args.perturb
        try:
            perturb = (target, float(amount))
        except ValueError as exc:
            raise _UsageError(f"--perturb amount must be a float, got {amount!r}") from exc
    results = run_checks(perturb=perturb, tol=tol)
    if args.json:
        payload = {
            "checks": [
                {
                    "name": c.name,
                    "residual": c.residual,
                    "threshold": c.threshold,
                    "passed": c.passed,
                    "detail": c.detail,
                }
                for c in results
            ],
            "passed": all(c.passed for c in results),
        }
        sys.stdout.write(json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n")
    else:
        for c in results:
            status = "PASS" if c.passed else "FAIL"
            sys.stdout.write(
                f"{status} {c.name:22s} residual={c.residual:.6e} threshold={c.threshold:.1e}\n"
            )
            if not c.passed:
                sys.stdout.write(f"     {c.detail}\n")
        n_pass = sum(c.passed for c in results)
        sys.stdout.write(f"{n_pass}/{len(results)} checks passed\n")
    return 0 if all(c.passed for c in results) else 1


def _parse_beta_list(text: str) -> list[float]:
    try:
        betas = [float(tok) for tok in text.split(",") if tok.strip()]
    except ValueError as exc:
        raise _UsageError(f"bad --beta list {text!r}") from exc
    if not betas or any(b <= 0.0 for b in betas):
        raise _UsageError(f"--beta needs positive values, got {text!r}")
    return betas


def _cmd_spectrum(args: argparse.Namespace) -> int:
    tol = _resolve_tolerance(args)
    betas = _parse_beta_list(args.beta)
    if args.levels < 1:
        raise _UsageError(f"--levels must be >= 1, got {args.levels}")
    kind1 = PotentialKind(args.kind_def1)
    kind2 = PotentialKind(args.kind_def2)

    def sweep(beta: float):
        try:
            spreads = spectrum_spread(
                beta,
                args.levels,
                kind_def1=kind1,
                kind_def2=kind2,
                mesh_points=args.mesh_points,
                tol=tol,
            )
            return [(beta, s.n, s.e_def1, s.e_def2, s.delta) for s in spreads]
        except BoundStateShortfallError as exc:
            sys.stderr.write(
                f"warning: beta={beta:g} supports only {exc.available} bound states "
                f"on the mesh; requested {args.levels}\n"
            )
            rows = []
            if exc.available >= 1:
                spreads = spectrum_spread(
                    beta,
                    exc.available,
                    kind_def1=kind1,
                    kind_def2=kind2,
                    mesh_points=args.mesh_points,
                    tol=tol,
                )
                rows = [(beta, s.n, s.e_def1, s.e_def2, s.delta) for s in spreads]
            for n in range(len(rows) + 1, args.levels + 1):
                rows.append((beta, n, None, None, None))
            return rows

    per_beta = _compute_rows(sweep, betas, args.workers)
    rows = [row for chunk in per_beta for row in chunk]
    _write_output(_serialize(["beta", "n", "E_def1", "E_def2", "delta"], rows, args.format), args.out)

    solved = [row for row in rows if row[2] is not None]
    for beta, n, _e1, _e2, delta in solved:
        if abs(delta) > _SOLVER_TOL:
            sys.stderr.write(
                f"note: beta={beta:g} n={n}: |delta|={abs(delta):.3e} exceeds the "
                f"solver tolerance {_SOLVER_TOL:g} (significant spread)\n"
            )
    if solved:
        sys.stderr.write(
            "note: spread values are numerical evidence produced by this solver, "
            "not published reference data\n"
        )
    plot_path = _plot_target(args)
    if plot_path is not None and solved:
        from .plotting import render_spectrum

        render_spectrum(rows, plot_path)
    return 0 if solved else 1


def _add_output_options(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--out", default="-", help="output path ('-' for stdout)")
    sub.add_argument("--format", choices=("csv", "json"), default="csv", help="output format")
    sub.add_argument("--workers", type=int, default=os.cpu_count() or 1,
                     help="worker pool size for grid points")
    sub.add_argument("--tol", type=float, default=None,
                     help=f"quadrature tolerance override (also {_TOL_ENV_VAR})")
    sub.add_argument("--plot", nargs="?", const=_PLOT_AUTO, default=_PLOT_DEFAULT,
                     metavar="PATH",
                     help="render a figure alongside the data (default: next to --out)")
    sub.add_argument("--no-plot", action="store_true", help="skip figure rendering")


def _add_range_options(sub: argparse.ArgumentParser, r_min: float, r_max: float,
                       points: int, log_default: bool) -> None:
    sub.add_argument("--beta", type=float, default=1.0, help="Born parameter")
    sub.add_argument("--r-min", type=float, default=r_min, help="smallest separation")
    sub.add_argument("--r-max", type=float, default=r_max, help="largest separation")
    sub.add_argument("--points", type=int, default=points, help="grid size (>= 2)")
    spacing = sub.add_mutually_exclusive_group()
    spacing.add_argument("--log", dest="log_spacing", action="store_true",
                         help="log-spaced grid")
    spacing.add_argument("--lin", dest="log_spacing", action="store_false",
                         help="linearly spaced grid")
    sub.set_defaults(log_spacing=log_default)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="biaxpot",
        description="Born-Infeld two-charge axial potentials: figure data, "
                    "verification suite, spectrum sweeps.",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    fig1 = subparsers.add_parser("fig1", help="far-end potential value vs separation")
    _add_range_options(fig1, r_min=0.01, r_max=50.0, points=200, log_default=True)
    _add_output_options(fig1)
    fig1.set_defaults(func=_cmd_fig1)

    fig2 = subparsers.add_parser("fig2", help="the four effective-potential curves")
    _add_range_options(fig2, r_min=0.02, r_max=10.0, points=500, log_default=False)
    _add_output_options(fig2)
    fig2.set_defaults(func=_cmd_fig2)

    verify = subparsers.add_parser("verify", help="run the cross-check suite")
    verify.add_argument("--json", action="store_true", help="machine-readable report")
    verify.add_argument("--tol", type=float, default=None,
                        help=f"quadrature tolerance override (also {_TOL_ENV_VAR})")
    verify.add_argument("--perturb", nargs=2, metavar=("TARGET", "AMOUNT"),
                        default=None, help=argparse.SUPPRESS)  # test hook
    verify.set_defaults(func=_cmd_verify)

    spectrum = subparsers.add_parser("spectrum", help="eigenvalue spread between definitions")
    spectrum.add_argument("--beta", default="0.2", help="comma-separated Born parameters")
    spectrum.add_argument("--levels", type=int, default=2, help="bound states per beta")
    spectrum.add_argument("--kind-def1", choices=[k.value for k in PotentialKind],
                          default="def1", help="potential kind for the E_def1 column")
    spectrum.add_argument("--kind-def2", choices=[k.value for k in PotentialKind],
                          default="def2", help="potential kind for the E_def2 column")
    spectrum.add_argument("--mesh-points", type=int, default=20_000, help="radial mesh size")
    _add_output_options(spectrum)
    spectrum.set_defaults(func=_cmd_spectrum)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _UsageError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except _PointFailure as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1
    except (QuadratureError, BracketingError, BoundStateShortfallError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
