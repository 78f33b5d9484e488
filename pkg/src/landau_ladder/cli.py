"""Command-line interface: spectrum tables, state sampling, ladder application, verification.

Output contract: data rows go to stdout only, in CSV (default) or JSON
Lines; every float is rendered as lowercase scientific with 17 significant
digits, so identical invocations are byte-identical.  Verification records
are buffered and sorted canonically, which keeps the bytes independent of
--jobs.  runtime_ms is reported as 0.0 unless --timing is given, because
real timings would break that determinism.  Figures requested with
--plot-dir are written as files and their paths are announced on stderr,
never on stdout.

Exit codes: 0 success, 1 a requested check failed, 2 bad flags or a
request outside the validated domain.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from . import ladder as ladder_mod
from .states import FieldConfig, LandauState, QuantumNumbers, energy, radial_value, wavefunction_value
from .velocity import CartesianGrid
from .verification import SUITES, SuiteConfig, format_parameters, run_suites

__all__ = ["main"]

_KNOWN_TOLERANCE_NAMES = frozenset(
    {
        "closed_form_agreement",
        "derivative_finite_difference",
        "identity_residual",
        "exactness",
        "weight_sum",
        "node_interlacing",
        "rule_determinism",
        "normalization",
        "orthogonality",
        "angular_selection",
        "degeneracy",
        "spectral_consistency",
        "ode_residual",
        "ode_perturbation",
        "ladder_action",
        "round_trip",
        "mode_agreement",
        "annihilation",
        "coefficient_monotonicity",
        "operator_forms_agreement",
        "commutator_convergence",
        "eigen_convergence",
        "commutator_residual",
        "eigen_residual",
        "qp_scaling",
        "hamiltonian_linearity",
        "qp_hamiltonian_identity",
        "grid_norm",
    }
)


# ---------------------------------------------------------------------------
# deterministic formatting


def _fmt(x: float) -> str:
    return f"{float(x):.16e}"


def _json_escape(s: str) -> str:
    out = []
    for ch in s:
        if ch == '"':
            out.append('\\"')
        elif ch == "\\":
            out.append("\\\\")
        elif ord(ch) < 0x20:
            out.append(f"\\u{ord(ch):04x}")
        else:
            out.append(ch)
    return "".join(out)


def _json_value(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, float):
        return _fmt(value)
    if isinstance(value, str):
        return f'"{_json_escape(value)}"'
    if isinstance(value, dict):
        inner = ",".join(f'"{_json_escape(k)}":{_json_value(value[k])}' for k in sorted(value))
        return "{" + inner + "}"
    raise TypeError(f"cannot serialize {type(value).__name__}")


def _json_line(pairs) -> str:
    # insertion order preserved: callers fix the key order
    inner = ",".join(f'"{_json_escape(k)}":{_json_value(v)}' for k, v in pairs)
    return "{" + inner + "}"


def _cell(value) -> str:
    if isinstance(value, bool):
        raise TypeError("no boolean cells in the table formats")
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, float):
        return _fmt(value)
    return str(value)


def _emit_table(fmt: str, header: list[str], rows, out) -> None:
    """CSV with a header line, or JSON Lines keyed by the header names.

    Every cell is an int, a float, or a delimiter-free string, so the CSV
    needs no quoting.
    """
    if fmt == "csv":
        out.write(",".join(header) + "\n")
        for row in rows:
            out.write(",".join(_cell(v) for v in row) + "\n")
    else:
        for row in rows:
            out.write(_json_line(zip(header, row)) + "\n")


def _fail(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return 2


# ---------------------------------------------------------------------------
# shared flag helpers


def _parse_zeta_list(text: str, minimum_exclusive: bool):
    try:
        values = [float(tok) for tok in text.split(",") if tok.strip() != ""]
    except ValueError:
        return None
    if not values or any(not np.isfinite(v) for v in values):
        return None
    if minimum_exclusive and any(v <= 0 for v in values):
        return None
    if not minimum_exclusive and any(v < 0 for v in values):
        return None
    return values


def _field_or_none(b: float):
    try:
        return FieldConfig(b)
    except ValueError:
        return None


# ---------------------------------------------------------------------------
# subcommands


def _cmd_spectrum(args) -> int:
    if len(args.field) != 1:
        return _fail("spectrum takes exactly one -B/--field value")
    fc = _field_or_none(args.field[0])
    if fc is None:
        return _fail(f"field strength must be finite and > 0, got {args.field[0]}")
    if args.n_max < 0 or args.n_max > 50:
        return _fail("--n-max must be between 0 and 50")
    rows = []
    for n in range(args.n_max + 1):
        for m in range(args.m_min, args.m_max + 1):
            rows.append((n, m, energy(QuantumNumbers(n, m), fc)))
    _emit_table(args.format, ["n", "m", "energy"], rows, sys.stdout)
    return 0


def _cmd_eval(args) -> int:
    if len(args.field) != 1:
        return _fail("eval takes exactly one -B/--field value")
    fc = _field_or_none(args.field[0])
    if fc is None:
        return _fail(f"field strength must be finite and > 0, got {args.field[0]}")
    if args.n < 0:
        return _fail("--n must be >= 0")
    grid_mode = args.grid_n is not None or args.grid_l is not None
    if (args.zeta is None) == (not grid_mode):
        return _fail("choose exactly one of --zeta or a grid (--grid-N/--grid-L)")

    state = LandauState(QuantumNumbers(args.n, args.m), fc)

    if args.zeta is not None:
        zetas = _parse_zeta_list(args.zeta, minimum_exclusive=False)
        if zetas is None:
            return _fail("--zeta must be a comma list of finite values >= 0")
        values = [float(radial_value(state, z)) for z in zetas]
        _emit_table(args.format, ["zeta", "radial"], zip(zetas, values), sys.stdout)
        if args.plot_dir is not None:
            from . import plots

            path = plots.radial_profile(state, zetas, values, args.plot_dir)
            print(f"figure: {path}", file=sys.stderr)
        return 0

    points = 65 if args.grid_n is None else args.grid_n
    try:
        from .velocity import default_half_extent

        half = default_half_extent(state) if args.grid_l is None else args.grid_l
        grid = CartesianGrid(half, points)
    except ValueError as exc:
        return _fail(str(exc))
    ax = grid.axis()
    rows = []
    for i in range(points):
        for j in range(points):
            x, y = ax[i], ax[j]
            rho = float(np.hypot(x, y))
            phi = float(np.arctan2(y, x))
            psi = wavefunction_value(state, rho, phi)
            rows.append((rho, phi, psi.real, psi.imag))
    _emit_table(args.format, ["rho", "phi", "re", "im"], rows, sys.stdout)
    if args.plot_dir is not None:
        from . import plots

        path = plots.density_heatmap(state, grid.half_extent, points, args.plot_dir)
        print(f"figure: {path}", file=sys.stderr)
    return 0


def _cmd_ladder(args) -> int:
    if len(args.field) != 1:
        return _fail("ladder takes exactly one -B/--field value")
    fc = _field_or_none(args.field[0])
    if fc is None:
        return _fail(f"field strength must be finite and > 0, got {args.field[0]}")
    if args.n < 0:
        return _fail("--n must be >= 0")
    qn = QuantumNumbers(args.n, args.m)
    if not ladder_mod.in_validated_domain(qn, args.direction):
        return _fail(
            f"{args.direction} from n={qn.n} m={qn.m} is outside the validated domain "
            "(raise needs m >= 0; lower needs m >= 1 unless n = 0)"
        )
    zetas = _parse_zeta_list(args.zeta, minimum_exclusive=True)
    if zetas is None:
        return _fail("--zeta must be a comma list of finite values > 0")
    if args.tol <= 0:
        return _fail("--tol must be > 0")

    state = LandauState(qn, fc)
    app = ladder_mod.apply_ladder(state, args.direction, zetas, mode=args.mode)
    applied = app.values()

    if app.target is None:
        reference = np.zeros_like(applied)
        scale = state.norm_const
    else:
        target_state = LandauState(app.target, fc)
        reference = app.coefficient * radial_value(target_state, np.asarray(zetas))
        scale = max(float(np.max(np.abs(reference))), 1e-300)
    deviations = np.abs(applied - reference) / scale

    rows = [
        (zetas[i], float(applied[i]), app.coefficient, float(reference[i]), float(deviations[i]))
        for i in range(len(zetas))
    ]
    _emit_table(
        args.format,
        ["zeta", "applied", "coefficient", "target_radial", "deviation"],
        rows,
        sys.stdout,
    )
    if args.plot_dir is not None:
        from . import plots

        ref = None if app.target is None else reference
        path = plots.ladder_overlay(state, args.direction, zetas, applied, ref, args.plot_dir)
        print(f"figure: {path}", file=sys.stderr)
    return 0 if float(np.max(deviations)) <= args.tol else 1


def _parse_tol_overrides(items):
    overrides = {}
    for item in items:
        name, sep, raw = item.partition("=")
        if not sep:
            return None, f"--tol expects NAME=VALUE, got {item!r}"
        if name not in _KNOWN_TOLERANCE_NAMES:
            return None, f"unknown tolerance name {name!r}"
        try:
            value = float(raw)
        except ValueError:
            return None, f"tolerance value for {name!r} must be a float, got {raw!r}"
        if not np.isfinite(value) or value < 0:
            return None, f"tolerance for {name!r} must be finite and >= 0"
        overrides[name] = value
    return overrides, None


def _cmd_verify(args) -> int:
    for b in args.field:
        if _field_or_none(b) is None:
            return _fail(f"field strength must be finite and > 0, got {b}")
    if args.n_max is not None and args.n_max < 0:
        return _fail("--n-max must be >= 0")
    if args.m_max is not None and args.m_max < 0:
        return _fail("--m-max must be >= 0")
    if args.samples < 1:
        return _fail("--samples must be >= 1")
    if args.jobs < 1:
        return _fail("--jobs must be >= 1")
    if args.grid_n % 2 == 0 or args.grid_n < 33:
        return _fail("--grid-N must be odd and >= 33")
    if args.grid_l <= 0:
        return _fail("--grid-L must be > 0")
    overrides, message = _parse_tol_overrides(args.tol)
    if overrides is None:
        return _fail(message)

    suites = args.suite if args.suite else ["all"]
    cfg = SuiteConfig(
        b_values=tuple(dict.fromkeys(args.field)) if args.field else (0.5, 1.0, 2.0),
        n_max=args.n_max,
        m_max=args.m_max,
        samples=args.samples,
        grid_points=args.grid_n,
        grid_half_extent=args.grid_l,
        tolerances=overrides,
    )
    records = run_suites(suites, cfg, jobs=args.jobs)
    if not args.timing:
        for record in records:
            record.runtime_ms = 0.0

    header = ["suite", "check_name", "parameters", "max_error", "tolerance", "status", "runtime_ms"]
    if args.format == "csv":
        sys.stdout.write(",".join(header) + "\n")
        for r in records:
            row = (
                r.suite,
                r.check_name,
                format_parameters(r.parameters),
                _fmt(r.max_error),
                _fmt(r.tolerance),
                r.status,
                _fmt(r.runtime_ms),
            )
            sys.stdout.write(",".join(row) + "\n")
    else:
        for r in records:
            sys.stdout.write(
                _json_line(
                    (
                        ("suite", r.suite),
                        ("check_name", r.check_name),
                        ("parameters", r.parameters),
                        ("max_error", r.max_error),
                        ("tolerance", r.tolerance),
                        ("status", r.status),
                        ("runtime_ms", r.runtime_ms),
                    )
                )
                + "\n"
            )

    if args.plot_dir is not None:
        from . import plots

        for suite in dict.fromkeys(r.suite for r in records):
            path = plots.margin_chart(records, suite, args.plot_dir)
            print(f"figure: {path}", file=sys.stderr)

    return 1 if any(r.status == "fail" for r in records) else 0


# ---------------------------------------------------------------------------
# parser


def _add_common(sub, plot=False):
    sub.add_argument("-B", "--field", type=float, action="append", default=[],
                     help="magnetic field strength (repeatable only where documented)")
    sub.add_argument("--format", choices=("csv", "json"), default="csv",
                     help="csv table (default) or JSON lines")
    if plot:
        sub.add_argument("--plot-dir", default=None,
                         help="also render figures into this directory (paths on stderr)")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="landau-ladder",
        description="Landau-level states in symmetric gauge: spectra, ladder operators, verification.",
        epilog="All output is plain undecorated text (NO_COLOR is honored vacuously). "
               "Floats use 17 significant digits so repeated runs are byte-identical.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    spectrum = commands.add_parser("spectrum", help="energy table over quantum-number ranges")
    _add_common(spectrum)
    spectrum.add_argument("--n-max", type=int, default=10, help="largest n, at most 50")
    spectrum.add_argument("--m-min", type=int, default=-10)
    spectrum.add_argument("--m-max", type=int, default=10)
    spectrum.set_defaults(handler=_cmd_spectrum)

    evaluate = commands.add_parser("eval", help="sample one state (zeta list or 2D grid)")
    _add_common(evaluate, plot=True)
    evaluate.add_argument("--n", type=int, required=True)
    evaluate.add_argument("--m", type=int, required=True)
    evaluate.add_argument("--zeta", default=None, help="comma list of zeta >= 0 (radial mode)")
    evaluate.add_argument("--grid-N", dest="grid_n", type=int, default=None,
                          help="points per axis (odd, >= 33) for grid mode")
    evaluate.add_argument("--grid-L", dest="grid_l", type=float, default=None,
                          help="grid half extent (default: scaled to the state)")
    evaluate.set_defaults(handler=_cmd_eval)

    ladder = commands.add_parser("ladder", help="apply a ladder operator along a zeta list")
    _add_common(ladder, plot=True)
    ladder.add_argument("--n", type=int, required=True)
    ladder.add_argument("--m", type=int, required=True)
    ladder.add_argument("--direction", choices=("raise", "lower"), required=True)
    ladder.add_argument("--zeta", required=True, help="comma list of zeta > 0")
    ladder.add_argument("--mode", choices=("analytic", "fd"), default="analytic")
    ladder.add_argument("--tol", type=float, default=1e-8,
                        help="largest acceptable deviation (exit 1 beyond it)")
    ladder.set_defaults(handler=_cmd_ladder)

    verify = commands.add_parser("verify", help="run verification suites and report records")
    _add_common(verify, plot=True)
    verify.add_argument("--suite", action="append", default=[],
                        choices=SUITES + ("all",),
                        help="suite to run (repeatable; default all)")
    verify.add_argument("--n-max", type=int, default=None)
    verify.add_argument("--m-max", type=int, default=None)
    verify.add_argument("--samples", type=int, default=10000,
                        help="sample count for randomized sweeps")
    verify.add_argument("--grid-N", dest="grid_n", type=int, default=129,
                        help="coarse grid size for the velocity suite")
    verify.add_argument("--grid-L", dest="grid_l", type=float, default=10.0)
    verify.add_argument("--tol", action="append", default=[], metavar="NAME=VALUE",
                        help="override a named tolerance (repeatable)")
    verify.add_argument("--jobs", type=int, default=1,
                        help="worker threads; output bytes do not depend on this")
    verify.add_argument("--timing", action="store_true",
                        help="report real runtime_ms (breaks byte determinism)")
    verify.set_defaults(handler=_cmd_verify)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    if args.command == "verify" and not args.field:
        args.field = [0.5, 1.0, 2.0]
    return args.handler(args)


if __name__ == "__main__":
    raise SystemExit(main())
