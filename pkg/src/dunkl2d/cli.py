"""Command-line interface: spectrum tables, wavefunction samples, sweeps, verification.

Exit codes: 0 success / all checks pass, 1 verification failure, 2 usage or
validation error.
"""
from __future__ import annotations

import argparse
import configparser
import csv
import io
import json
import math
import os
import sys

import numpy as np

from . import verification
from .operators import ParameterError, make_params
from .special import DomainError
from .spectra import (
    AngularQuantum,
    angular_states,
    cartesian_energy,
    coulomb_energy,
    coulomb_has_bound_states,
    coulomb_state,
    oscillator_cartesian_state,
    oscillator_polar_state,
    polar_energy,
)

SYSTEMS = ("oscillator-cartesian", "oscillator-polar", "coulomb")
SUITE_CHOICES = ("all", "identities", "eigen", "orthogonality", "reduction")
SPECTRUM_COLUMNS = ["system", "n1_or_n", "two_ell", "sector", "branch", "energy", "n2", "degeneracy"]
WAVEFUNCTION_COLUMNS = ["part", "coord1", "coord2", "re", "im"]
VERIFY_COLUMNS = ["name", "category", "max_residual", "threshold", "pass"]
CONFIG_SECTION = "dunkl2d"


class UsageError(Exception):
    """Invalid flags or parameters; maps to exit code 2."""


def fmt(x) -> str:
    if isinstance(x, (float, np.floating)):
        return "%.9g" % x
    return "" if x is None else str(x)


# ------------------------------------------------------------------ parsing


def _shared() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--mu1", type=float, default=None)
    p.add_argument("--mu2", type=float, default=None)
    p.add_argument("--gamma", type=float, default=None)
    p.add_argument("--k", type=float, default=1.0, help="Coulomb coupling")
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--format", choices=("csv", "json"), default=None)
    p.add_argument("--out", default=None, help="output path (default: stdout)")
    p.add_argument("--tol", type=float, default=None, help="override check tolerances")
    return p


def _quantum_flags(p: argparse.ArgumentParser):
    p.add_argument("--system", choices=SYSTEMS, default="oscillator-cartesian")
    p.add_argument("--n1", type=int, default=0)
    p.add_argument("--n2", type=int, default=0)
    p.add_argument("--n", type=int, default=0, help="radial quantum number (polar, coulomb)")
    p.add_argument("--two-ell", type=int, default=0, help="2 ell (polar, coulomb)")
    p.add_argument("--sector", type=int, choices=(1, -1), default=None, help="checked against 2 ell parity")
    p.add_argument("--branch", type=int, choices=(1, -1), default=1)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dunkl2d", description=__doc__.splitlines()[0])
    parser.add_argument("--config", default=None, help="INI file; flags given on the command line win")
    sub = parser.add_subparsers(dest="command", required=True)
    shared = _shared()

    sp = sub.add_parser("spectrum", parents=[shared], help="energy table up to a level bound")
    sp.add_argument("--system", choices=SYSTEMS, default="oscillator-cartesian")
    sp.add_argument("--nmax", type=int, default=4, help="level bound: n1+n2, 2n+2ell or n+2ell")

    wp = sub.add_parser("wavefunction", parents=[shared], help="sample a normalized state")
    _quantum_flags(wp)
    wp.add_argument("--extent", type=float, default=4.0, help="half-width of the sampling box")
    wp.add_argument("--points", type=int, default=21, help="samples per axis")

    sw = sub.add_parser("sweep", parents=[shared], help="energy of a fixed state along one parameter")
    _quantum_flags(sw)
    sw.add_argument("--param", choices=("gamma", "mu1", "mu2"), required=True)
    sw.add_argument("--start", type=float, required=True)
    sw.add_argument("--stop", type=float, required=True)
    sw.add_argument("--num", type=int, default=19)

    vp = sub.add_parser("verify", parents=[shared], help="run verification suites")
    vp.add_argument("suite", nargs="?", default="all", choices=SUITE_CHOICES)
    vp.add_argument("--random-draws", type=int, default=20, help="random parameter draws added to the grid")
    vp.add_argument("--timing", action="store_true", help="include wall times in the report")
    return parser


def _config_argv(path: str, command: str) -> list:
    cp = configparser.ConfigParser()
    try:
        with open(path) as fh:
            cp.read_file(fh)
    except OSError as exc:
        raise UsageError(f"cannot read config file: {exc}") from exc
    except configparser.Error as exc:
        raise UsageError(f"malformed config file: {exc}") from exc
    out = []
    for section in (CONFIG_SECTION, command):
        if cp.has_section(section):
            for key, value in cp.items(section):
                flag = "--" + key.replace("_", "-")
                if value.strip().lower() in ("true", "yes", "on"):
                    out.append(flag)
                else:
                    out += [flag, value]
    return out


def parse_args(argv) -> argparse.Namespace:
    parser = build_parser()
    pre = argparse.ArgumentParser(add_help=False)
    pre.add_argument("--config", default=None)
    known, rest = pre.parse_known_args(argv)
    if known.config and rest and not rest[0].startswith("-"):
        # config entries go first so explicit flags override them
        rest = [rest[0]] + _config_argv(known.config, rest[0]) + rest[1:]
    return parser.parse_args(rest)


def params_from(args, allow_default: bool = True):
    values = [args.mu1, args.mu2, args.gamma]
    if not allow_default and all(v is None for v in values):
        return None
    mu1, mu2, g = (0.0 if v is None else v for v in values)
    return make_params(mu1, mu2, g)


def quantum_from(args) -> AngularQuantum:
    q = AngularQuantum.for_two_ell(args.two_ell, args.branch)
    if args.sector is not None and args.sector != q.sector:
        raise DomainError(f"two_ell={args.two_ell} belongs to sector {q.sector}, not {args.sector}")
    return q


# ------------------------------------------------------------------ commands


def spectrum_rows(system: str, params, nmax: int, k: float = 1.0) -> tuple:
    """Rows of the spectrum table plus the number of labels without a bound state."""
    if nmax < 0:
        raise DomainError("nmax must be non-negative")
    rows, omitted = [], 0
    if system == "oscillator-cartesian":
        for N in range(nmax + 1):
            for n1 in range(N + 1):
                rows.append({"system": system, "n1_or_n": n1, "n2": N - n1, "level": N,
                             "energy": cartesian_energy(n1, N - n1, params)})
    elif system == "oscillator-polar":
        for N in range(nmax + 1):
            for te in range(N % 2, N + 1, 2):
                for q in angular_states(te):
                    n = (N - te) // 2
                    rows.append({"system": system, "n1_or_n": n, "two_ell": te, "sector": q.sector,
                                 "branch": q.branch, "level": N, "energy": polar_energy(n, te, params)})
    else:
        for M in range(nmax + 1):
            for te in range(M + 1):
                n = M - te
                if not coulomb_has_bound_states(te, params):
                    omitted += len(angular_states(te))
                    continue
                e = coulomb_energy(n, te, k, params)
                for q in angular_states(te):
                    rows.append({"system": system, "n1_or_n": n, "two_ell": te, "sector": q.sector,
                                 "branch": q.branch, "level": M, "energy": e})
    counts: dict = {}
    for r in rows:
        counts[r["level"]] = counts.get(r["level"], 0) + 1
    for r in rows:
        r["degeneracy"] = counts[r.pop("level")]
    return rows, omitted


def cmd_spectrum(args, out) -> int:
    params = params_from(args)
    rows, omitted = spectrum_rows(args.system, params, args.nmax, args.k)
    if omitted:
        print(f"warning: {omitted} labels have no bound state and were omitted", file=sys.stderr)
    if args.format == "json":
        payload = {"system": args.system, "params": params.as_dict(), "k": args.k, "rows": rows}
        out.write(json.dumps(payload, indent=2) + "\n")
    else:
        _write_csv(out, SPECTRUM_COLUMNS, rows)
    return 0


def build_state(args, params):
    if args.system == "oscillator-cartesian":
        return oscillator_cartesian_state(args.n1, args.n2, params)
    q = quantum_from(args)
    if args.system == "oscillator-polar":
        return oscillator_polar_state(args.n, q, params)
    return coulomb_state(args.n, q, args.k, params)


def wavefunction_rows(state, extent: float, points: int) -> list:
    """Samples of a state; polar systems also emit their radial and angular factors."""
    if not (math.isfinite(extent) and extent > 0):
        raise DomainError("extent must be a positive finite number")
    if points < 2:
        raise DomainError("points must be at least 2")
    rows = []
    if state.wavefunction is None:
        r = np.linspace(0.0, extent, points)
        for ri, v in zip(r, state.radial_value(r)):
            rows.append({"part": "radial", "coord1": ri, "coord2": 0.0, "re": v, "im": 0.0})
        phi = np.linspace(0.0, 2 * np.pi, points, endpoint=False)
        for pi, v in zip(phi, state.angular.evaluate(phi)):
            rows.append({"part": "angular", "coord1": pi, "coord2": 0.0, "re": v.real, "im": v.imag})
    axis = np.linspace(-extent, extent, points)
    axis = 0.5 * (axis - axis[::-1])  # exact reflection pairs (x, -x)
    X, Y = np.meshgrid(axis, axis, indexing="ij")
    vals = np.asarray(state.evaluate_xy(X, Y), dtype=complex)
    for x, y, v in zip(X.ravel(), Y.ravel(), vals.ravel()):
        rows.append({"part": "product", "coord1": x, "coord2": y, "re": v.real, "im": v.imag})
    return rows


def cmd_wavefunction(args, out) -> int:
    params = params_from(args)
    state = build_state(args, params)
    rows = wavefunction_rows(state, args.extent, args.points)
    if args.format == "json":
        payload = {
            "system": state.system,
            "label": list(state.label),
            "energy": state.energy,
            "params": params.as_dict(),
            "samples": rows,
        }
        out.write(json.dumps(payload, indent=2) + "\n")
    else:
        _write_csv(out, WAVEFUNCTION_COLUMNS, rows)
    return 0


def state_energy(args, params) -> float:
    if args.system == "oscillator-cartesian":
        if args.n1 < 0 or args.n2 < 0:
            raise DomainError("quantum numbers must be non-negative")
        return cartesian_energy(args.n1, args.n2, params)
    q = quantum_from(args)
    if args.n < 0:
        raise DomainError("n must be non-negative")
    if args.system == "oscillator-polar":
        return polar_energy(args.n, q.two_ell, params)
    return coulomb_state(args.n, q, args.k, params).energy


def sweep_rows(args) -> tuple:
    if args.num < 1:
        raise DomainError("num must be at least 1")
    base = {"mu1": args.mu1 or 0.0, "mu2": args.mu2 or 0.0, "gamma": args.gamma or 0.0}
    rows, omitted = [], 0
    for value in np.linspace(args.start, args.stop, args.num):
        point = {**base, args.param: float(value)}
        try:
            params = make_params(point["mu1"], point["mu2"], point["gamma"])
            energy = state_energy(args, params)
        except (ParameterError, DomainError):
            omitted += 1
            continue
        rows.append({args.param: float(value), "energy": energy})
    return rows, omitted


def cmd_sweep(args, out) -> int:
    # fail fast on bad quantum numbers before touching the parameter range
    if args.system != "oscillator-cartesian":
        quantum_from(args)
    rows, omitted = sweep_rows(args)
    if omitted:
        print(f"warning: {omitted} rows omitted (outside the validity domain)", file=sys.stderr)
    if not rows:
        raise UsageError("no valid parameter value in the requested range")
    if args.format == "json":
        out.write(json.dumps({"param": args.param, "system": args.system, "rows": rows, "omitted": omitted},
                             indent=2) + "\n")
    else:
        _write_csv(out, [args.param, "energy"], rows)
    return 0


def cmd_verify(args, out) -> int:
    if args.tol is not None and not args.tol > 0:
        raise UsageError("--tol must be positive")
    if args.random_draws < 0:
        raise UsageError("--random-draws must be non-negative")
    single = params_from(args, allow_default=False)
    if single is not None:
        grid = [(single.mu1, single.mu2, single.gamma)]
    else:
        grid = verification.default_grid(args.seed, args.random_draws)
    report = verification.run_suite(args.suite, seed=args.seed, params_grid=grid, tol=args.tol)
    report.config["cli"] = {"suite": args.suite, "random_draws": args.random_draws, "single_point": single is not None}
    if args.format == "csv":
        rows = [
            {"name": c.name, "category": c.category, "max_residual": c.max_residual,
             "threshold": c.threshold, "pass": c.passed}
            for c in sorted(report.checks, key=lambda c: c.name)
        ]
        _write_csv(out, VERIFY_COLUMNS, rows)
    else:
        out.write(report.to_json(timing=args.timing) + "\n")
    failed = [c.name for c in report.checks if not c.passed]
    status = "PASS" if report.passed else f"FAIL ({len(failed)} checks: {', '.join(sorted(failed))})"
    print(f"verify {args.suite}: {len(report.checks)} checks, {len(report.skipped)} skipped, {status}",
          file=sys.stderr)
    return 0 if report.passed else 1


COMMANDS = {
    "spectrum": cmd_spectrum,
    "wavefunction": cmd_wavefunction,
    "sweep": cmd_sweep,
    "verify": cmd_verify,
}


def _write_csv(out, columns, rows):
    w = csv.writer(out, lineterminator="\n")
    w.writerow(columns)
    for r in rows:
        w.writerow([fmt(r.get(c)) for c in columns])


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        args = parse_args(argv)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SystemExit as exc:
        return int(exc.code) if isinstance(exc.code, int) else 2
    if args.format is None:
        args.format = "json" if args.command == "verify" else "csv"
    buf = io.StringIO()
    try:
        code = COMMANDS[args.command](args, buf)
    except (UsageError, ParameterError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.out:
        try:
            with open(args.out, "w", newline="") as fh:
                fh.write(buf.getvalue())
        except OSError as exc:
            print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
            return 2
    else:
        try:
            sys.stdout.write(buf.getvalue())
            sys.stdout.flush()
        except BrokenPipeError:
            # reader closed early (e.g. piped into head); silence the flush at exit
            sys.stdout = open(os.devnull, "w")
    return code


if __name__ == "__main__":
    sys.exit(main())
