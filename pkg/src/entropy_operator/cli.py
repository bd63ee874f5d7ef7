"""Command-line front end: ``entropy-scan``, ``wigner`` and ``verify``.

Exit codes: 0 success, 1 invalid configuration, 2 a verification residual
exceeded its tolerance, 3 a numerical guard fired (truncation or pure state).
"""

import argparse
from dataclasses import dataclass
import csv
import io
import json
import math
import sys

import numpy as np

from . import bipartite, checks, field, fock, qubit, wigner
from .bipartite import ModelParams
from .errors import NearPureError, TruncationError

EXIT_OK, EXIT_CONFIG, EXIT_VERIFY, EXIT_GUARD = 0, 1, 2, 3

DEFAULT_VERIFY_CHIT = (0.3, math.pi / 2, 1.9)


class ConfigError(ValueError):
    pass


def fmt(x):
    """17 significant digits, so every double round-trips."""
    return format(float(x), ".17g")


def parse_range(text, name):
    """``"min:max:count"`` -> evenly spaced points (a bare number is a 1-point range)."""
    parts = text.split(":")
    try:
        if len(parts) == 1:
            return np.array([float(parts[0])])
        if len(parts) != 3:
            raise ValueError
        lo, hi, count = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError:
        raise ConfigError(f"{name}: expected a number or 'min:max:count', got {text!r}") from None
    if count < 1:
        raise ConfigError(f"{name}: count must be >= 1")
    if not (math.isfinite(lo) and math.isfinite(hi)):
        raise ConfigError(f"{name}: bounds must be finite")
    return np.linspace(lo, hi, count)


@dataclass
class RunConfig:
    command: str
    beta: complex
    chi: float
    times: np.ndarray  # t values; chit = chi * t
    dim: int | None
    grid_x: np.ndarray
    grid_y: np.ndarray
    source: str
    convention: str
    fmt: str
    out: str | None

    def params(self, t):
        return ModelParams(beta=self.beta, chi=self.chi, t=float(t), dim=self.dim)


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--beta-re", type=float, default=1.0, help="real part of the coherent amplitude")
    common.add_argument("--beta-im", type=float, default=0.0, help="imaginary part of the coherent amplitude")
    common.add_argument("--chit", help="dimensionless time chi*t: a value or 'min:max:count'")
    common.add_argument("--chi", type=float, help="interaction constant (use with --t-start)")
    common.add_argument("--t-start", type=float)
    common.add_argument("--t-end", type=float)
    common.add_argument("--t-steps", type=int, default=1)
    common.add_argument("--dim", type=int, help="Fock truncation (default: derived from |beta|)")
    common.add_argument("--grid-x", default="-3:3:21", help="alpha_x grid 'min:max:count'")
    common.add_argument("--grid-y", default="-3:3:21", help="alpha_y grid 'min:max:count'")
    common.add_argument("--source", choices=("series", "closed", "both"), default="both")
    common.add_argument("--convention", choices=("paper", "standard"), default="paper",
                        help="'standard' multiplies Wigner values by 2/pi")
    common.add_argument("--format", dest="fmt", choices=("csv", "json"), default="csv")
    common.add_argument("--out", help="output file (default: stdout)")

    parser = argparse.ArgumentParser(prog="entropy-operator", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("entropy-scan", parents=[common], help="entropy and fluctuation time series")
    sub.add_parser("wigner", parents=[common], help="Wigner function of the field entropy operator")
    sub.add_parser("verify", parents=[common], help="identity-check report")
    return parser


def make_config(ns) -> RunConfig:
    if ns.chit is not None and (ns.chi is not None or ns.t_start is not None):
        raise ConfigError("give either --chit or --chi/--t-start, not both")
    if ns.chit is not None:
        chi, times = 1.0, parse_range(ns.chit, "--chit")
    elif ns.t_start is not None:
        if ns.chi is None:
            raise ConfigError("--t-start needs --chi")
        if ns.t_steps < 1:
            raise ConfigError("--t-steps must be >= 1")
        t_end = ns.t_start if ns.t_end is None else ns.t_end
        chi, times = ns.chi, np.linspace(ns.t_start, t_end, ns.t_steps)
    elif ns.command == "verify":
        chi, times = 1.0, np.array(DEFAULT_VERIFY_CHIT)
    else:
        raise ConfigError("a time is required: --chit or --chi with --t-start")
    if not math.isfinite(chi):
        raise ConfigError("--chi must be finite")
    if ns.dim is not None and ns.dim < 1:
        raise ConfigError("--dim must be >= 1")
    beta = complex(ns.beta_re, ns.beta_im)
    if not (math.isfinite(beta.real) and math.isfinite(beta.imag)):
        raise ConfigError("beta must be finite")
    cfg = RunConfig(
        command=ns.command, beta=beta, chi=chi, times=times, dim=ns.dim,
        grid_x=parse_range(ns.grid_x, "--grid-x"), grid_y=parse_range(ns.grid_y, "--grid-y"),
        source=ns.source, convention=ns.convention, fmt=ns.fmt, out=ns.out,
    )
    if cfg.command == "wigner":
        if cfg.times.size != 1:
            raise ConfigError("wigner takes a single time")
        if cfg.source != "series" and beta.imag != 0.0:
            raise ConfigError("the closed-form route needs real beta; use --source series")
    return cfg


# --- subcommands -----------------------------------------------------------

SCAN_COLUMNS = ("t", "chit", "eps", "det", "entropy_atom", "fluctuation_atom",
                "entropy_field", "abs_diff", "regime")


def entropy_scan(cfg: RunConfig):
    """One row per time: atomic and field entropies and their difference."""
    rows = []
    for t in cfg.times:
        p = cfg.params(t)
        j = bipartite.build_joint(p)
        rho_a = bipartite.reduce_atom(j)
        sd = qubit.spectral_data(rho_a, p.tol)
        s_a = qubit.mean_atom_entropy(rho_a, p.tol)
        s_b = field.mean_field_entropy(j, p.tol)
        rows.append({
            "t": float(t), "chit": p.chit, "eps": sd.eps, "det": sd.det,
            "entropy_atom": s_a,
            "fluctuation_atom": qubit.atom_entropy_fluctuation(rho_a, p.tol),
            "entropy_field": s_b,
            "abs_diff": abs(s_a - s_b),
            "regime": qubit.entropy_coeffs(sd, p.tol).regime,
        })
    return rows


def cmd_entropy_scan(cfg: RunConfig):
    rows = entropy_scan(cfg)
    if cfg.fmt == "json":
        return _json({"beta_re": cfg.beta.real, "beta_im": cfg.beta.imag, "chi": cfg.chi,
                      "columns": list(SCAN_COLUMNS), "rows": rows})
    return _csv(SCAN_COLUMNS, rows)


def cmd_wigner(cfg: RunConfig):
    p = cfg.params(cfg.times[0])
    grid = wigner.wigner_grid(p, cfg.grid_x, cfg.grid_y, cfg.source, cfg.convention)
    if cfg.fmt == "json":
        def tolist(a):
            return None if a is None else [[float(v) for v in row] for row in a]
        return _json({
            "beta_re": p.beta.real, "beta_im": p.beta.imag, "chi": p.chi, "t": p.t, "chit": p.chit,
            "dim": p.dim, "convention": cfg.convention, "source": cfg.source,
            "x_points": [float(x) for x in grid.x_points], "y_points": [float(y) for y in grid.y_points],
            "w_series": tolist(grid.series), "w_closed": tolist(grid.closed),
            "max_abs_diff": grid.max_abs_diff,
        })
    rows = []
    for i, x in enumerate(grid.x_points):
        for k, y in enumerate(grid.y_points):
            ws = None if grid.series is None else grid.series[i, k]
            wc = None if grid.closed is None else grid.closed[i, k]
            rows.append({"alpha_x": x, "alpha_y": y, "w_series": ws, "w_closed": wc,
                         "abs_diff": None if ws is None or wc is None else abs(ws - wc)})
    return _csv(("alpha_x", "alpha_y", "w_series", "w_closed", "abs_diff"), rows)


def cmd_verify(cfg: RunConfig):
    """Returns (text, all_passed)."""
    params = [cfg.params(t) for t in cfg.times]
    results, notes = checks.verify(params)
    passed = all(c.passed for c in results)
    records = [c.as_dict() for c in results]
    if cfg.fmt == "json":
        return _json({"passed": passed, "checks": records, "fluctuation_sign": notes}), passed
    cols = ("name", "beta_re", "beta_im", "chit", "residual", "tolerance", "passed")
    return _csv(cols, records), passed


# --- serialisation -----------------------------------------------------------

def _csv(columns, rows):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    for row in rows:
        out = []
        for col in columns:
            v = row[col]
            if v is None:
                out.append("")
            elif isinstance(v, (bool, np.bool_)):
                out.append("true" if v else "false")
            elif isinstance(v, (float, int, np.floating)):
                out.append(fmt(v))
            else:
                out.append(str(v))
        w.writerow(out)
    return buf.getvalue()


def _json(obj):
    # json writes floats with repr(), the shortest string that round-trips exactly
    return json.dumps(obj, indent=2) + "\n"


def _emit(text, out):
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def main(argv=None):
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse uses 2 for usage errors; that code is reserved here
        return EXIT_OK if exc.code == 0 else EXIT_CONFIG
    try:
        cfg = make_config(ns)
        if cfg.command == "entropy-scan":
            _emit(cmd_entropy_scan(cfg), cfg.out)
        elif cfg.command == "wigner":
            _emit(cmd_wigner(cfg), cfg.out)
        else:
            text, passed = cmd_verify(cfg)
            _emit(text, cfg.out)
            if not passed:
                print("verify: at least one residual exceeds its tolerance", file=sys.stderr)
                return EXIT_VERIFY
    except (TruncationError, NearPureError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (ConfigError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    return EXIT_OK
