"""Command-line experiment harness.

Subcommands: cheb | widom-table | faber-compare | zeros | curve-dump.
All numeric output is serialized as decimal strings at 30 significant
digits so runs are byte-reproducible and survive beyond double
precision.  Exit codes: 0 success, 2 solver failure, 3 bad config.
"""

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from mpmath import mp, mpf

from . import __version__
from .chebyshev import chebyshev
from .errors import BadConfig, ComplexChebError
from .faber import default_r_grid, faber_connection_sweep
from .geometry import (
    hypocycloid_curve,
    lune_curve,
    polygon_curve,
    polynomial_lemniscate_curve,
    power_lemniscate_curve,
)
from .precision import MIN_DIGITS, set_precision
from .svgplot import scatter_svg
from .zeros import polynomial_zeros

SIG_DIGITS = 30


def provenance(cfg):
    return {
        "version": __version__,
        "digits": cfg.digits,
        "threshold": cfg.threshold,
    }


def build_curve(cfg):
    if cfg.set == "polygon":
        return polygon_curve(cfg.m)
    if cfg.set == "hypocycloid":
        return hypocycloid_curve(cfg.m, cfg.r)
    if cfg.set == "lune":
        if cfg.alpha is None:
            raise BadConfig("--alpha is required for --set lune")
        return lune_curve(cfg.alpha, cfg.r)
    if cfg.set == "power-lemniscate":
        return power_lemniscate_curve(cfg.m, cfg.r)
    if cfg.set == "polynomial-lemniscate":
        if not cfg.poly:
            raise BadConfig("--poly is required for --set polynomial-lemniscate")
        coeffs = [mp.mpmathify(c) for c in cfg.poly.split(",")]
        return polynomial_lemniscate_curve(coeffs, cfg.r)
    raise BadConfig(f"unknown set family {cfg.set!r}")


def validate(cfg):
    if cfg.digits < MIN_DIGITS:
        raise BadConfig(f"--digits must be >= {MIN_DIGITS}")
    thr = mpf(cfg.threshold)
    if not (mpf(10) ** -(cfg.digits - 20) < thr < 1):
        raise BadConfig(
            f"--threshold must lie in (1e-{cfg.digits - 20}, 1) at {cfg.digits} digits")


def parse_fraction(text):
    """Parse '1/2', '1.5' or '2' exactly."""
    if "/" in text:
        num, den = text.split("/", 1)
        return Fraction(int(num), int(den))
    return text  # decimal string; converted exactly by mpf downstream


def write_text(path, content):
    if path in (None, "-"):
        sys.stdout.write(content)
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(content)


def csv_content(cfg, header, rows):
    prov = provenance(cfg)
    out = [f"# complexcheb={prov['version']} digits={prov['digits']} threshold={prov['threshold']}"]
    out.append(",".join(header))
    for row in rows:
        out.append(",".join(row))
    return "\n".join(out) + "\n"


def record_json(rec, cfg):
    with set_precision(cfg.digits):
        coeffs = [
            {"re": mp.nstr(c.real, SIG_DIGITS), "im": mp.nstr(c.imag, SIG_DIGITS)}
            for c in rec.polynomial.all_coeffs()
        ]
        body = {
            "label": rec.label,
            "degree": rec.degree,
            "coefficients": coeffs,
            "sup_norm": mp.nstr(rec.sup_norm, SIG_DIGITS),
            "capacity": mp.nstr(rec.capacity, SIG_DIGITS),
            "widom": mp.nstr(rec.widom, SIG_DIGITS),
            "rel_error": mp.nstr(rec.rel_error, SIG_DIGITS),
            "iterations": rec.iterations,
            **provenance(cfg),
        }
    return json.dumps(body, indent=2) + "\n"


def cmd_cheb(cfg):
    curve = build_curve(cfg)
    rec = chebyshev(curve, cfg.degree, threshold=cfg.threshold,
                    precision=cfg.digits, grid_size=cfg.grid)
    write_text(cfg.out, record_json(rec, cfg))
    return 0


def _table_worker(args):
    cfgdict, N = args
    cfg = argparse.Namespace(**cfgdict)
    curve = build_curve(cfg)
    try:
        rec = chebyshev(curve, N, threshold=cfg.threshold,
                        precision=cfg.digits, grid_size=cfg.grid)
        with set_precision(cfg.digits):
            return (str(N), mp.nstr(rec.widom, SIG_DIGITS), mp.nstr(rec.rel_error, SIG_DIGITS))
    except ComplexChebError as exc:
        return (str(N), "error", f"{type(exc).__name__}")


def cmd_widom_table(cfg):
    if not cfg.degrees:
        raise BadConfig("--degrees is required for widom-table")
    degrees = [int(d) for d in cfg.degrees.split(",")]
    jobs = [(vars(cfg), N) for N in degrees]
    if cfg.jobs > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            rows = list(pool.map(_table_worker, jobs))
    else:
        rows = [_table_worker(j) for j in jobs]
    write_text(cfg.out, csv_content(cfg, ["degree", "widom", "rel_error"], rows))
    return 0


def cmd_faber_compare(cfg):
    if cfg.set not in ("power-lemniscate", "hypocycloid", "lune"):
        raise BadConfig("faber-compare supports power-lemniscate, hypocycloid and lune")
    if cfg.r_grid:
        grid = [g for g in cfg.r_grid.split(",")]
    else:
        grid = default_r_grid(cfg.r_count, cfg.r_min, cfg.r_max)
    res = faber_connection_sweep(cfg.set, cfg.degree, r_grid=grid,
                                 threshold=cfg.threshold, precision=cfg.digits,
                                 m=cfg.m)
    with set_precision(cfg.digits):
        rows = []
        for p in res.points:
            if p.error:
                rows.append((mp.nstr(p.r, SIG_DIGITS), "error"))
            elif p.censored:
                rows.append((mp.nstr(p.r, SIG_DIGITS), f"<={cfg.threshold}"))
            else:
                rows.append((mp.nstr(p.r, SIG_DIGITS), mp.nstr(p.distance, SIG_DIGITS)))
        sidecar = {
            "family": res.family,
            "m": res.m,
            "degree": res.degree,
            "slope": mp.nstr(res.slope, SIG_DIGITS) if res.slope is not None else None,
            **provenance(cfg),
        }
    write_text(cfg.out, csv_content(cfg, ["r", "distance"], rows))
    side_path = None if cfg.out in (None, "-") else _with_suffix(cfg.out, ".json")
    write_text(side_path, json.dumps(sidecar, indent=2) + "\n")
    return 0


def _with_suffix(path, suffix):
    base = path
    for ext in (".csv", ".json", ".svg"):
        if base.endswith(ext):
            base = base[: -len(ext)]
            break
    return base + suffix


def cmd_zeros(cfg):
    curve = build_curve(cfg)
    rec = chebyshev(curve, cfg.degree, threshold=cfg.threshold,
                    precision=cfg.digits, grid_size=cfg.grid)
    with set_precision(cfg.digits):
        zs = polynomial_zeros(rec.polynomial)
        rows = [
            (mp.nstr(z.real, SIG_DIGITS), mp.nstr(z.imag, SIG_DIGITS),
             mp.nstr(res, SIG_DIGITS))
            for z, res in zip(zs.zeros, zs.residuals)
        ]
        formats = cfg.format.split(",") if cfg.format else ["csv", "svg"]
        if "csv" in formats:
            write_text(cfg.out, csv_content(cfg, ["re", "im", "residual"], rows))
        if "svg" in formats:
            samples = cfg.samples or 1024
            pts = [curve.eval(mpf(i) / samples) for i in range(samples)]
            svg = scatter_svg(
                [(p.real, p.imag) for p in pts],
                [(z.real, z.imag) for z in zs.zeros],
            )
            svg_path = None if cfg.out in (None, "-") else _with_suffix(cfg.out, ".svg")
            write_text(svg_path, svg)
    return 0


def cmd_curve_dump(cfg):
    curve = build_curve(cfg)
    n = cfg.samples or 512
    with set_precision(cfg.digits):
        rows = []
        for i in range(n):
            t = mpf(i) / n
            z = curve.eval(t)
            rows.append((mp.nstr(t, SIG_DIGITS), mp.nstr(z.real, SIG_DIGITS),
                         mp.nstr(z.imag, SIG_DIGITS)))
    write_text(cfg.out, csv_content(cfg, ["t", "re", "im"], rows))
    return 0


COMMANDS = {
    "cheb": cmd_cheb,
    "widom-table": cmd_widom_table,
    "faber-compare": cmd_faber_compare,
    "zeros": cmd_zeros,
    "curve-dump": cmd_curve_dump,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise BadConfig(message)


def make_parser():
    p = _Parser(prog="complexcheb", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sp = sub.add_parser(name)
        sp.add_argument("--set", default="power-lemniscate",
                        choices=["polygon", "hypocycloid", "lune",
                                 "power-lemniscate", "polynomial-lemniscate"])
        sp.add_argument("--m", type=int, default=2)
        sp.add_argument("--alpha", type=parse_fraction, default=None)
        sp.add_argument("--r", type=parse_fraction, default="1")
        sp.add_argument("--poly", default=None,
                        help="comma-separated coefficients a_0..a_d for polynomial-lemniscate")
        sp.add_argument("--degree", type=int, default=11)
        sp.add_argument("--degrees", default=None, help="comma-separated degree list")
        sp.add_argument("--threshold", default="1e-10")
        sp.add_argument("--digits", type=int, default=60)
        sp.add_argument("--grid", type=int, default=None)
        sp.add_argument("--jobs", type=int, default=1)
        sp.add_argument("--out", default=None)
        sp.add_argument("--format", default=None, help="comma-separated subset of csv,json,svg")
        sp.add_argument("--samples", type=int, default=None)
        sp.add_argument("--r-grid", dest="r_grid", default=None)
        sp.add_argument("--r-count", dest="r_count", type=int, default=16)
        sp.add_argument("--r-min", dest="r_min", default="1.25")
        sp.add_argument("--r-max", dest="r_max", default="4")
        sp.add_argument("--config", default=None,
                        help="JSON file of flag defaults; explicit flags win")
    return p


def apply_config_file(cfg, argv):
    if not cfg.config:
        return cfg
    with open(cfg.config, encoding="utf-8") as fh:
        defaults = json.load(fh)
    explicit = {a.split("=")[0].lstrip("-").replace("-", "_") for a in argv if a.startswith("--")}
    for key, value in defaults.items():
        attr = key.replace("-", "_")
        if not hasattr(cfg, attr):
            raise BadConfig(f"unknown config key {key!r}")
        if attr not in explicit:
            setattr(cfg, attr, value)
    return cfg


def main(argv=None):
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        cfg = make_parser().parse_args(argv)
        cfg = apply_config_file(cfg, argv)
        validate(cfg)
        return COMMANDS[cfg.command](cfg)
    except (BadConfig, ValueError) as exc:
        print(json.dumps({"error": "bad-config", "detail": str(exc)}), file=sys.stderr)
        return 3
    except (ComplexChebError, OSError) as exc:
        print(json.dumps({"error": type(exc).__name__, "detail": str(exc)}), file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
