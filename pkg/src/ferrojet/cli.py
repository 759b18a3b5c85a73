"""Command-line front end.

Subcommands: curves, classify, coeffs, solve, verify, langevin-threshold.
CSV output carries '#'-prefixed header comments (tool version + parameter
echo) and 17-significant-digit decimal fields so every file round-trips
bit-identically through the bundled reader.  JSON output uses a fixed key
order.  Exit codes: 0 success, 1 input/validation error, 2 numerical
failure.
"""

import argparse
import configparser
import json
import math
import sys

import numpy as np

from . import __version__, coefficients, magnetisation, profiles, reduced
from . import spectrum, verify
from .errors import (CoefficientSignError, FerrojetError, InputError,
                     NumericalError)

_LAW_KEYS = {"law", "lambda", "m1p1", "m1pp1"}
_RUN_KEYS = {"region", "curve", "samples", "beta0", "gamma0", "s", "mu",
             "delta", "kappa", "theta", "convention", "out", "svg"}


def _fmt(x):
    return format(float(x), ".17g")


def write_csv(path, columns, meta):
    """CSV with '#' comment header; values at 17 significant digits."""
    names = list(columns)
    rows = zip(*(columns[n] for n in names))
    lines = [f"# ferrojet v{__version__}"]
    lines.extend(f"# {k} = {v}" for k, v in meta.items())
    lines.append(",".join(names))
    lines.extend(",".join(_fmt(v) for v in row) for row in rows)
    text = "\n".join(lines) + "\n"
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def read_csv(path):
    """Read a CSV produced by write_csv; returns (columns dict, meta dict)."""
    meta = {}
    names = None
    data = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            if line.startswith("#"):
                body = line[1:].strip()
                if "=" in body:
                    k, v = body.split("=", 1)
                    meta[k.strip()] = v.strip()
                continue
            if names is None:
                names = line.split(",")
                continue
            data.append([float(v) for v in line.split(",")])
    cols = {n: np.asarray([row[i] for row in data])
            for i, n in enumerate(names or [])}
    return cols, meta


def write_orbit_csv(path, orbit, meta=None):
    """Orbit CSV with order-dependent derivative columns.

    Planar and envelope orbits carry Z,u,u'; fourth-order orbits carry
    Z,u,u',u'',u'''.
    """
    cols = {"Z": orbit.grid, "u": orbit.u, "u'": orbit.du}
    if orbit.system.get("kind") == "fourth_order":
        cols["u''"] = orbit.d2u
        cols["u'''"] = orbit.d3u
    info = {"command": "orbit", "system": orbit.system.get("kind"),
            "residual_norm": _fmt(orbit.residual_norm),
            "energy_drift": _fmt(orbit.energy_drift)}
    info.update(meta or {})
    write_csv(path, cols, info)


def write_svg(path, xs, ys, title=""):
    """Minimal polyline plot with axes; no plotting dependency."""
    xs = np.asarray(xs, dtype=float)
    ys = np.asarray(ys, dtype=float)
    w, h, pad = 640.0, 400.0, 50.0
    x0, x1 = float(np.min(xs)), float(np.max(xs))
    y0, y1 = float(np.min(ys)), float(np.max(ys))
    if x1 == x0:
        x1 = x0 + 1.0
    if y1 == y0:
        y1 = y0 + 1.0
    sx = (w - 2 * pad) / (x1 - x0)
    sy = (h - 2 * pad) / (y1 - y0)
    pts = " ".join(f"{pad + (x - x0) * sx:.2f},{h - pad - (y - y0) * sy:.2f}"
                   for x, y in zip(xs, ys))
    axis_y = h - pad - (0.0 - y0) * sy if y0 <= 0.0 <= y1 else h - pad
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{w:.0f}" '
        f'height="{h:.0f}" viewBox="0 0 {w:.0f} {h:.0f}">',
        f'<rect width="{w:.0f}" height="{h:.0f}" fill="white"/>',
        f'<line x1="{pad}" y1="{h - pad}" x2="{w - pad}" y2="{h - pad}" '
        'stroke="black"/>',
        f'<line x1="{pad}" y1="{pad}" x2="{pad}" y2="{h - pad}" '
        'stroke="black"/>',
        f'<line x1="{pad}" y1="{axis_y:.2f}" x2="{w - pad}" '
        f'y2="{axis_y:.2f}" stroke="#bbb" stroke-dasharray="4"/>',
        f'<polyline points="{pts}" fill="none" stroke="#1161a8" '
        'stroke-width="1.5"/>',
        f'<text x="{pad}" y="{pad - 14}" font-size="14">{title}</text>',
        f'<text x="{pad}" y="{h - pad + 28}" font-size="11">'
        f'x: [{x0:.6g}, {x1:.6g}]   y: [{y0:.6g}, {y1:.6g}]</text>',
        "</svg>",
    ]
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(parts) + "\n")


def _json_default(x):
    if isinstance(x, np.bool_):
        return bool(x)
    if isinstance(x, np.integer):
        return int(x)
    if isinstance(x, np.floating):
        return float(x)
    raise TypeError(f"not JSON serialisable: {type(x).__name__}")


def emit_json(obj, path=None):
    text = json.dumps(obj, indent=2, default=_json_default)
    if path is None:
        sys.stdout.write(text + "\n")
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")


# -- configuration and law construction --------------------------------------


def _load_config(path):
    cp = configparser.ConfigParser()
    with open(path, encoding="utf-8") as fh:
        cp.read_file(fh)
    law_cfg, run_cfg = {}, {}
    for section in cp.sections():
        if section == "law":
            for k, v in cp.items(section):
                if k not in _LAW_KEYS:
                    raise InputError(f"unknown [law] key {k!r} in {path}")
                law_cfg[k] = v
        elif section == "run":
            for k, v in cp.items(section):
                if k not in _RUN_KEYS:
                    raise InputError(f"unknown [run] key {k!r} in {path}")
                run_cfg[k] = v
        else:
            raise InputError(f"unknown config section [{section}] in {path}")
    return law_cfg, run_cfg


def build_law(kind, lam=None, m1p1=None, m1pp1=None):
    kind = (kind or "linear").lower()
    if kind == "linear":
        return magnetisation.linear_law()
    if kind == "langevin":
        if lam is None:
            raise InputError("the Langevin law needs --lambda")
        return magnetisation.langevin_law(float(lam))
    if kind == "custom":
        if m1p1 is None or m1pp1 is None:
            raise InputError("a custom law needs m1p1 and m1pp1 "
                             "(config [law] section)")
        return magnetisation.custom_law(float(m1p1), float(m1pp1))
    raise InputError(f"unknown law {kind!r}; expected linear, langevin or custom")


# -- subcommand handlers ------------------------------------------------------

_CURVE_RANGES = {
    # parameter ranges used when sampling each critical curve
    "c2": (1e-2, 10.0),
    "c3": (1e-2, 0.24),
    "c4": (0.26, 2.0),
}


def cmd_curves(args):
    name = args.curve.lower()
    n = args.samples
    if n < 2:
        raise InputError(f"samples must be at least 2, got {n}")
    if name == "c1":
        from .specfun import first_zero_j1
        j11 = first_zero_j1()
        params = np.linspace(1e-2 * j11, 0.99 * j11, n)
        pts = [spectrum.curve_c1(k) for k in params]
    elif name == "c2":
        lo, hi = _CURVE_RANGES["c2"]
        params = np.linspace(lo, hi, n)
        pts = [spectrum.curve_c2(s) for s in params]
    elif name in ("c3", "c4"):
        lo, hi = _CURVE_RANGES[name]
        params = np.linspace(lo, hi, n)
        pts = [spectrum.curves_c3_c4(b) for b in params]
    else:
        raise InputError(f"unknown curve {args.curve!r}; expected c1..c4")
    write_csv(args.out,
              {"param": params,
               "beta0": [p.beta0 for p in pts],
               "gamma0": [p.gamma0 for p in pts]},
              {"command": "curves", "curve": name, "samples": n})
    return 0


def cmd_classify(args):
    pt = spectrum.ParameterPoint(args.beta0, args.gamma0)
    rep = spectrum.classify(pt)
    emit_json({
        "beta0": pt.beta0,
        "gamma0": pt.gamma0,
        "alpha0": pt.alpha0,
        "zero_multiplicity": rep.zero_multiplicity,
        "imaginary_pair_count": rep.imaginary_pair_count,
        "real_pair_count": rep.real_pair_count,
        "vanishing_order": rep.vanishing_order,
        "nearest_curves": {k: rep.nearest_curves[k]
                           for k in ("c1", "c2", "c3", "c4")},
    }, args.out)
    return 0


def cmd_coeffs(args, law):
    region = args.region.lower()
    if region in ("i", "1"):
        beta0 = args.beta0 if args.beta0 is not None else 0.5
        rec = coefficients.region1(beta0, law, mu=args.mu)
        out = {
            "region": "i", "law": str(law), "beta0": rec.beta0,
            "alpha0": rec.alpha0, "c_check": rec.c_check,
            "d_check": rec.d_check, "c1": rec.c1, "c1_1": rec.c1_1,
            "d1": rec.d1, "kappa": rec.kappa,
            "wave_type": coefficients.region1_wave_type(rec.c_check),
            "primary_exists": rec.c_check != 0.0,
            "cubic_pair_exists": rec.d_check > 0.0,
        }
        if rec.kappa_check is not None:
            out["kappa_check"] = rec.kappa_check
    elif region in ("ii", "2"):
        rec = coefficients.region2(law)
        out = {
            "region": "ii", "law": str(law), "beta0": 0.25, "alpha0": 2.25,
            "c1": rec.c1, "d1": rec.d1, "c1_10": rec.c1_10,
            "c4_10": rec.c4_10, "c1_20": rec.c1_20, "c1_01": rec.c1_01,
            "c5": rec.c5,
            "wave_type": ("elevation" if rec.c1 > 0.0 else
                          "depression" if rec.c1 < 0.0 else "degenerate"),
            "primary_exists": rec.c1 != 0.0,
            "cubic_pair_exists": rec.d1 > 0.0,
        }
    elif region in ("iii", "3"):
        s = args.s if args.s is not None else 1.0
        rec = coefficients.region3(s, law)
        out = {
            "region": "iii", "law": str(law), "s": rec.s,
            "beta0": rec.point.beta0, "gamma0": rec.point.gamma0,
            "alpha0": rec.point.alpha0, "S_ratio": rec.S_ratio,
            "T_ratio": rec.T_ratio, "tau1": rec.tau1, "tau2": rec.tau2,
            "c2_1": rec.c2_1, "d4": rec.d4, "exists": rec.exists,
        }
    else:
        raise InputError(f"unknown region {args.region!r}; expected i, ii or iii")
    emit_json(out, args.out)
    return 0


def _solve_profile(args, law):
    region = args.region.lower()
    mu = args.mu
    if mu is None or not mu > 0.0:
        raise InputError("solve needs --mu > 0")
    convention = args.convention
    theta = args.theta
    branch = "negative" if abs(theta - math.pi) < 1e-9 else "positive"

    if region in ("i", "1"):
        beta0 = args.beta0 if args.beta0 is not None else 0.5
        rec = coefficients.region1(beta0, law)
        if rec.c_check == 0.0:
            raise CoefficientSignError(
                "c_check = 0: quadratic regime degenerate, use region i-cubic")
        orbit = reduced.planar_homoclinic(
            rec.c_check, 0.0,
            branch="positive" if rec.c_check > 0.0 else "negative")
        profile = profiles.eta_region1(orbit, mu, beta0, convention)
    elif region == "i-cubic":
        beta0 = args.beta0 if args.beta0 is not None else 0.5
        rec = coefficients.region1(beta0, law)
        if not rec.d_check > 0.0:
            raise CoefficientSignError(
                f"cubic regime needs d_check > 0, got {rec.d_check:g}")
        orbit = reduced.planar_homoclinic(args.kappa, rec.d_check,
                                          branch=branch)
        profile = profiles.eta_region1(orbit, mu, beta0, convention)
    elif region in ("ii", "2"):
        rec = coefficients.region2(law)
        if rec.c1 == 0.0:
            raise CoefficientSignError(
                "c1 = 0: quadratic regime degenerate, use region ii-cubic")
        orbit = reduced.kawahara_homoclinic(args.delta, 3.0 * rec.c1, 0.0)
        profile = profiles.eta_region2(orbit, mu, convention)
    elif region == "ii-cubic":
        rec = coefficients.region2(law)
        if not rec.d1 > 0.0:
            raise CoefficientSignError(
                f"cubic regime needs d1 > 0, got {rec.d1:g}")
        orbit = reduced.kawahara_homoclinic(args.delta, args.kappa,
                                            4.0 * rec.d1, branch=branch)
        profile = profiles.eta_region2(orbit, mu, convention)
    elif region in ("iii", "3"):
        s = args.s if args.s is not None else 1.0
        rec = coefficients.region3(s, law)
        if not rec.exists:
            raise CoefficientSignError(
                f"envelope existence fails at s = {s}: c2_1 = {rec.c2_1:g}, "
                f"d4 = {rec.d4:g}")
        envelope = reduced.nls_envelope(mu, rec.c2_1, rec.d4)
        profile = profiles.eta_region3(envelope, s, theta)
    else:
        raise InputError(f"unknown region {args.region!r}; expected "
                         "i, i-cubic, ii, ii-cubic or iii")
    return profile


def cmd_solve(args, law):
    profile = _solve_profile(args, law)
    meta = {
        "command": "solve", "region": profile.region, "law": str(law),
        "mu": _fmt(args.mu), "convention": profile.convention,
        "wave_type": profile.wave_type, "note": "leading order",
    }
    if args.delta is not None:
        meta["delta"] = _fmt(args.delta)
    if profile.region.startswith("ii") and args.delta < 0.0:
        meta["family"] = ("primary orbit; an infinite multipulse family "
                          "accompanies it below the real-collision curve")
    elif profile.region == "iii":
        meta["family"] = ("primary envelope orbit; an infinite multipulse "
                          "family accompanies it")
    write_csv(args.out, {"z": profile.z, "eta": profile.eta}, meta)
    if args.svg:
        write_svg(args.svg, profile.z, profile.eta,
                  title=f"region {profile.region}: {profile.wave_type} "
                        "(leading order)")
    return 0


def cmd_verify(args, law):
    checks = verify.run_suites(args.suite, law=law)
    ok = all(c["passed"] for c in checks)
    emit_json({
        "suite": args.suite,
        "law": str(law),
        "all_passed": ok,
        "n_checks": len(checks),
        "checks": [
            {"suite": c["suite"], "name": c.get("region", "") + ": " + c["name"],
             "numeric": _jsonable(c["numeric"]),
             "reference": _jsonable(c["reference"]),
             "error": c["error"], "passed": c["passed"]}
            for c in checks],
    }, args.out)
    return 0 if ok else 2


def _jsonable(x):
    if isinstance(x, complex):
        return {"re": x.real, "im": x.imag}
    return x


def cmd_langevin_threshold(args):
    lam = magnetisation.langevin_lambda_star(args.alpha0)
    emit_json({"alpha0": args.alpha0, "lambda_star": lam}, args.out)
    return 0


# -- argument parsing ---------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.exit(1, f"{self.prog}: error: {message}\n")


def _build_parser():
    p = _Parser(prog="ferrojet",
                description="Ferrofluid-jet solitary-wave toolkit: critical "
                            "curves, spectral classification, normal-form "
                            "coefficients, homoclinic orbits and surface "
                            "profiles.")
    p.add_argument("--version", action="version",
                   version=f"ferrojet {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def add_common(q):
        q.add_argument("--law", default=None,
                       help="magnetisation law: linear | langevin | custom")
        q.add_argument("--lambda", dest="lam", type=float, default=None,
                       help="Langevin law parameter")
        q.add_argument("--config", default=None,
                       help="INI config with [law] and [run] sections")
        q.add_argument("--out", default=None, help="output path (default stdout)")

    q = sub.add_parser("curves", help="sample a critical curve to CSV")
    q.add_argument("curve", choices=["c1", "c2", "c3", "c4"])
    q.add_argument("--samples", type=int, default=200)
    add_common(q)

    q = sub.add_parser("classify", help="spectral picture at a parameter point")
    q.add_argument("--beta0", type=float, required=True)
    q.add_argument("--gamma0", type=float, required=True)
    add_common(q)

    q = sub.add_parser("coeffs", help="normal-form coefficients of a region")
    q.add_argument("--region", default=None)
    q.add_argument("--beta0", type=float, default=None)
    q.add_argument("--s", type=float, default=None)
    q.add_argument("--mu", type=float, default=None)
    add_common(q)

    q = sub.add_parser("solve", help="solitary-wave surface profile to CSV")
    q.add_argument("--region", default=None,
                   help="i | i-cubic | ii | ii-cubic | iii")
    q.add_argument("--beta0", type=float, default=None)
    q.add_argument("--s", type=float, default=None)
    q.add_argument("--mu", type=float, default=None)
    q.add_argument("--delta", type=float, default=None,
                   help="distance above/below the real-collision curve "
                        "(regions ii; default 0.05)")
    q.add_argument("--kappa", type=float, default=None,
                   help="scaled quadratic detuning for the cubic regimes")
    q.add_argument("--theta", type=float, default=None,
                   help="carrier phase (region iii) / branch selector: "
                        "0 or pi")
    q.add_argument("--convention", default="basis_consistent",
                   choices=["basis_consistent", "paper_literal"])
    q.add_argument("--svg", default=None, help="also write an SVG plot here")
    add_common(q)

    q = sub.add_parser("verify", help="run the verification suites")
    q.add_argument("--suite", default="all",
                   choices=["omega", "chains", "taylor", "reversibility",
                            "all"])
    add_common(q)

    q = sub.add_parser("langevin-threshold",
                       help="Langevin parameter where the region I quadratic "
                            "coefficient changes sign")
    q.add_argument("alpha0", type=float)
    add_common(q)
    return p


def _apply_config(args):
    """Fill unset argument slots from the config file; flags take precedence."""
    if getattr(args, "config", None) is None:
        return None
    law_cfg, run_cfg = _load_config(args.config)
    for key, value in run_cfg.items():
        if hasattr(args, key) and getattr(args, key) is None:
            try:
                value = float(value)
            except ValueError:
                pass
            setattr(args, key, value)
    return law_cfg


def _resolve_solve_defaults(args):
    if args.region is None:
        raise InputError("solve/coeffs need --region (flag or [run] config)")
    if getattr(args, "delta", "absent") is None:
        args.delta = 0.05
    if getattr(args, "kappa", "absent") is None:
        args.kappa = 0.0
    if getattr(args, "theta", "absent") is None:
        args.theta = 0.0


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        law_cfg = _apply_config(args)
        law = None
        if hasattr(args, "law"):
            kind = args.law
            lam = args.lam
            m1p1 = m1pp1 = None
            if law_cfg:
                kind = kind or law_cfg.get("law")
                lam = lam if lam is not None else law_cfg.get("lambda")
                m1p1 = law_cfg.get("m1p1")
                m1pp1 = law_cfg.get("m1pp1")
            law = build_law(kind, lam, m1p1, m1pp1)
        if args.command == "curves":
            return cmd_curves(args)
        if args.command == "classify":
            return cmd_classify(args)
        if args.command == "coeffs":
            if args.region is None:
                raise InputError("coeffs needs --region (flag or [run] config)")
            return cmd_coeffs(args, law)
        if args.command == "solve":
            _resolve_solve_defaults(args)
            return cmd_solve(args, law)
        if args.command == "verify":
            return cmd_verify(args, law)
        if args.command == "langevin-threshold":
            return cmd_langevin_threshold(args)
        raise InputError(f"unknown command {args.command!r}")
    except InputError as exc:
        print(f"ferrojet: input error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"ferrojet: i/o error: {exc}", file=sys.stderr)
        return 1
    except (NumericalError,) as exc:
        print(f"ferrojet: numerical failure: {exc}", file=sys.stderr)
        return 2
    except FerrojetError as exc:  # pragma: no cover - safety net
        print(f"ferrojet: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
