"""Command line interface.

Subcommands mirror the library pipelines::

    hbkit coeffs      --phi-c 0.5 --order 16
    hbkit hbnorm      --phi-c 1 --monomial 7
    hbkit containment --phi-c 0.1 --p 4
    hbkit containment --phi-c 0.75 --weighted --levels 6:10
    hbkit casestudy   --c-values 0.25,0.5,0.75 --levels 6:12
    hbkit selftest

Machine-readable output goes to stdout, human-readable progress and warnings
to stderr.  Every report embeds the resolved run configuration: JSON output
carries a ``config`` object, text and CSV output lead with ``# key=value``
comment lines.  Identical configurations produce byte-identical stdout.

Exit status: 0 on success, 1 when a produced report is flagged (quadrature
that did not converge, an inconclusive verdict, or a failed selftest
suite), 2 for usage errors.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from . import __version__
from .boundary import (
    BoundaryGrid,
    outer_from_modulus,
    phi_c_symbol,
    polynomial_symbol,
    symbol_from_phi,
    theta_phi_c_symbol,
    theta_symbol,
)
from .carleson import (
    DyadicSquare,
    gevrey_weight,
    geometric_lemma_check,
    moments,
    square_measure,
    stolz_contains,
    weighted_containment,
)
from .casestudy import (
    LevelCircle,
    levelset_identity_check,
    multiplier_growth_check,
    run_experiment,
    theta_modulus_sq,
)
from .hardy import containment_hp, hp_integral_mean, p_tilde
from .series import DEFAULT_ORDER, PowerSeries, eval_phi_c, phi_c_series, theta_series
from .toeplitz import homomorphism_residual, hb_norm_sq, monomial_hb_norm_sq, CoToeplitz

DEFAULT_SEED = 2024


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def _config_comments(cfg: dict) -> str:
    return "".join(f"# {k}={v}\n" for k, v in cfg.items())


def _emit(text: str) -> None:
    sys.stdout.write(text)


def _note(text: str) -> None:
    print(text, file=sys.stderr)


def _parse_levels(spec: str) -> tuple[int, int]:
    try:
        lo, hi = spec.split(":")
        lo, hi = int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError("levels must look like 6:14")
    if not 1 <= lo <= hi:
        raise argparse.ArgumentTypeError("levels must satisfy 1 <= lo <= hi")
    return lo, hi


def _parse_p(text: str) -> float:
    if text.lower() in ("inf", "infinity", "oo"):
        return math.inf
    try:
        return float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad exponent {text!r}")


def load_coeff_file(path: str) -> PowerSeries:
    """Read the plain coefficient format: one ``re im`` pair per line.

    Blank lines and lines starting with ``#`` are skipped.
    """
    rows = []
    with open(path) as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if len(parts) != 2:
                raise ValueError(f"{path}:{lineno}: expected two columns 're im'")
            rows.append(complex(float(parts[0]), float(parts[1])))
    if not rows:
        raise ValueError(f"{path}: no coefficients found")
    return PowerSeries(rows)


def coeff_file_text(ps: PowerSeries) -> str:
    return "".join(f"{_fmt(z.real)} {_fmt(z.imag)}\n" for z in ps.coeffs)


def _add_symbol_flags(sub: argparse.ArgumentParser) -> None:
    grp = sub.add_mutually_exclusive_group(required=True)
    grp.add_argument("--phi-c", type=float, metavar="C", help="symbol (1-z)^(-C), C > 0")
    grp.add_argument("--theta", action="store_true", help="atomic inner function")
    grp.add_argument(
        "--theta-phi-c", type=float, metavar="C", help="product theta * (1-z)^(-C)"
    )
    grp.add_argument(
        "--coeff-file", metavar="PATH", help="polynomial symbol from a 're im' file"
    )


def _symbol_from_args(args) -> tuple:
    order = args.order
    if args.phi_c is not None:
        return phi_c_symbol(args.phi_c, order), f"phi_{args.phi_c:g}"
    if args.theta:
        return theta_symbol(order), "theta"
    if getattr(args, "theta_phi_c", None) is not None:
        return theta_phi_c_symbol(args.theta_phi_c, order), f"theta*phi_{args.theta_phi_c:g}"
    ps = load_coeff_file(args.coeff_file)
    return polynomial_symbol(ps, label=f"file:{args.coeff_file}"), f"file:{args.coeff_file}"


# -- subcommands ---------------------------------------------------------------


def _cmd_coeffs(args) -> int:
    sym, label = _symbol_from_args(args)
    cfg = {
        "command": "coeffs",
        "version": __version__,
        "symbol": label,
        "order": args.order,
        "format": args.format,
    }
    ser = sym.series
    if args.format == "text":
        _emit(_config_comments(cfg) + coeff_file_text(ser))
    elif args.format == "csv":
        rows = "".join(
            f"{n},{_fmt(z.real)},{_fmt(z.imag)}\n" for n, z in enumerate(ser.coeffs)
        )
        _emit(_config_comments(cfg) + "n,re,im\n" + rows)
    else:
        payload = {"config": cfg, "coeffs": [[z.real, z.imag] for z in ser.coeffs]}
        _emit(json.dumps(payload, indent=2) + "\n")
    _note(f"coeffs: {label} at order {args.order}")
    return 0


def _cmd_hbnorm(args) -> int:
    sym, label = _symbol_from_args(args)
    if args.monomial is not None:
        if args.monomial > args.order:
            raise ValueError("monomial degree exceeds --order")
        p = PowerSeries([0.0] * args.monomial + [1.0])
        kind = f"z^{args.monomial}"
    else:
        p = load_coeff_file(args.poly_file)
        kind = f"poly:{args.poly_file}"
    cfg = {
        "command": "hbnorm",
        "version": __version__,
        "symbol": label,
        "order": args.order,
        "argument": kind,
        "format": args.format,
    }
    q = CoToeplitz(sym.series).apply(p)
    h2 = float(np.sum(np.abs(p.coeffs) ** 2))
    co = float(np.sum(np.abs(q.coeffs) ** 2))
    report = {"h2_part": h2, "coanalytic_part": co, "norm_sq": h2 + co}
    if args.monomial is not None:
        report["monomial_formula"] = monomial_hb_norm_sq(sym.series, args.monomial)
    if args.format == "csv":
        cols = ",".join(report)
        vals = ",".join(_fmt(v) for v in report.values())
        _emit(_config_comments(cfg) + cols + "\n" + vals + "\n")
    else:
        _emit(json.dumps({"config": cfg, **report}, indent=2) + "\n")
    _note(f"hbnorm: ||{kind}||^2 = {report['norm_sq']:.12g} under {label}")
    return 0


def _cmd_containment(args) -> int:
    sym, label = _symbol_from_args(args)
    if args.p is None and not args.weighted:
        raise ValueError("containment needs --p or --weighted")
    if args.p is not None and args.weighted:
        raise ValueError("--p and --weighted are mutually exclusive")
    if args.p is not None:
        p = args.p
        cfg = {
            "command": "containment",
            "version": __version__,
            "symbol": label,
            "order": args.order,
            "p": p,
            "format": args.format,
        }
        verdict = containment_hp(sym, p)
        if args.format == "csv":
            head = _config_comments(cfg) + f"# verdict={verdict.verdict}\n"
            rows = "".join(
                f"{j},{_fmt(r)},{m},{_fmt(mean)}\n"
                for (j, r, m, mean) in verdict.membership.evidence
            )
            _emit(head + "j,r,grid_size,mean\n" + rows)
        else:
            _emit(json.dumps({"config": cfg, **verdict.to_dict()}, indent=2) + "\n")
        _note(
            f"containment: H^{p:g} in H(b) for {label}: {verdict.verdict} "
            f"(p_tilde={verdict.p_tilde:g})"
        )
        return 0 if verdict.verdict != "inconclusive" else 1
    weight = gevrey_weight(args.gevrey_c) if args.gevrey_c is not None else None
    space = f"gevrey({args.gevrey_c:g})" if args.gevrey_c is not None else "dirichlet"
    cfg = {
        "command": "containment",
        "version": __version__,
        "symbol": label,
        "order": args.order,
        "space": space,
        "levels": f"{args.levels[0]}:{args.levels[1]}",
        "refinement": args.refinement,
        "format": args.format,
    }
    report = weighted_containment(sym, weight, n_range=args.levels, refinement=args.refinement)
    if args.format == "csv":
        head = _config_comments(cfg) + f"# verdict={report.verdict}\n"
        _emit(head + report.to_csv())
    else:
        _emit(json.dumps({"config": cfg, **report.to_dict()}, indent=2) + "\n")
    _note(f"containment: {space} in H(b) for {label}: {report.verdict}")
    if report.flagged:
        _note("warning: report flagged (non-converged quadrature or band spread)")
        return 1
    return 0


def _cmd_casestudy(args) -> int:
    cs = [float(x) for x in args.c_values.split(",") if x.strip()]
    if not cs:
        raise ValueError("need at least one value in --c-values")
    cfg = {
        "command": "casestudy",
        "version": __version__,
        "c_values": args.c_values,
        "with_theta": args.with_theta,
        "levels": f"{args.levels[0]}:{args.levels[1]}",
        "refinement": args.refinement,
        "format": args.format,
    }
    result = run_experiment(cs, args.with_theta, args.levels, refinement=args.refinement)
    if args.format == "csv":
        _emit(_config_comments(cfg) + result.to_csv())
    else:
        payload = {"config": cfg, **result.to_dict()}
        if args.growth:
            payload["growth_checks"] = [
                multiplier_growth_check(c, args.with_theta).to_dict() for c in cs
            ]
        _emit(json.dumps(payload, indent=2) + "\n")
    for row in result.rows:
        _note(
            f"casestudy: c={row.c:g} theta={int(row.with_theta)} "
            f"slope={row.report.slope:+.3f} -> {row.verdict}"
        )
    if any(row.report.flagged for row in result.rows):
        _note("warning: at least one profile flagged")
        return 1
    return 0


# -- selftest ------------------------------------------------------------------


def _suite_series(tol: float, rng) -> list:
    checks = []
    ps = phi_c_series(0.5, 4).coeffs.real
    ref = np.array([1.0, 0.5, 0.375, 0.3125, 0.2734375])
    checks.append(("phi_half_head", float(np.max(np.abs(ps - ref))) <= tol, f"dev={np.max(np.abs(ps - ref)):.2e}"))
    th = theta_series(64)
    dev0 = abs(th.coeffs[0] - math.exp(-0.5)) + abs(th.coeffs[1] + math.exp(-0.5))
    checks.append(("theta_head", dev0 <= tol, f"dev={dev0:.2e}"))
    l2 = float(np.max(np.cumsum(np.abs(th.coeffs) ** 2)))
    checks.append(("theta_h2_bound", l2 <= 1.0 + tol, f"max_partial={l2:.6f}"))
    f = PowerSeries(0.3 * (rng.standard_normal(33) + 1j * rng.standard_normal(33)))
    g = PowerSeries(0.3 * (rng.standard_normal(33) + 1j * rng.standard_normal(33)))
    dev = float(np.max(np.abs(((f + g).exp() - f.exp() * g.exp()).coeffs)))
    checks.append(("exp_additive", dev <= tol, f"dev={dev:.2e}"))
    dev = float(np.max(np.abs((f * g - g * f).coeffs)))
    checks.append(("mul_commutes", dev <= tol, f"dev={dev:.2e}"))
    return checks


def _suite_boundary(tol: float, rng) -> list:
    checks = []
    grid = BoundaryGrid.from_function(lambda z: np.full(z.shape, 2.0), 2**10)
    rec = outer_from_modulus(grid, 16).coeffs
    dev = abs(rec[0] - 2.0) + float(np.max(np.abs(rec[1:])))
    checks.append(("outer_constant", dev <= 1e3 * tol, f"dev={dev:.2e}"))
    grid = BoundaryGrid.from_function(lambda z: np.abs(1.0 - z), 2**12)
    rec = outer_from_modulus(grid, 64).coeffs
    ref = np.zeros(65, dtype=complex)
    ref[0], ref[1] = 1.0, -1.0
    dev = float(np.max(np.abs(rec - ref)))
    checks.append(("outer_one_minus_z", dev <= 1e9 * tol, f"dev={dev:.2e}"))
    triple = symbol_from_phi(phi_c_symbol(0.5, 256), 2**10, order=256)
    ok = triple.residual <= tol and triple.a.coeffs[0].real > 0
    checks.append(("pythagorean_pair", ok, f"residual={triple.residual:.2e}"))
    return checks


def _suite_toeplitz(tol: float, rng) -> list:
    checks = []
    worst = 0.0
    for _ in range(5):
        f = PowerSeries(rng.uniform(-1, 1, 33) + 1j * rng.uniform(-1, 1, 33))
        g = PowerSeries(rng.uniform(-1, 1, 33) + 1j * rng.uniform(-1, 1, 33))
        p = PowerSeries(rng.uniform(-1, 1, 33) + 1j * rng.uniform(-1, 1, 33))
        worst = max(worst, homomorphism_residual(f, g, p))
    checks.append(("homomorphism", worst <= tol, f"residual={worst:.2e}"))
    phi = phi_c_series(0.5, 64)
    dev = max(
        abs(monomial_hb_norm_sq(phi, n) - hb_norm_sq(phi, PowerSeries([0.0] * n + [1.0])))
        for n in range(65)
    )
    checks.append(("monomial_norms", dev <= tol, f"dev={dev:.2e}"))
    one = phi_c_series(1.0, 64)
    exact = all(monomial_hb_norm_sq(one, n) == n + 2.0 for n in range(65))
    checks.append(("monomial_exact_values", exact, "n+2 at every degree"))
    return checks


def _suite_hardy(tol: float, rng) -> list:
    checks = []
    mean = hp_integral_mean(lambda z: eval_phi_c(z, 1.0), 2.0, 0.9, 2**12)
    dev = abs(mean**2 - 1.0 / (1.0 - 0.81))
    checks.append(("parseval_mean", dev <= 1e2 * tol, f"dev={dev:.2e}"))
    try:
        p_tilde(1.5)
        rejected = False
    except ValueError:
        rejected = True
    checks.append(("rejects_p_below_2", rejected, "p=1.5 raises"))
    checks.append(("p_tilde_values", p_tilde(4.0) == 4.0 and p_tilde(math.inf) == 2.0, ""))
    return checks


def _suite_carleson(tol: float, rng) -> list:
    checks = []
    worst = 0.0
    for n in range(1, 6):
        got = square_measure(lambda z: np.ones(z.shape), DyadicSquare(n, 1)).value
        ref = 2.0 * 4.0**-n - 8.0**-n
        worst = max(worst, abs(got - ref) / ref)
    checks.append(("uniform_box_mass", worst <= 1e4 * tol, f"rel={worst:.2e}"))
    inside = bool(stolz_contains(0.0)) and bool(stolz_contains(0.9))
    outside = not stolz_contains(0.99 * np.exp(2.0j))
    checks.append(("stolz_predicate", inside and outside, ""))
    lemma = geometric_lemma_check(3, 1500, seed=int(rng.integers(0, 2**31)))
    checks.append(("covering_lemma", lemma.passed, f"failures={lemma.failures}"))
    dev = abs(moments(lambda r: np.ones_like(r), 3) - 0.25)
    checks.append(("bergman_moment", dev <= 1e2 * tol, f"dev={dev:.2e}"))
    return checks


def _suite_casestudy(tol: float, rng) -> list:
    checks = []
    circ = LevelCircle.from_level(math.exp(-2.0))
    checks.append(("tangency_exact", circ.center + circ.radius == 1.0, ""))
    dev = levelset_identity_check(1.0, math.exp(-1.0), 50)
    checks.append(("levelset_identity", dev <= tol, f"dev={dev:.2e}"))
    dev = abs(theta_modulus_sq(0.0) - math.exp(-1.0))
    checks.append(("theta_at_origin", dev <= tol, f"dev={dev:.2e}"))
    trend = multiplier_growth_check(1.0, True).trend
    checks.append(("critical_growth_constant", trend == "constant", f"trend={trend}"))
    return checks


_SUITES = (
    ("series", _suite_series, 1e-12),
    ("boundary", _suite_boundary, 1e-12),
    ("toeplitz", _suite_toeplitz, 1e-12),
    ("hardy", _suite_hardy, 1e-12),
    ("carleson", _suite_carleson, 1e-12),
    ("casestudy", _suite_casestudy, 1e-12),
)


def _cmd_selftest(args) -> int:
    cfg = {
        "command": "selftest",
        "version": __version__,
        "seed": args.seed,
        "tolerance_scale": args.tolerance_scale,
        "format": args.format,
    }
    rng = np.random.default_rng(args.seed)
    rows = []
    failed_suites = []
    for name, fn, base_tol in _SUITES:
        checks = fn(base_tol * args.tolerance_scale, rng)
        ok = all(passed for _, passed, _ in checks)
        if not ok:
            failed_suites.append(name)
        status = "PASS" if ok else "FAIL"
        _note(f"suite {name}: {status} ({len(checks)} checks)")
        for cname, passed, detail in checks:
            if not passed:
                _note(f"  failed: {cname} {detail}")
            rows.append((name, cname, bool(passed), detail))
    if args.format == "csv":
        body = "".join(
            f"{s},{c},{int(p)},{d.replace(',', ';')}\n" for s, c, p, d in rows
        )
        _emit(_config_comments(cfg) + "suite,check,passed,detail\n" + body)
    else:
        payload = {
            "config": cfg,
            "passed": not failed_suites,
            "failed_suites": failed_suites,
            "checks": [
                {"suite": s, "check": c, "passed": p, "detail": d}
                for s, c, p, d in rows
            ],
        }
        _emit(json.dumps(payload, indent=2) + "\n")
    if failed_suites:
        _note("selftest FAILED in: " + ", ".join(failed_suites))
        return 1
    _note("selftest passed")
    return 0


# -- parser --------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hbkit",
        description="Numerics for non-extreme de Branges-Rovnyak spaces H(b).",
    )
    parser.add_argument("--version", action="version", version=f"hbkit {__version__}")
    subs = parser.add_subparsers(dest="command", required=True)

    sp = subs.add_parser("coeffs", help="emit Taylor coefficients of a symbol")
    _add_symbol_flags(sp)
    sp.add_argument("--order", type=int, default=DEFAULT_ORDER)
    sp.add_argument("--format", choices=("text", "csv", "json"), default="text")
    sp.set_defaults(func=_cmd_coeffs)

    sp = subs.add_parser("hbnorm", help="H(b) norm of a polynomial under a symbol")
    _add_symbol_flags(sp)
    sp.add_argument("--order", type=int, default=DEFAULT_ORDER)
    grp = sp.add_mutually_exclusive_group(required=True)
    grp.add_argument("--monomial", type=int, metavar="N", help="the monomial z^N")
    grp.add_argument("--poly-file", metavar="PATH", help="polynomial from a 're im' file")
    sp.add_argument("--format", choices=("csv", "json"), default="json")
    sp.set_defaults(func=_cmd_hbnorm)

    sp = subs.add_parser("containment", help="is a Hardy or weighted space inside H(b)?")
    _add_symbol_flags(sp)
    sp.add_argument("--order", type=int, default=DEFAULT_ORDER)
    sp.add_argument("--p", type=_parse_p, default=None, metavar="P",
                    help="Hardy exponent, 2 <= P <= inf")
    sp.add_argument("--weighted", action="store_true",
                    help="weighted-Bergman route via box-mass profiles")
    sp.add_argument("--gevrey-c", type=float, default=None, metavar="C",
                    help="with --weighted: weight exp(-C/(1-r)) instead of 1 "
                         "(underflows past level ~9, keep --levels shallow)")
    sp.add_argument("--levels", type=_parse_levels, default=(6, 14), metavar="LO:HI")
    sp.add_argument("--refinement", type=int, default=0)
    sp.add_argument("--format", choices=("csv", "json"), default="json")
    sp.set_defaults(func=_cmd_containment)

    sp = subs.add_parser("casestudy", help="three-regime profile study of |phi_c|^2 dA")
    sp.add_argument("--c-values", default="0.25,0.5,0.75", metavar="LIST",
                    help="comma separated exponents")
    sp.add_argument("--with-theta", action="store_true",
                    help="damp by the atomic inner factor |theta|^2")
    sp.add_argument("--levels", type=_parse_levels, default=(6, 14), metavar="LO:HI")
    sp.add_argument("--refinement", type=int, default=0)
    sp.add_argument("--growth", action="store_true",
                    help="include level-circle growth checks (json only)")
    sp.add_argument("--format", choices=("csv", "json"), default="csv")
    sp.set_defaults(func=_cmd_casestudy)

    sp = subs.add_parser("selftest", help="run the built-in check suites")
    sp.add_argument("--seed", type=int, default=DEFAULT_SEED)
    sp.add_argument("--tolerance-scale", type=float, default=1.0,
                    help="scale all suite tolerances (tiny values force failures)")
    sp.add_argument("--format", choices=("csv", "json"), default="json")
    sp.set_defaults(func=_cmd_selftest)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        _note(f"error: {exc}")
        return 2


if __name__ == "__main__":
    sys.exit(main())
