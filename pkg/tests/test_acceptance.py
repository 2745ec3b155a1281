"""Acceptance suite: every release-blocking behavior, one pass/fail line each.

Run with ``pytest tests/test_acceptance.py -v``; each criterion prints
``[acceptance NN] PASS|FAIL <description>`` in addition to the usual pytest
status, with tolerances pinned in the assertions.
"""

import math
import time

import numpy as np

from hbkit.boundary import (
    BoundaryGrid,
    outer_from_modulus,
    phi_c_symbol,
    symbol_from_phi,
    theta_phi_c_symbol,
    theta_symbol,
)
from hbkit.carleson import (
    STOLZ_ALPHA,
    Density,
    DyadicSquare,
    density_sup,
    geometric_lemma_check,
    gevrey_weight,
    level_profile,
    moments,
    square_measure,
)
from hbkit.casestudy import LevelCircle, levelset_identity_check, mu_density
from hbkit.hardy import containment_hp, sarason_limit_check
from hbkit.series import PowerSeries, eval_phi_c, phi_c_series, theta_series
from hbkit.toeplitz import hb_norm_sq, homomorphism_residual, monomial_hb_norm_sq


def _report(num: int, desc: str, ok: bool, detail: str = "") -> None:
    line = f"[acceptance {num:02d}] {'PASS' if ok else 'FAIL'} {desc}"
    if detail:
        line += f" | {detail}"
    print(line)
    assert ok, line


def _random_series(rng, order):
    re = rng.uniform(-1.0, 1.0, order + 1)
    im = rng.uniform(-1.0, 1.0, order + 1)
    return PowerSeries(re + 1j * im)


def test_c01_toeplitz_homomorphism_random_pairs():
    rng = np.random.default_rng(20240817)
    start = time.perf_counter()
    worst = 0.0
    for _ in range(100):
        phi = _random_series(rng, 64)
        psi = _random_series(rng, 64)
        p = _random_series(rng, 64)
        worst = max(worst, homomorphism_residual(phi, psi, p))
    elapsed = time.perf_counter() - start
    ok = worst <= 1e-12 and elapsed < 5.0
    _report(
        1,
        "co-analytic Toeplitz symbol map is multiplicative on 100 random pairs "
        "at order 64 (residual <= 1e-12, under 5 s)",
        ok,
        f"worst={worst:.2e} elapsed={elapsed:.2f}s",
    )


def test_c02_monomial_norm_formula_matches_operator_route():
    symbols = {
        "phi_0.5": phi_c_series(0.5, 256),
        "phi_1": phi_c_series(1.0, 256),
        "theta": theta_series(256),
    }
    worst = 0.0
    for name, phi in symbols.items():
        for n in range(257):
            p = PowerSeries([0.0] * n + [1.0])
            dev = abs(monomial_hb_norm_sq(phi, n) - hb_norm_sq(phi, p))
            worst = max(worst, dev)
    exact = all(
        monomial_hb_norm_sq(symbols["phi_1"], n) == n + 2.0 for n in range(257)
    )
    ok = worst <= 1e-12 and exact
    _report(
        2,
        "monomial H(b) norms match the operator route for phi_0.5, phi_1, theta "
        "up to degree 256 (<= 1e-12), with ||z^n||^2 = n + 2 exactly for phi_1",
        ok,
        f"worst={worst:.2e} phi_1_exact={exact}",
    )


def test_c03_pythagorean_pairs_from_symbols():
    worst = -1.0
    heads = []
    for sym in (phi_c_symbol(0.25), phi_c_symbol(0.5), theta_phi_c_symbol(1.0)):
        triple = symbol_from_phi(sym, 2**14, order=256)
        worst = max(worst, triple.residual)
        heads.append(triple.a.coeffs[0].real)
    ok = worst <= 1e-8 and all(a0 > 0 for a0 in heads)
    _report(
        3,
        "pipeline phi -> (b, a) satisfies |a|^2 + |b|^2 = 1 on the 2^14 grid "
        "(residual <= 1e-8) with a(0) > 0, for phi_0.25, phi_0.5, theta*phi_1",
        ok,
        f"worst_residual={worst:.2e} a0_min={min(heads):.4f}",
    )


def test_c04_outer_reconstruction_converges():
    ref = phi_c_series(0.25, 256).coeffs
    errs = {}
    for m in (2**14, 2**15):
        grid = BoundaryGrid.from_function(lambda z: np.abs(eval_phi_c(z, 0.25)), m)
        rec = outer_from_modulus(grid, 256).coeffs
        errs[m] = float(np.max(np.abs(rec - ref)))
    ok = errs[2**14] <= 1e-3 and errs[2**15] < errs[2**14]
    _report(
        4,
        "outer function from |phi_0.25| recovers the coefficients at M = 2^14 "
        "(per-coefficient error <= 1e-3) and the error shrinks when M doubles",
        ok,
        f"err_2^14={errs[2**14]:.2e} err_2^15={errs[2**15]:.2e}",
    )


def test_c05_hardy_containment_verdicts():
    start = time.perf_counter()
    fixtures = [
        (0.1, 4.0, "contained"),
        (0.4, 4.0, "not-contained"),
        (0.2, math.inf, "contained"),
        (0.6, math.inf, "not-contained"),
    ]
    got = [
        (c, p, containment_hp(phi_c_symbol(c, 8), p).verdict) for c, p, _ in fixtures
    ]
    elapsed = time.perf_counter() - start
    ok = all(g == e for (_, _, g), (_, _, e) in zip(got, fixtures)) and elapsed < 30.0
    _report(
        5,
        "H^p containment verdicts: (c, p) = (0.1, 4) and (0.2, inf) contained, "
        "(0.4, 4) and (0.6, inf) not contained, under 30 s",
        ok,
        f"verdicts={[v for (_, _, v) in got]} elapsed={elapsed:.2f}s",
    )


def test_c06_uniform_box_masses_closed_form():
    worst = 0.0
    for n in range(1, 13):
        got = float(square_measure(lambda z: np.ones(z.shape), DyadicSquare(n, 1)))
        ref = 2.0 * 4.0**-n - 8.0**-n
        worst = max(worst, abs(got - ref) / ref)
    ok = worst <= 1e-8
    _report(
        6,
        "uniform-density box masses equal 2*4^-n - 8^-n to 1e-8 relative "
        "for n = 1..12",
        ok,
        f"worst_rel={worst:.2e}",
    )


def test_c07_three_regimes_without_inner_factor():
    start = time.perf_counter()
    reports = {c: level_profile(mu_density(c), (6, 14)) for c in (0.25, 0.5, 0.75)}
    elapsed = time.perf_counter() - start
    r25, r50, r75 = reports[0.25], reports[0.5], reports[0.75]
    ok = (
        r25.classification == "vanishing"
        and r25.slope <= -0.1
        and r50.classification == "bounded"
        and abs(r50.slope) < 0.1
        and r50.within_band
        and r75.classification == "unbounded"
        and abs(r75.slope - 0.5) <= 0.15
        and elapsed < 180.0
    )
    _report(
        7,
        "|phi_c|^2 dA profiles over levels 6..14 hit the three regimes: "
        "c = 0.25 vanishing, c = 0.5 bounded within a factor 3, "
        "c = 0.75 unbounded with slope 0.5 +/- 0.15, under 3 min",
        ok,
        f"slopes=({r25.slope:+.3f}, {r50.slope:+.3f}, {r75.slope:+.3f}) "
        f"elapsed={elapsed:.1f}s",
    )


def test_c08_three_regimes_with_inner_factor():
    start = time.perf_counter()
    reports = {
        c: level_profile(mu_density(c, with_theta=True), (6, 14))
        for c in (0.75, 1.0, 1.25)
    }
    elapsed = time.perf_counter() - start
    r75, r100, r125 = reports[0.75], reports[1.0], reports[1.25]
    ratios = [s.ratio for s in r100.stats]
    ok = (
        r75.classification == "vanishing"
        and r100.classification == "bounded"
        and abs(r100.slope) < 0.1
        and r100.within_band
        and min(ratios) > 0.0
        and r125.classification == "unbounded"
        and r125.slope >= 0.2
        and elapsed < 180.0
    )
    _report(
        8,
        "|theta phi_c|^2 dA profiles over levels 6..14 shift the regimes: "
        "c = 0.75 vanishing, c = 1.0 bounded non-vanishing, c = 1.25 "
        "unbounded with slope >= 0.2, under 3 min",
        ok,
        f"slopes=({r75.slope:+.3f}, {r100.slope:+.3f}, {r125.slope:+.3f}) "
        f"elapsed={elapsed:.1f}s",
    )


def test_c09_level_circle_identities():
    worst = 0.0
    for c in (1.0, 2.0):
        for t in (math.exp(-1.0), math.exp(-2.0)):
            worst = max(worst, levelset_identity_check(c, t, samples=100))
    tangency = all(
        (lambda circ: circ.center + circ.radius == 1.0)(LevelCircle.from_level(t))
        for t in (math.exp(-1.0), math.exp(-2.0), math.exp(-3.0), 0.9, 0.1)
    )
    ok = worst <= 1e-12 and tangency
    _report(
        9,
        "level-circle identities for theta*phi_c hold to 1e-12 relative at 100 "
        "points for c in {1, 2}, t in {1/e, 1/e^2}; center + radius = 1 exactly",
        ok,
        f"worst_rel={worst:.2e} tangency_exact={tangency}",
    )


def test_c10_covering_lemma_sampled():
    results = [geometric_lemma_check(n, 10**4, alpha=STOLZ_ALPHA, seed=42) for n in (4, 8)]
    ok = all(r.passed for r in results)
    _report(
        10,
        "corner boxes S_{n,1} for n in {4, 8} are covered by the Stolz angle of "
        "aperture 1/(4 pi + 2) plus deeper k = 2 boxes (10^4 samples each)",
        ok,
        f"failures={[r.failures for r in results]}",
    )


def test_c11_gevrey_sups_and_weight_moments():
    sups = {}
    stable = True
    for c in (0.5, 1.0, 2.0):
        for cp in (0.5, 1.0):
            g = gevrey_weight(cp)
            dens = Density(
                lambda z, c=c, g=g: np.abs(eval_phi_c(z, c)) ** 2 * g(np.abs(z)),
                f"|phi_{c}|^2 gevrey({cp})",
            )
            s0 = density_sup(dens, resolution=1)
            s1 = density_sup(dens, resolution=2)
            sups[(c, cp)] = s1
            stable = stable and math.isfinite(s1) and abs(s1 - s0) <= 0.05 * s1
    ones = lambda r: np.ones_like(r)
    moment_dev = max(abs(moments(ones, n) - 1.0 / (n + 1)) for n in range(33))
    ok = stable and moment_dev <= 1e-10
    _report(
        11,
        "|phi_c|^2 exp(-c'/(1-r)) sups are finite and stable to 5% under grid "
        "doubling for c in {0.5, 1, 2}, c' in {0.5, 1}; trivial-weight moments "
        "equal 1/(n+1) to 1e-10 for n <= 32",
        ok,
        f"sup_range=({min(sups.values()):.3g}, {max(sups.values()):.3g}) "
        f"moment_dev={moment_dev:.2e}",
    )


def test_c12_monomial_norm_limits():
    conv = sarason_limit_check(phi_c_series(0.2, 256))
    div = sarason_limit_check(phi_c_series(1.0, 256))
    sums_exact = np.array_equal(div.partial_sums, np.arange(2.0, 259.0))
    ok = conv.verdict == "convergent" and div.verdict == "divergent" and sums_exact
    _report(
        12,
        "monomial norm limit exists for phi_0.2 (coefficient decay summable) and "
        "diverges for phi_1 with partial sums exactly n + 2",
        ok,
        f"conv_slope={conv.decay_slope:.2f} div_slope={div.decay_slope:.2f}",
    )
