import json
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from hbkit.carleson import DyadicSquare, square_measure
from hbkit.casestudy import (
    THETA_WEIGHT,
    LevelCircle,
    levelset_identity_check,
    mu_density,
    multiplier_growth_check,
    run_experiment,
    theta_modulus_sq,
)


# -- the densities -------------------------------------------------------------


def test_theta_modulus_values():
    assert abs(theta_modulus_sq(0.0) - math.exp(-1.0)) < 1e-15
    # |theta| = 1 on the circle away from the singular point
    z = np.exp(1j * np.linspace(0.5, 5.8, 20))
    assert np.max(np.abs(theta_modulus_sq(z) - 1.0)) < 1e-12
    # deep inside the tangency region the clamp gives exactly zero
    assert theta_modulus_sq(1.0 - 1e-10) == 0.0
    with pytest.raises(ValueError):
        theta_modulus_sq(1.0)


def test_mu_density_point_values():
    assert abs(mu_density(1.0)(np.array([0.0]))[0] - 1.0) < 1e-15
    with_t = mu_density(1.0, with_theta=True)(np.array([0.0]))[0]
    assert abs(with_t - math.exp(-1.0)) < 1e-15
    # at radius 1/2 on the real axis: |1-z|^{-2c} = 2^{2c}
    got = mu_density(0.75)(np.array([0.5]))[0]
    assert abs(got - 2.0**1.5) < 1e-12


def test_mu_density_labels_and_validation():
    assert mu_density(0.5).label == "|phi_0.5|^2"
    assert mu_density(1.25, True).label == "|theta*phi_1.25|^2"
    with pytest.raises(ValueError):
        mu_density(0.0)
    with pytest.raises(ValueError):
        mu_density(1.0)(np.array([1.0 + 0.0j]))


def test_theta_damping_shifts_corner_mass():
    # the inner factor suppresses the corner mass dramatically
    plain = float(square_measure(mu_density(0.75), DyadicSquare(8, 1)))
    damped = float(square_measure(mu_density(0.75, True), DyadicSquare(8, 1)))
    assert damped < 0.01 * plain


# -- level circles -------------------------------------------------------------


def test_level_circle_reference_values():
    circ = LevelCircle.from_level(math.exp(-1.0))
    assert abs(circ.s - 1.0) < 1e-15
    assert circ.radius == 0.5
    assert circ.center == 0.5
    assert circ.point(0.0) == 1.0
    assert abs(circ.point(np.pi) - 0.0) < 1e-15


def test_level_circle_validation():
    for t in (0.0, 1.0, -0.5, 2.0):
        with pytest.raises(ValueError):
            LevelCircle.from_level(t)


@given(st.floats(0.02, 0.98))
@settings(max_examples=80, deadline=None)
def test_tangency_is_exact(t):
    circ = LevelCircle.from_level(t)
    assert circ.center + circ.radius == 1.0


@given(st.floats(0.05, 0.95), st.floats(1e-12, math.pi))
@settings(max_examples=80, deadline=None)
def test_level_property_on_circle(t, psi):
    circ = LevelCircle.from_level(t)
    ratio = circ.one_minus_abs_sq(psi) / circ.abs_one_minus_sq(psi)
    assert abs(ratio - circ.s) <= 1e-13 * circ.s
    assert abs(math.exp(-ratio) - t) <= 1e-12 * t


def test_stable_forms_match_naive_at_moderate_angles():
    circ = LevelCircle.from_level(math.exp(-2.0))
    psi = np.array([0.1, 1.0, 2.5])
    z = circ.point(psi)
    assert np.max(np.abs(circ.one_minus_point(psi) - (1.0 - z))) < 1e-15
    assert np.max(np.abs(circ.abs_one_minus_sq(psi) - np.abs(1.0 - z) ** 2)) < 1e-15
    assert np.max(np.abs(circ.one_minus_abs_sq(psi) - (1.0 - np.abs(z) ** 2))) < 1e-14


def test_theta_modulus_constant_on_circle_via_points():
    circ = LevelCircle.from_level(math.exp(-1.0))
    psi = np.linspace(0.3, 5.9, 25)
    vals = theta_modulus_sq(circ.point(psi))
    assert np.max(np.abs(vals - math.exp(-1.0))) < 1e-10


@pytest.mark.parametrize("c", [1.0, 2.0])
@pytest.mark.parametrize("t", [math.exp(-1.0), math.exp(-2.0)])
def test_levelset_identity_tight(c, t):
    assert levelset_identity_check(c, t, samples=100) <= 1e-12


def test_levelset_identity_validation():
    with pytest.raises(ValueError):
        levelset_identity_check(0.0, 0.5)


# -- growth along level circles ------------------------------------------------


def test_growth_trends_at_the_three_regimes():
    assert multiplier_growth_check(0.5, True).trend == "bounded"
    crit = multiplier_growth_check(1.0, True)
    assert crit.trend == "constant"
    assert abs(crit.exponent) < 0.01
    div = multiplier_growth_check(1.25, True)
    assert div.trend == "divergent"
    assert div.multiplier_obstructed
    assert not multiplier_growth_check(1.0, True).multiplier_obstructed
    assert multiplier_growth_check(1.0, True).compactness_obstructed


def test_growth_without_inner_factor_decays_for_small_c():
    chk = multiplier_growth_check(0.25, False)
    assert chk.trend == "bounded"
    assert chk.exponent > 0.3


def test_growth_exponent_matches_half_one_minus_c():
    for c in (0.3, 0.8, 1.0, 1.5, 2.0):
        chk = multiplier_growth_check(c, True)
        assert abs(chk.exponent - 0.5 * (1.0 - c)) < 0.01


def test_growth_check_serialization():
    data = multiplier_growth_check(1.25, True).to_dict()
    assert data["trend"] == "divergent"
    assert data["multiplier_obstructed"] is True
    assert len(data["per_circle"]) == 3


# -- the experiment ------------------------------------------------------------


def test_experiment_regimes_reduced_range():
    res = run_experiment([0.25, 0.75], with_theta=False, n_range=(6, 10))
    assert [r.verdict for r in res.rows] == ["compact-contained", "not-contained"]
    res_t = run_experiment([0.75], with_theta=True, n_range=(6, 10))
    assert res_t.rows[0].verdict == "compact-contained"


def test_experiment_verdicts_monotone_and_improved_by_theta():
    rank = {"compact-contained": 2, "contained": 1, "not-contained": 0}
    plain = run_experiment([0.25, 0.75], False, (6, 9))
    order = [rank[r.verdict] for r in plain.rows]
    assert order == sorted(order, reverse=True)
    damped = run_experiment([0.25, 0.75], True, (6, 9))
    for a, b in zip(plain.rows, damped.rows):
        assert rank[b.verdict] >= rank[a.verdict]


def test_experiment_csv_and_json_shape():
    res = run_experiment([0.25], False, (6, 8))
    lines = res.to_csv().splitlines()
    assert lines[0] == "c,with_theta,n,max_ratio,slope,verdict"
    assert len(lines) == 4
    assert lines[1].startswith("0.25,0,6,")
    data = json.loads(res.to_json())
    assert data["theta_weight"] == THETA_WEIGHT
    assert data["rows"][0]["verdict"] == "compact-contained"
    assert data["rows"][0]["report"]["levels"][0]["n"] == 6


def test_damped_corner_masses_bounded_at_critical_exponent():
    # 2^n mu(S_{n,1}) stays within a narrow band for c = 1 with the factor
    dens = mu_density(1.0, True)
    ratios = [
        (2.0**n) * float(square_measure(dens, DyadicSquare(n, 1)))
        for n in (6, 9, 12)
    ]
    assert max(ratios) <= 2.0 * min(ratios)
