import json
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from hbkit.boundary import phi_c_symbol
from hbkit.carleson import (
    STOLZ_ALPHA,
    BoxMass,
    Density,
    DyadicSquare,
    _region_mass,
    density_sup,
    geometric_lemma_check,
    gevrey_weight,
    level_profile,
    moments,
    square_measure,
    stolz_contains,
    weighted_containment,
)
from hbkit.series import eval_phi_c

UNIFORM = Density(lambda z: np.ones(z.shape), "uniform")


def uniform_box_mass(n: int) -> float:
    return 2.0 * 4.0**-n - 8.0**-n


# -- squares -------------------------------------------------------------------


def test_square_validation():
    with pytest.raises(ValueError):
        DyadicSquare(0, 1)
    with pytest.raises(ValueError):
        DyadicSquare(3, 0)
    with pytest.raises(ValueError):
        DyadicSquare(3, 5)
    DyadicSquare(3, 4)
    DyadicSquare(3, -4)


def test_theta_intervals():
    assert DyadicSquare(1, 1).theta_interval() == (0.0, np.pi)
    assert DyadicSquare(2, 2).theta_interval() == (np.pi / 2, np.pi)
    lo, hi = DyadicSquare(2, -2).theta_interval()
    assert (lo, hi) == (-np.pi, -np.pi / 2)
    for n in (1, 3, 6):
        lo, hi = DyadicSquare(n, 1).theta_interval()
        assert abs((hi - lo) - 2 * np.pi * 2.0**-n) < 1e-15


def test_contains_basic_points():
    sq = DyadicSquare(2, 1)
    assert sq.contains(0.99 * np.exp(0.5j))
    assert not sq.contains(0.5 * np.exp(0.5j))  # too deep
    assert not sq.contains(0.99 * np.exp(2.0j))  # wrong arc
    assert DyadicSquare(2, -1).contains(0.99 * np.exp(-0.5j))


@given(st.integers(1, 10), st.data())
@settings(max_examples=40, deadline=None)
def test_sampled_points_lie_in_their_square(n, data):
    k = data.draw(st.integers(1, 2 ** (n - 1)))
    sign = data.draw(st.sampled_from((1, -1)))
    sq = DyadicSquare(n, sign * k)
    z = sq.sample(64, np.random.default_rng(0))
    assert np.all(sq.contains(z))
    assert np.all(DyadicSquare(n, -sign * k).contains(np.conj(z)))


def test_stolz_predicate():
    assert stolz_contains(0.0)
    assert stolz_contains(0.9)
    assert stolz_contains(np.array([0.5, 0.99])).all()
    assert not stolz_contains(0.99 * np.exp(2.0j))
    with pytest.raises(ValueError):
        stolz_contains(1.0)


# -- box masses ----------------------------------------------------------------


def test_uniform_masses_match_closed_form():
    for n in range(1, 9):
        got = square_measure(UNIFORM, DyadicSquare(n, 1))
        ref = uniform_box_mass(n)
        assert got.converged
        assert abs(got.value - ref) / ref < 1e-10


def test_uniform_mass_independent_of_k():
    ref = uniform_box_mass(4)
    for k in (1, -1, 3, 8, -8):
        got = float(square_measure(UNIFORM, DyadicSquare(4, k)))
        assert abs(got - ref) / ref < 1e-10


def test_box_mass_against_monte_carlo_oracle():
    # frozen reference: area average of |1-z|^{-1} over S_{4,1} from an
    # 8e6-point area sample (seed 12345), value 0.06906167 +/- 6e-5
    dens = Density(lambda z: np.abs(1.0 - z) ** -1.0, "|phi_half|^2")
    got = float(square_measure(dens, DyadicSquare(4, 1)))
    assert abs(got - 0.06906167) / 0.06906167 < 0.02


def test_mass_additivity_under_subdivision():
    dens = Density(lambda z: np.abs(1.0 - z) ** -1.0, "|phi_half|^2")
    for k in (1, 2):
        whole = float(square_measure(dens, DyadicSquare(5, k), rtol=1e-3))
        left = float(square_measure(dens, DyadicSquare(6, 2 * k - 1), rtol=1e-3))
        right = float(square_measure(dens, DyadicSquare(6, 2 * k), rtol=1e-3))
        lo, hi = DyadicSquare(5, k).theta_interval()
        band = _region_mass(dens, lo, hi, 2.0**-6, 2.0**-5, 3)
        assert abs(whole - (left + right + band)) / whole < 0.01


def test_box_mass_float_protocol():
    bm = square_measure(UNIFORM, DyadicSquare(2, 1))
    assert isinstance(bm, BoxMass)
    assert float(bm) == bm.value


def test_density_rejects_negative_values():
    bad = Density(lambda z: -np.ones(z.shape), "bad")
    with pytest.raises(ValueError):
        square_measure(bad, DyadicSquare(2, 1))


def test_mass_monotone_in_singularity_strength():
    # stronger singularity at 1 concentrates more mass in the corner box
    vals = [
        float(square_measure(lambda z: np.abs(1.0 - z) ** (-2.0 * c), DyadicSquare(6, 1)))
        for c in (0.25, 0.5, 0.75)
    ]
    assert vals[0] < vals[1] < vals[2]


# -- level profiles ------------------------------------------------------------


def test_uniform_profile_vanishes():
    rep = level_profile(UNIFORM, (1, 6))
    assert rep.classification == "vanishing"
    assert not rep.flagged
    for stat in rep.stats:
        ref = (2.0**stat.n) * uniform_box_mass(stat.n)
        assert abs(stat.ratio - ref) / ref < 1e-8
    # ratio(n) = 2^{1-n}(1 - 2^{-n-1}) roughly halves per level; the low
    # levels bend the fit a little, so only bracket the slope
    assert -1.05 < rep.slope < -0.8


def test_profile_asymmetric_scan_matches_symmetric():
    a = level_profile(UNIFORM, (2, 5))
    b = level_profile(UNIFORM, (2, 5), symmetric=False)
    for sa, sb in zip(a.stats, b.stats):
        assert abs(sa.ratio - sb.ratio) / sa.ratio < 1e-9


def test_profile_fixture_regimes_reduced_range():
    vanish = weighted_containment(phi_c_symbol(0.25, 8), n_range=(6, 10))
    assert vanish.verdict == "compact-contained"
    grow = weighted_containment(phi_c_symbol(0.75, 8), n_range=(6, 10))
    assert grow.verdict == "not-contained"
    assert grow.slope > 0.3


def test_profile_report_serialization():
    rep = level_profile(UNIFORM, (1, 6))
    csv = rep.to_csv().splitlines()
    assert csv[0] == "n,k_max,ratio"
    assert len(csv) == 7
    data = json.loads(rep.to_json())
    assert data["classification"] == "vanishing"
    assert len(data["levels"]) == 6
    assert "finitely many levels" in data["note"]


def test_profile_input_validation():
    with pytest.raises(ValueError):
        level_profile(UNIFORM, (0, 4))
    zero = Density(lambda z: np.zeros(z.shape), "zero")
    with pytest.raises(ValueError):
        level_profile(zero, (2, 4))


def test_corner_mass_monotone_in_c():
    for n in (6, 8):
        vals = [
            float(
                square_measure(
                    lambda z: np.abs(1.0 - z) ** (-2.0 * c), DyadicSquare(n, 1)
                )
            )
            for c in (0.25, 0.5, 0.75, 1.0)
        ]
        assert all(b > a for a, b in zip(vals, vals[1:]))


# -- weights and moments -------------------------------------------------------


def test_gevrey_weight_values():
    g = gevrey_weight(1.0)
    assert abs(g(0.0) - math.exp(-1.0)) < 1e-15
    assert g(1.0) == 0.0
    assert g(1.0 - 1e-5) == 0.0  # exponent below the clamp
    out = g(np.array([0.0, 0.5, 1.0]))
    assert out.shape == (3,)
    assert np.all(np.diff(out) <= 0.0)


def test_bergman_moments_closed_form():
    ones = lambda r: np.ones_like(r)
    for n in (0, 1, 5, 16, 32):
        assert abs(moments(ones, n) - 1.0 / (n + 1)) < 1e-10


def test_gevrey_moment_against_frozen_reference():
    # 2 int_0^1 exp(-1/(1-r)) r dr, high-precision quadrature reference
    got = moments(gevrey_weight(1.0), 0)
    assert abs(got - 0.07760707915632382) < 1e-10


def test_moments_decrease_in_n():
    g = gevrey_weight(0.5)
    vals = [moments(g, n) for n in range(6)]
    assert all(b < a for a, b in zip(vals, vals[1:]))


def test_divergent_moment_raises():
    with pytest.raises(ValueError):
        moments(lambda r: 1.0 / (1.0 - r), 0)


def test_density_sup_uniform():
    assert abs(density_sup(UNIFORM) - 1.0) < 1e-12


def test_density_sup_gevrey_bounded_and_stable():
    g = gevrey_weight(1.0)
    dens = Density(lambda z: np.abs(eval_phi_c(z, 0.5)) ** 2 * g(np.abs(z)), "probe")
    s0 = density_sup(dens, resolution=1)
    s1 = density_sup(dens, resolution=2)
    assert math.isfinite(s0) and s0 > 0
    assert abs(s1 - s0) <= 0.05 * s1


# -- covering lemma ------------------------------------------------------------


def test_covering_lemma_passes_at_reference_aperture():
    res = geometric_lemma_check(4, 4000, seed=1)
    assert res.passed
    assert res.alpha == STOLZ_ALPHA
    assert res.via_union + res.via_stolz + res.failures == res.samples


def test_covering_lemma_fails_with_steep_aperture():
    res = geometric_lemma_check(4, 4000, alpha=0.9, seed=1)
    assert not res.passed
    assert res.failures > 0


def test_covering_lemma_alpha_value():
    assert abs(STOLZ_ALPHA - 1.0 / (4.0 * math.pi + 2.0)) == 0.0
