"""Numerical toolkit for non-extreme de Branges-Rovnyak spaces H(b).

The package works with symbols phi = b/a in the Smirnov class, where (b, a)
is the Pythagorean pair of a non-extreme point b of the unit ball of
H-infinity: |a|^2 + |b|^2 = 1 on the unit circle and a(0) > 0.  It provides

* truncated power series arithmetic and the built-in symbol families
  (``series``),
* boundary grids, outer functions from prescribed moduli, and the
  phi -> (b, a) pipeline (``boundary``),
* co-analytic Toeplitz operators and H(b) norms of polynomials
  (``toeplitz``),
* Hardy space membership protocols and H^p containment verdicts
  (``hardy``),
* dyadic Carleson box masses, profile classification across scales, and
  weighted-space containment verdicts (``carleson``),
* a reproducible case study of the measures |phi_c|^2 dA with and without
  an atomic inner damping factor (``casestudy``).

The command line entry point ``hbkit`` exposes the main pipelines; run
``hbkit --help``.
"""

from .series import (
    DEFAULT_ORDER,
    PowerSeries,
    eval_phi_c,
    eval_theta,
    phi_c_series,
    theta_series,
)
from .boundary import (
    CHECK_GRID,
    RECON_GRID,
    BoundaryGrid,
    PythagoreanError,
    Symbol,
    SymbolTriple,
    outer_from_modulus,
    phi_c_symbol,
    polynomial_symbol,
    pythagorean_moduli,
    symbol_from_phi,
    theta_phi_c_symbol,
    theta_symbol,
)
from .toeplitz import (
    CoToeplitz,
    hb_norm_sq,
    homomorphism_residual,
    monomial_hb_norm_sq,
)
from .hardy import (
    ContainmentVerdict,
    HpVerdict,
    SarasonResult,
    containment_hp,
    hp_integral_mean,
    hp_membership,
    p_tilde,
    sarason_limit_check,
)
from .carleson import (
    FLATNESS_BAND,
    LEVEL_RANGE,
    SLOPE_MARGIN,
    STOLZ_ALPHA,
    BoxMass,
    CarlesonReport,
    Density,
    DyadicSquare,
    GeometricLemmaResult,
    LevelStat,
    density_sup,
    geometric_lemma_check,
    gevrey_weight,
    level_profile,
    moments,
    square_measure,
    stolz_contains,
    weighted_containment,
)
from .casestudy import (
    THETA_WEIGHT,
    ExperimentResult,
    GrowthCheck,
    LevelCircle,
    levelset_identity_check,
    mu_density,
    multiplier_growth_check,
    run_experiment,
    theta_modulus_sq,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # series
    "DEFAULT_ORDER",
    "PowerSeries",
    "phi_c_series",
    "theta_series",
    "eval_phi_c",
    "eval_theta",
    # boundary
    "CHECK_GRID",
    "RECON_GRID",
    "BoundaryGrid",
    "PythagoreanError",
    "Symbol",
    "SymbolTriple",
    "outer_from_modulus",
    "phi_c_symbol",
    "polynomial_symbol",
    "pythagorean_moduli",
    "symbol_from_phi",
    "theta_phi_c_symbol",
    "theta_symbol",
    # toeplitz
    "CoToeplitz",
    "hb_norm_sq",
    "homomorphism_residual",
    "monomial_hb_norm_sq",
    # hardy
    "ContainmentVerdict",
    "HpVerdict",
    "SarasonResult",
    "containment_hp",
    "hp_integral_mean",
    "hp_membership",
    "p_tilde",
    "sarason_limit_check",
    # carleson
    "FLATNESS_BAND",
    "LEVEL_RANGE",
    "SLOPE_MARGIN",
    "STOLZ_ALPHA",
    "BoxMass",
    "CarlesonReport",
    "Density",
    "DyadicSquare",
    "GeometricLemmaResult",
    "LevelStat",
    "density_sup",
    "geometric_lemma_check",
    "gevrey_weight",
    "level_profile",
    "moments",
    "square_measure",
    "stolz_contains",
    "weighted_containment",
    # casestudy
    "THETA_WEIGHT",
    "ExperimentResult",
    "GrowthCheck",
    "LevelCircle",
    "levelset_identity_check",
    "mu_density",
    "multiplier_growth_check",
    "run_experiment",
    "theta_modulus_sq",
]
