"""
H(b) norms of monomials, two ways
=================================

For a non-extreme b with Pythagorean mate a and phi = b/a, the space norm
splits as ||p||^2 = ||p||_2^2 + ||T_phibar p||_2^2.  On monomials the
co-analytic Toeplitz part telescopes, giving the closed form

    ||z^n||^2 = 1 + |phi_0|^2 + ... + |phi_n|^2.

This script computes both routes and watches the n -> infinity limit,
which is finite exactly when phi is in H^2.
"""

import numpy as np
from scipy.special import gamma

from hbkit import (
    CoToeplitz,
    PowerSeries,
    hb_norm_sq,
    monomial_hb_norm_sq,
    phi_c_series,
    sarason_limit_check,
    theta_series,
)

ORDER = 256

phi = phi_c_series(0.5, ORDER)
op = CoToeplitz(phi)

# closed form vs operator route for a few degrees
print("n    closed form      operator route   diff")
for n in (0, 1, 4, 16, 64, 256):
    p = PowerSeries([0.0] * n + [1.0])
    a = monomial_hb_norm_sq(phi, n)
    b = hb_norm_sq(phi, p)
    print(f"{n:<4d} {a:<16.10f} {b:<16.10f} {abs(a - b):.1e}")

# the operator is upper triangular in the monomial basis: T_phibar z^n
# only produces powers m <= n
m = op.matrix(6)
print(f"\nT_phibar strictly lower triangle is zero: {np.allclose(np.tril(m, -1), 0.0)}")

# norm growth across the family: summable decay (c < 1/2) flattens out,
# the critical exponent c = 1/2 drifts up like log n, c = 1 grows linearly
print("\nn      c=0.2     c=0.5     c=1.0")
for n in (4, 16, 64, 256):
    row = [monomial_hb_norm_sq(phi_c_series(c, ORDER), n) for c in (0.2, 0.5, 1.0)]
    print(f"{n:<6d} {row[0]:<9.4f} {row[1]:<9.4f} {row[2]:<9.4f}")

# the limit test reads the coefficient decay off the series. it fits a
# power law, so it is meant for monotone-envelope families like phi_c;
# theta's oscillating coefficients would defeat the fit even though its
# partial sums plateau (see below)
print()
for label, series in (
    ("phi_0.2", phi_c_series(0.2, ORDER)),
    ("phi_0.5", phi_c_series(0.5, ORDER)),
    ("phi_1", phi_c_series(1.0, ORDER)),
):
    res = sarason_limit_check(series)
    line = f"{label:<8s} verdict={res.verdict:<12s} decay slope {res.decay_slope:+.2f}"
    if res.limit_estimate is not None:
        line += f"  limit ~ {res.limit_estimate:.4f}"
    print(line)

# for c = 0.2 the limit has a Gamma-function closed form: 1 + ||phi_c||_2^2
exact = 1.0 + gamma(1.0 - 0.4) / gamma(0.8) ** 2
print(f"\nexact limit for c = 0.2: {exact:.4f}")

# theta is inner, so ||theta||_2 = 1 and the monomial norms approach 2
# directly, no fit needed
th = theta_series(ORDER)
print("theta monomial norms:", ", ".join(
    f"n={n}: {monomial_hb_norm_sq(th, n):.4f}" for n in (16, 64, 256)
), "-> 2")
