"""
Symbols and truncated power series
==================================

The two symbol families everything else is built from: the fractional
singularities phi_c(z) = (1-z)^(-c) and the atomic inner function
theta(z) = exp(-(1+z)/(2(1-z))).  Both have explicit Taylor recurrences,
so we can cross-check the series arithmetic against closed forms.
"""

import numpy as np

from hbkit import PowerSeries, eval_phi_c, eval_theta, phi_c_series, theta_series

# phi_c coefficients follow a one-term ratio recurrence: a_{n+1}/a_n = (n+c)/(n+1)
for c in (0.25, 0.5, 1.0, 2.0):
    ps = phi_c_series(c, 8)
    print(f"phi_{c:g} head: {np.round(ps.coeffs.real, 6)}")

# c = 1 is the geometric series, c = 2 the derivative ladder 1, 2, 3, ...
assert np.array_equal(phi_c_series(1.0, 8).coeffs, np.ones(9))
assert np.array_equal(phi_c_series(2.0, 8).coeffs, np.arange(1.0, 10.0))

# theta comes out of the series exponential; its Taylor coefficients decay
# while staying inside the unit ball of H^2 (sum of squares <= 1)
th = theta_series(64)
tail = np.cumsum(np.abs(th.coeffs) ** 2)
print(f"\ntheta head: {np.round(th.coeffs.real[:5], 6)}")
print(f"theta H^2 partial sums -> {tail[-1]:.6f} (limit is 1)")

# series evaluation vs the closed forms, well inside the disk
z = 0.3 + 0.4j
for label, series, closed in (
    ("phi_0.5", phi_c_series(0.5, 256), eval_phi_c(z, 0.5)),
    ("theta", theta_series(256), eval_theta(z)),
):
    err = abs(series(z) - closed)
    print(f"{label}({z}): series vs closed form differ by {err:.2e}")

# |theta| = 1 on the circle itself
w = np.exp(1j * np.linspace(0.3, 6.0, 7))
print(f"\n|theta| on the circle: {np.round(np.abs(eval_theta(w)), 12)}")

# arithmetic sanity: multiplying the geometric series by (1 - z) collapses it
geo = phi_c_series(1.0, 32)
one_minus_z = PowerSeries([1.0, -1.0])
prod = geo.mul(one_minus_z, 32)
print(f"(1-z) * geometric series = 1 + O(z^33): max tail {np.max(np.abs(prod.coeffs[1:])):.1e}")

# exp is a homomorphism from addition to multiplication on truncations
f = PowerSeries([0.0, 0.5, -0.25, 0.125])
g = PowerSeries([0.0, -0.1, 0.3, 0.2])
lhs = (f + g).exp()
rhs = f.exp() * g.exp()
print(f"exp(f+g) vs exp(f)exp(g): max diff {np.max(np.abs(lhs.coeffs - rhs.coeffs)):.1e}")
