"""
Carleson box profiles near z = 1
================================

The measures of interest are |phi_c(z)|^2 dA(z)/pi, concentrated at the
boundary point z = 1.  Containment of the Dirichlet-type space in H(b)
comes down to whether the box masses mu(S_{n,k}) stay O(2^-n) uniformly
in k.  We track ratio(n) = 2^n max_k mu(S_{n,k}) across dyadic levels
and classify the trend: vanishing, bounded, or unbounded.
"""

import numpy as np

from hbkit import (
    Density,
    DyadicSquare,
    level_profile,
    phi_c_symbol,
    square_measure,
    weighted_containment,
)
from hbkit.casestudy import mu_density

# sanity: for the uniform density the box mass is exact
uniform = Density(lambda z: np.ones(z.shape), "uniform")
print("uniform-density box masses vs closed form 2*4^-n - 8^-n:")
for n in (2, 5, 8):
    got = float(square_measure(uniform, DyadicSquare(n, 1)))
    ref = 2.0 * 4.0**-n - 8.0**-n
    print(f"  n = {n}: {got:.3e}  (rel dev {abs(got - ref) / ref:.1e})")

# short level scans for three exponents. levels 6..11 keep this quick;
# the acceptance suite runs the full 6..14 window.
LEVELS = (6, 11)
for c in (0.25, 0.5, 0.75):
    rep = weighted_containment(phi_c_symbol(c), n_range=LEVELS)
    print(f"\n|phi_{c:g}|^2 dA: slope {rep.slope:+.3f} -> {rep.classification}"
          f" -> {rep.verdict}")
    for st in rep.stats[:3]:
        print(f"    n = {st.n:<3d} worst k = {st.k_max:<4d} ratio = {st.ratio:.4f}")

# the c = 0.5 profile is the flat one: ratios hover near a constant
rep = level_profile(mu_density(0.5), LEVELS)
ratios = [st.ratio for st in rep.stats]
print(f"\nc = 0.5 ratio spread: {min(ratios):.4f} .. {max(ratios):.4f}"
      f" (within factor 3 band: {rep.within_band})")

# reports serialize; every one carries the finite-evidence caveat
print("\ncsv:")
print(rep.to_csv())
print("note:", rep.note)
