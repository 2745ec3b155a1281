"""Co-analytic Toeplitz operators and H(b) norms of polynomials.

For a non-extreme symbol phi = b/a the space H(b) contains all polynomials,
and the norm of a polynomial p is computable in coefficients:

    ||p||_{H(b)}^2 = ||p||_2^2 + ||T_{conj(phi)} p||_2^2.

T_{conj(phi)} acts on the coefficient vector through the upper triangular
matrix with entries ``conj(phi_{n-m})`` (row m, column n, n >= m), so a
degree d polynomial only ever touches ``phi_0 .. phi_d``:

    T_{conj(phi)} z^n = sum_{k=0}^{n} conj(phi_{n-k}) z^k.

On polynomials the symbol map is multiplicative,
``T_{conj(phi psi)} = T_{conj(phi)} T_{conj(psi)}``, exactly at the level of
truncated coefficients; ``homomorphism_residual`` measures how far a given
implementation strays from that identity.
"""

from __future__ import annotations

import numpy as np

from .series import PowerSeries

__all__ = [
    "CoToeplitz",
    "hb_norm_sq",
    "homomorphism_residual",
    "monomial_hb_norm_sq",
]


def _series_of(phi) -> PowerSeries:
    # accept a Symbol (has .series) or a PowerSeries directly
    ser = getattr(phi, "series", phi)
    if not isinstance(ser, PowerSeries):
        raise TypeError("expected a PowerSeries or a Symbol carrying one")
    return ser


class CoToeplitz:
    """The operator T_{conj(phi)} restricted to polynomials.

    ``apply`` is exact given phi's coefficients up to the polynomial degree,
    so the input degree may not exceed the stored symbol order.
    """

    def __init__(self, phi):
        self.phi = _series_of(phi)

    def apply(self, p: PowerSeries) -> PowerSeries:
        """Coefficients of T_{conj(phi)} p; q_m = sum_{n>=m} conj(phi_{n-m}) p_n."""
        if not isinstance(p, PowerSeries):
            raise TypeError("apply expects a PowerSeries")
        d = p.order
        if d > self.phi.order:
            raise ValueError(
                f"polynomial degree {d} exceeds stored symbol order {self.phi.order}"
            )
        rev = np.convolve(p.coeffs[::-1], np.conj(self.phi.coeffs[: d + 1]))
        return PowerSeries(rev[: d + 1][::-1])

    def entry(self, m: int, n: int) -> complex:
        """Matrix entry at row m, column n: conj(phi_{n-m}) above the diagonal."""
        if m < 0 or n < 0:
            raise ValueError("indices must be nonnegative")
        if n < m or n - m > self.phi.order:
            return 0j
        return complex(np.conj(self.phi.coeffs[n - m]))

    def matrix(self, size: int) -> np.ndarray:
        """Dense size x size section, mainly for inspection and tests."""
        out = np.zeros((size, size), dtype=complex)
        for m in range(size):
            top = min(size - 1, m + self.phi.order)
            ks = np.arange(m, top + 1)
            out[m, ks] = np.conj(self.phi.coeffs[ks - m])
        return out


def hb_norm_sq(phi, p: PowerSeries) -> float:
    """``||p||_2^2 + ||T_{conj(phi)} p||_2^2`` for a polynomial p."""
    q = CoToeplitz(phi).apply(p)
    return float(np.sum(np.abs(p.coeffs) ** 2) + np.sum(np.abs(q.coeffs) ** 2))


def monomial_hb_norm_sq(phi, n: int) -> float:
    """``||z^n||_{H(b)}^2 = 1 + sum_{k<=n} |phi_k|^2``.

    Nondecreasing in n; when ``sum |phi_k|^2`` converges the limit is
    ``1 + ||phi||_2^2``.
    """
    ser = _series_of(phi)
    if n < 0:
        raise ValueError("monomial degree must be nonnegative")
    if n > ser.order:
        raise ValueError(f"degree {n} exceeds stored symbol order {ser.order}")
    return float(1.0 + np.sum(np.abs(ser.coeffs[: n + 1]) ** 2))


def homomorphism_residual(phi, psi, p: PowerSeries) -> float:
    """Max coefficient deviation of T_{conj(phi psi)} p from T_{conj(phi)} T_{conj(psi)} p.

    The product symbol is truncated at the degree of p, which is all the
    composed action can see.  Exact arithmetic gives zero; floating point
    should stay within a small multiple of machine epsilon times the
    coefficient scale.
    """
    fser, gser = _series_of(phi), _series_of(psi)
    d = p.order
    if d > fser.order or d > gser.order:
        raise ValueError("polynomial degree exceeds a stored symbol order")
    combined = CoToeplitz(fser.mul(gser, d)).apply(p)
    composed = CoToeplitz(fser).apply(CoToeplitz(gser).apply(p))
    return float(np.max(np.abs(combined.coeffs - composed.coeffs)))
