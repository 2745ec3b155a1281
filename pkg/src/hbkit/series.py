"""Truncated power series on the unit disk.

A :class:`PowerSeries` stores Taylor coefficients ``c[0..N]`` of an analytic
function ``f(z) = sum c_n z**n`` and supports the arithmetic the rest of the
package needs: addition, Cauchy products truncated to a stated order, the
series exponential, and evaluation strictly inside the disk.

Two coefficient families are built here.  ``phi_c_series(c)`` expands
``(1 - z)**(-c)`` through the ratio recurrence ``a_{n+1} = a_n (n + c)/(n + 1)``,
and ``theta_series()`` expands the atomic inner function

    theta(z) = exp(-(1/2) (1 + z)/(1 - z))

by exponentiating the truncated logarithm ``-1/2 - z - z^2 - ...``.  The
exponential recurrence never consults coefficients beyond the stored order,
so both expansions are exact to the working precision at every order.
"""

from __future__ import annotations

import numpy as np

DEFAULT_ORDER = 256

__all__ = [
    "DEFAULT_ORDER",
    "PowerSeries",
    "phi_c_series",
    "theta_series",
    "eval_phi_c",
    "eval_theta",
]


class PowerSeries:
    """Taylor coefficients of an analytic function, with arithmetic.

    ``PowerSeries(c)`` wraps a one dimensional coefficient sequence ``c``
    (index equals the power of ``z``).  Instances are immutable; arithmetic
    returns new instances.

    Addition zero-pads the shorter operand, so the result carries the larger
    order.  ``f * g`` truncates the Cauchy product to ``min(f.order,
    g.order)``, the largest order at which the product of two truncated
    expansions is fully determined.  ``f.mul(g, out_order)`` instead treats
    both operands as exact polynomials and truncates or zero-pads the exact
    product to ``out_order``; use it when an operand really is a polynomial
    (or when its dropped tail is known not to reach the target order).
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs):
        c = np.array(coeffs, dtype=complex)
        if c.ndim != 1 or c.size == 0:
            raise ValueError("coefficients must form a nonempty 1-d sequence")
        if not np.all(np.isfinite(c)):
            raise ValueError("coefficients must be finite")
        c.setflags(write=False)
        self._coeffs = c

    @property
    def coeffs(self) -> np.ndarray:
        """Read-only coefficient array of length ``order + 1``."""
        return self._coeffs

    @property
    def order(self) -> int:
        return self._coeffs.size - 1

    def __len__(self) -> int:
        return self._coeffs.size

    def __getitem__(self, n):
        return self._coeffs[n]

    def __repr__(self) -> str:
        head = np.array2string(self._coeffs[:4], precision=6, separator=", ")
        tail = ", ..." if self.order > 3 else ""
        return f"PowerSeries(order={self.order}, coeffs={head}{tail})"

    def truncated(self, order: int) -> "PowerSeries":
        """Copy with the stated order, cutting or zero-padding as needed."""
        if order < 0:
            raise ValueError("order must be nonnegative")
        out = np.zeros(order + 1, dtype=complex)
        m = min(order + 1, self._coeffs.size)
        out[:m] = self._coeffs[:m]
        return PowerSeries(out)

    # -- linear arithmetic ------------------------------------------------

    def __add__(self, other):
        if isinstance(other, PowerSeries):
            n = max(self._coeffs.size, other._coeffs.size)
            out = np.zeros(n, dtype=complex)
            out[: self._coeffs.size] += self._coeffs
            out[: other._coeffs.size] += other._coeffs
            return PowerSeries(out)
        out = self._coeffs.copy()
        out[0] += complex(other)
        return PowerSeries(out)

    __radd__ = __add__

    def __neg__(self):
        return PowerSeries(-self._coeffs)

    def __sub__(self, other):
        if isinstance(other, PowerSeries):
            return self + (-other)
        return self + (-complex(other))

    def __rsub__(self, other):
        return (-self) + other

    # -- products and exponential ----------------------------------------

    def __mul__(self, other):
        if isinstance(other, PowerSeries):
            return self.mul(other, min(self.order, other.order))
        return PowerSeries(self._coeffs * complex(other))

    __rmul__ = __mul__

    def mul(self, other: "PowerSeries", out_order: int) -> "PowerSeries":
        """Exact polynomial product, truncated or zero-padded to ``out_order``."""
        if not isinstance(other, PowerSeries):
            raise TypeError("mul expects another PowerSeries")
        if out_order < 0:
            raise ValueError("out_order must be nonnegative")
        full = np.convolve(self._coeffs, other._coeffs)
        out = np.zeros(out_order + 1, dtype=complex)
        m = min(out_order + 1, full.size)
        out[:m] = full[:m]
        return PowerSeries(out)

    def exp(self) -> "PowerSeries":
        """Series exponential at the same order.

        Uses the derivative recurrence ``n g_n = sum_{k=1}^{n} k f_k g_{n-k}``
        with ``g_0 = exp(f_0)``; every step is a dot product, so the cost is
        O(order^2) and coefficient ``g_n`` depends only on ``f_0 .. f_n``.
        """
        f = self._coeffs
        g = np.zeros(f.size, dtype=complex)
        g[0] = np.exp(f[0])
        kf = np.arange(f.size) * f
        for n in range(1, f.size):
            g[n] = np.dot(kf[1 : n + 1], g[n - 1 :: -1][:n]) / n
        return PowerSeries(g)

    # -- evaluation --------------------------------------------------------

    def __call__(self, z):
        """Evaluate by Horner's rule, strictly inside the disk.

        ``z`` may be a scalar or an array.  Points with ``|z| >= 1`` are
        rejected: there the truncation error of a general expansion is
        uncontrolled.
        """
        zz = np.asarray(z, dtype=complex)
        if np.any(np.abs(zz) >= 1.0):
            raise ValueError("series evaluation requires |z| < 1")
        acc = np.zeros_like(zz)
        for c in self._coeffs[::-1]:
            acc = acc * zz + c
        return acc if zz.ndim else complex(acc)


def phi_c_series(c: float, order: int = DEFAULT_ORDER) -> PowerSeries:
    """Taylor series of ``(1 - z)**(-c)`` for ``c > 0``.

    Coefficients follow ``a_0 = 1``, ``a_{n+1} = a_n (n + c)/(n + 1)``.  They
    are positive for every ``c > 0``, nondecreasing exactly when ``c >= 1``,
    and the ratio ``a_{n+1}/a_n`` is monotone in ``n`` (increasing for
    ``c < 1``, constant at ``c = 1``, decreasing for ``c > 1``).
    """
    if not c > 0:
        raise ValueError("phi_c requires c > 0")
    if order < 0:
        raise ValueError("order must be nonnegative")
    n = np.arange(order, dtype=float)
    coeffs = np.concatenate(([1.0], np.cumprod((n + c) / (n + 1.0))))
    return PowerSeries(coeffs)


def theta_series(order: int = DEFAULT_ORDER) -> PowerSeries:
    """Taylor series of the atomic inner function ``theta``.

    ``log theta = -1/2 - z - z^2 - ...``, so the coefficients come from one
    series exponential.  Partial sums of ``|theta_k|^2`` stay at or below 1
    (the function is inner, hence of unit Hardy space norm).
    """
    f = np.full(order + 1, -1.0, dtype=complex)
    f[0] = -0.5
    return PowerSeries(f).exp()


def _reject_one(zz: np.ndarray) -> None:
    if np.any(zz == 1.0):
        raise ValueError("evaluation point z = 1 is singular for this symbol")


def eval_phi_c(z, c: float):
    """Closed-form ``(1 - z)**(-c)`` (principal branch), defined for ``z != 1``.

    Accepts scalars or arrays; valid on the closed disk minus the point 1,
    which is where boundary sampling happens.
    """
    if not c > 0:
        raise ValueError("phi_c requires c > 0")
    zz = np.asarray(z, dtype=complex)
    _reject_one(zz)
    w = (1.0 - zz) ** (-c)
    return w if zz.ndim else complex(w)


def eval_theta(z):
    """Closed-form ``exp(-(1/2)(1 + z)/(1 - z))``, defined for ``z != 1``.

    On the unit circle the exponent is purely imaginary, so the values have
    modulus 1 there; inside the disk the modulus is below 1.
    """
    zz = np.asarray(z, dtype=complex)
    _reject_one(zz)
    w = np.exp(-0.5 * (1.0 + zz) / (1.0 - zz))
    return w if zz.ndim else complex(w)
