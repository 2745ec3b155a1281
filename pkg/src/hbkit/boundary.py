"""Boundary grids, outer functions from moduli, and Pythagorean pairs.

All boundary sampling happens on uniform grids of the unit circle that are
offset by half a step::

    zeta_j = exp(i t_j),   t_j = (2 j + 1) pi / M,   j = 0 .. M-1.

The offset keeps the point 1, where every built-in symbol is singular, off
the nodes, so moduli like ``|1 - zeta|**(-c)`` stay finite on the grid.

``outer_from_modulus`` reconstructs the outer function with a prescribed
boundary modulus ``w > 0``: take the FFT of ``log w`` on the offset grid,
keep the nonnegative frequencies (doubling the strictly positive ones, which
is the Schwarz integral of ``log w`` written on the coefficient side),
multiply frequency ``k`` by ``exp(-i k pi / M)`` to undo the grid offset,
and exponentiate the resulting log-series.  Accuracy is set by how well M
points resolve ``log w``; moduli with boundary zeros or poles converge at an
algebraic rate in M, smooth positive moduli at a spectral rate.

``symbol_from_phi`` runs the full pipeline of the non-extreme setting: given
a symbol phi, it builds the pair (b, a) with ``|a|^2 + |b|^2 = 1`` almost
everywhere on the circle, ``a`` outer with ``a(0) > 0``, and ``phi = b/a``.
"""

from __future__ import annotations

import io
from dataclasses import dataclass
from typing import Callable, Union

import numpy as np

from .series import (
    DEFAULT_ORDER,
    PowerSeries,
    eval_phi_c,
    eval_theta,
    phi_c_series,
    theta_series,
)

#: Grid size for reconstruction-quality boundary work.
RECON_GRID = 2**14
#: Grid size for routine invariant checks.
CHECK_GRID = 2**10

__all__ = [
    "RECON_GRID",
    "CHECK_GRID",
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
]


def _offset_angles(m: int) -> np.ndarray:
    return (2.0 * np.arange(m) + 1.0) * np.pi / m


def _check_grid_size(m: int) -> None:
    if m < 8 or (m & (m - 1)) != 0:
        raise ValueError("grid size must be a power of two, at least 8")


@dataclass(frozen=True)
class BoundaryGrid:
    """Samples of a function on the offset circle grid.

    ``values[j]`` is the sample at ``exp(i (2 j + 1) pi / M)`` where
    ``M = len(values)``.  M must be a power of two (the FFT path relies on
    it) and at least 8.  Values may be real (moduli) or complex.
    """

    values: np.ndarray

    def __post_init__(self):
        v = np.atleast_1d(np.asarray(self.values))
        _check_grid_size(v.size)
        v = v.copy()
        v.setflags(write=False)
        object.__setattr__(self, "values", v)

    @property
    def size(self) -> int:
        return self.values.size

    @property
    def angles(self) -> np.ndarray:
        return _offset_angles(self.values.size)

    @property
    def points(self) -> np.ndarray:
        return np.exp(1j * self.angles)

    @classmethod
    def from_function(cls, fn: Callable[[np.ndarray], np.ndarray], m: int) -> "BoundaryGrid":
        """Sample ``fn`` at the M offset grid points."""
        _check_grid_size(m)
        return cls(np.asarray(fn(np.exp(1j * _offset_angles(m)))))

    def to_csv(self, path_or_buffer) -> None:
        """Write columns ``angle, re, im`` with a one line header."""
        v = np.asarray(self.values, dtype=complex)
        data = np.column_stack((self.angles, v.real, v.imag))
        if hasattr(path_or_buffer, "write"):
            np.savetxt(path_or_buffer, data, delimiter=",", header="angle,re,im", comments="")
        else:
            with open(path_or_buffer, "w") as fh:
                np.savetxt(fh, data, delimiter=",", header="angle,re,im", comments="")

    @classmethod
    def from_csv(cls, path_or_buffer) -> "BoundaryGrid":
        """Read a grid written by :meth:`to_csv`, validating the angles."""
        if isinstance(path_or_buffer, str):
            data = np.loadtxt(path_or_buffer, delimiter=",", skiprows=1, ndmin=2)
        else:
            data = np.loadtxt(path_or_buffer, delimiter=",", skiprows=1, ndmin=2)
        if data.shape[1] != 3:
            raise ValueError("expected three columns: angle, re, im")
        m = data.shape[0]
        _check_grid_size(m)
        if np.max(np.abs(data[:, 0] - _offset_angles(m))) > 1e-9:
            raise ValueError("angles do not match the offset grid for this size")
        vals = data[:, 1] + 1j * data[:, 2]
        if np.max(np.abs(data[:, 2])) == 0.0:
            vals = data[:, 1]
        return cls(vals)

    def csv_text(self) -> str:
        buf = io.StringIO()
        self.to_csv(buf)
        return buf.getvalue()


class PythagoreanError(ValueError):
    """Raised when a constructed pair misses ``|a|^2 + |b|^2 = 1`` on the grid."""

    def __init__(self, max_deviation: float, tol: float):
        self.max_deviation = max_deviation
        self.tol = tol
        super().__init__(
            f"pythagorean identity residual {max_deviation:.3e} exceeds tolerance {tol:.3e}"
        )


@dataclass(frozen=True)
class Symbol:
    """A disk symbol: closed-form evaluator plus its truncated Taylor series.

    ``evaluate`` must accept complex arrays and be valid on the closed disk
    minus the point 1 (boundary values feed the modulus sampling); ``series``
    is the truncation used by coefficient-level operators.
    """

    label: str
    evaluate: Callable[[np.ndarray], np.ndarray]
    series: PowerSeries

    def __call__(self, z):
        return self.evaluate(z)


def phi_c_symbol(c: float, order: int = DEFAULT_ORDER) -> Symbol:
    """The symbol ``phi_c(z) = (1 - z)**(-c)``."""
    return Symbol(f"phi_{c:g}", lambda z: eval_phi_c(z, c), phi_c_series(c, order))


def theta_symbol(order: int = DEFAULT_ORDER) -> Symbol:
    """The atomic inner function ``theta``."""
    return Symbol("theta", eval_theta, theta_series(order))


def theta_phi_c_symbol(c: float, order: int = DEFAULT_ORDER) -> Symbol:
    """The product symbol ``theta * phi_c`` (inner times outer singular part)."""
    ser = theta_series(order).mul(phi_c_series(c, order), order)
    return Symbol(
        f"theta*phi_{c:g}",
        lambda z: eval_theta(z) * eval_phi_c(z, c),
        ser,
    )


def polynomial_symbol(ps: PowerSeries, label: str = "poly") -> Symbol:
    """Wrap a coefficient sequence as an exact polynomial symbol.

    Unlike ``PowerSeries.__call__`` this evaluator is valid on the closed
    disk: a polynomial has no truncation tail.
    """

    def _eval(z):
        zz = np.asarray(z, dtype=complex)
        acc = np.zeros_like(zz)
        for ck in ps.coeffs[::-1]:
            acc = acc * zz + ck
        return acc if zz.ndim else complex(acc)

    return Symbol(label, _eval, ps)


def pythagorean_moduli(phi_modulus: BoundaryGrid) -> tuple[BoundaryGrid, BoundaryGrid]:
    """Moduli ``(|a|, |b|)`` with ``|a|^2 + |b|^2 = 1`` and ``|b|/|a| = |phi|``.

    Input samples must be finite and nonnegative.  The algebra is
    ``|a| = (1 + |phi|^2)**(-1/2)`` and ``|b| = |phi| |a|``.
    """
    w = np.asarray(phi_modulus.values, dtype=float)
    if not np.all(np.isfinite(w)) or np.any(w < 0):
        raise ValueError("modulus samples must be finite and nonnegative")
    amod = 1.0 / np.sqrt(1.0 + w * w)
    return BoundaryGrid(amod), BoundaryGrid(w * amod)


def outer_from_modulus(grid: BoundaryGrid, order: int = DEFAULT_ORDER) -> PowerSeries:
    """Taylor series of the outer function with boundary modulus ``grid``.

    Requires strictly positive finite samples and ``order < M/2``.  The
    constant coefficient is ``exp(mean(log w)) > 0``, so the result always
    takes a positive value at the origin.
    """
    w = np.asarray(grid.values, dtype=float)
    if not np.all(np.isfinite(w)) or np.any(w <= 0):
        raise ValueError("outer construction needs strictly positive finite samples")
    m = grid.size
    if not 0 <= order < m // 2:
        raise ValueError("order must satisfy 0 <= order < M/2")
    freq = np.fft.fft(np.log(w)) / m
    k = np.arange(order + 1)
    logc = freq[: order + 1] * np.exp(-1j * k * np.pi / m)
    logc[0] = logc[0].real  # log w is real, so its mean is too
    logc[1:] *= 2.0
    return PowerSeries(logc).exp()


@dataclass(frozen=True)
class SymbolTriple:
    """A symbol phi with its Pythagorean pair: phi = b/a, |a|^2 + |b|^2 = 1.

    ``residual`` is the maximum deviation of ``|a|^2 + |b|^2 - 1`` over the
    modulus grid the pair was built from.
    """

    symbol: Symbol
    b: PowerSeries
    a: PowerSeries
    modulus_grid: BoundaryGrid
    residual: float

    @property
    def phi(self) -> PowerSeries:
        return self.symbol.series


def symbol_from_phi(
    phi: Union[Symbol, PowerSeries],
    grid_size: int = RECON_GRID,
    order: int = DEFAULT_ORDER,
    tol: float = 1e-8,
) -> SymbolTriple:
    """Build the Pythagorean pair (b, a) for a symbol phi.

    ``phi`` may be a :class:`Symbol` or a plain :class:`PowerSeries`, which
    is then treated as an exact polynomial symbol.  The steps are: sample
    ``|phi|`` on the offset grid, split into moduli ``(|a|, |b|)``,
    reconstruct ``a`` as the outer function with modulus ``|a|`` (this fixes
    ``a(0) > 0``), and set ``b = phi * a`` truncated at ``order``.

    The reported residual is ``max | |a|^2 + |b|^2 - 1 |`` over the grid;
    beyond ``tol`` (default 1e-8) a :class:`PythagoreanError` is raised,
    which catches non-finite or otherwise unusable samples.
    """
    if isinstance(phi, PowerSeries):
        phi = polynomial_symbol(phi)
    if phi.series.order < order:
        raise ValueError(
            f"symbol series has order {phi.series.order}, need at least {order}"
        )
    with np.errstate(all="ignore"):
        wgrid = BoundaryGrid.from_function(lambda zz: np.abs(phi.evaluate(zz)), grid_size)
    w = np.asarray(wgrid.values, dtype=float)
    if not np.all(np.isfinite(w)):
        raise PythagoreanError(float("inf"), tol)
    amod, bmod = pythagorean_moduli(wgrid)
    dev = np.abs(amod.values**2 + bmod.values**2 - 1.0)
    residual = float(np.max(dev))
    if not residual <= tol:
        raise PythagoreanError(residual, tol)
    a = outer_from_modulus(amod, order)
    b = phi.series.truncated(order).mul(a, order)
    return SymbolTriple(phi, b, a, wgrid, residual)
