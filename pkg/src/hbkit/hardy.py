"""Hardy space membership protocols and H^p containment verdicts.

For 2 < p < infinity, the Hardy space H^p sits inside H(b) exactly when the
symbol phi = b/a lies in H^ptilde with

    ptilde = 2 p / (p - 2),

with the endpoint conventions p = infinity -> ptilde = 2 and p = 2 ->
phi bounded.  No exponent below 2 ever works, so p < 2 queries are rejected
outright.  A containment that holds is never a compact embedding; verdict
objects carry that as a flag.

Membership in H^q is decided empirically from integral means at the radii
``r_j = 1 - 2**-j``: means that stabilize give a member, a positive growth
exponent of ``log mean`` against ``log 1/(1-r)`` gives a non-member, and
anything else is reported as inconclusive rather than guessed.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .series import PowerSeries

__all__ = [
    "ContainmentVerdict",
    "HpVerdict",
    "SarasonResult",
    "containment_hp",
    "hp_integral_mean",
    "hp_membership",
    "p_tilde",
    "sarason_limit_check",
]


def p_tilde(p: float) -> float:
    """Dual integrability exponent for the H^p containment question.

    ``p`` may be any value in (2, inf]; the endpoints map to
    ``p_tilde(inf) = 2`` and ``p_tilde(2) = inf`` (boundedness).  Exponents
    below 2 are rejected: no summability condition on phi certifies them.
    """
    if p < 2:
        raise ValueError("containment questions need p >= 2")
    if p == 2:
        return math.inf
    if math.isinf(p):
        return 2.0
    return 2.0 * p / (p - 2.0)


def _as_evaluator(f) -> Callable[[np.ndarray], np.ndarray]:
    ev = getattr(f, "evaluate", None)
    if ev is not None:
        return ev
    if callable(f):
        return f
    raise TypeError("expected a Symbol, a callable, or a PowerSeries")


def hp_integral_mean(f, p: float, r: float, grid_size: int = 2**12) -> float:
    """p-th integral mean of f on the circle of radius r.

    ``((1/2pi) int |f(r e^{it})|^p dt)**(1/p)`` by the periodic trapezoid
    rule on an offset grid (spectrally accurate for smooth integrands).
    ``p = inf`` returns the max over the grid.  Requires ``0 <= r < 1``.
    """
    if not 0 <= r < 1:
        raise ValueError("radius must lie in [0, 1)")
    if not p > 0:
        raise ValueError("exponent must be positive")
    angles = (2.0 * np.arange(grid_size) + 1.0) * np.pi / grid_size
    vals = np.abs(_as_evaluator(f)(r * np.exp(1j * angles)))
    if math.isinf(p):
        return float(np.max(vals))
    return float(np.mean(vals**p) ** (1.0 / p))


@dataclass(frozen=True)
class HpVerdict:
    """Outcome of the empirical H^p membership protocol.

    ``verdict`` is one of ``member``, ``not-member``, ``inconclusive``.
    ``growth`` is the fitted exponent of the mean against ``1/(1-r)``;
    ``evidence`` holds rows ``(j, r, grid_size, mean)``.
    """

    p: float
    verdict: str
    growth: float
    stabilized: bool
    evidence: tuple = field(default_factory=tuple)

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "verdict": self.verdict,
            "growth": self.growth,
            "stabilized": self.stabilized,
            "evidence": [
                {"j": j, "r": r, "grid_size": m, "mean": mean}
                for (j, r, m, mean) in self.evidence
            ],
        }

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)


def hp_membership(
    f,
    p: float,
    *,
    j_start: int = 3,
    j_stop: int = 12,
    rtol: float = 0.02,
    growth_margin: float = 0.1,
    grid_cap: int = 2**16,
) -> HpVerdict:
    """Empirical membership of f in H^p from means at ``r_j = 1 - 2**-j``.

    The grid at step j has ``min(2**(j+4), grid_cap)`` points (never fewer
    than 1024), enough to resolve the boundary behavior at that radius.
    Stabilization means the last three increments of the mean are each below
    ``rtol`` of the final mean; growth is fitted over the last six radii.
    """
    if j_stop - j_start < 5:
        raise ValueError("need at least six radii for the growth fit")
    js = np.arange(j_start, j_stop + 1)
    ev = _as_evaluator(f)
    rows = []
    means = []
    for j in js:
        r = 1.0 - 2.0**-j
        m = int(np.clip(2 ** (j + 4), 2**10, grid_cap))
        mean = hp_integral_mean(ev, p, r, m)
        rows.append((int(j), r, m, mean))
        means.append(mean)
    means_arr = np.asarray(means)
    logx = js[-6:] * np.log(2.0)  # log 1/(1 - r_j) = j log 2
    growth = float(np.polyfit(logx, np.log(means_arr[-6:]), 1)[0])
    diffs = np.abs(np.diff(means_arr[-4:]))
    stabilized = bool(np.all(diffs <= rtol * means_arr[-1]))
    if stabilized and growth < growth_margin:
        verdict = "member"
    elif growth >= growth_margin:
        verdict = "not-member"
    else:
        verdict = "inconclusive"
    return HpVerdict(float(p), verdict, growth, stabilized, tuple(rows))


@dataclass(frozen=True)
class ContainmentVerdict:
    """Answer to ``H^p inside H(b)?`` with the membership evidence attached.

    ``verdict`` is ``contained``, ``not-contained``, or ``inconclusive``.
    ``never_compact`` records that such a containment, whenever it holds, is
    never compact; it is informational and always True.
    """

    p: float
    p_tilde: float
    verdict: str
    membership: HpVerdict
    never_compact: bool = True

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "p_tilde": self.p_tilde,
            "verdict": self.verdict,
            "never_compact": self.never_compact,
            "membership": self.membership.to_dict(),
        }

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)


_VERDICT_FROM_MEMBERSHIP = {
    "member": "contained",
    "not-member": "not-contained",
    "inconclusive": "inconclusive",
}


def containment_hp(phi, p: float, **protocol) -> ContainmentVerdict:
    """Decide whether H^p is contained in H(b) for the symbol phi.

    Reduces to membership of phi in H^{p_tilde(p)}; for ``p = 2`` the
    probe is boundedness of phi (means with exponent infinity).  Protocol
    keywords are forwarded to :func:`hp_membership`.
    """
    pt = p_tilde(p)
    membership = hp_membership(phi, pt, **protocol)
    return ContainmentVerdict(float(p), pt, _VERDICT_FROM_MEMBERSHIP[membership.verdict], membership)


@dataclass(frozen=True)
class SarasonResult:
    """Convergence analysis of the monomial norms ``1 + sum_{k<=n} |phi_k|^2``.

    ``verdict`` is ``convergent``, ``divergent``, or ``inconclusive``, from
    the decay slope of ``log |phi_k|^2`` against ``log k`` over the top
    half of the stored coefficients.  When convergent, ``limit_estimate``
    adds an integral tail estimate to the last partial sum.
    """

    verdict: str
    decay_slope: float
    partial_sums: np.ndarray
    limit_estimate: Optional[float]

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "decay_slope": self.decay_slope,
            "last_partial_sum": float(self.partial_sums[-1]),
            "limit_estimate": self.limit_estimate,
        }


def sarason_limit_check(
    phi,
    *,
    convergent_slope: float = -1.1,
    divergent_slope: float = -0.9,
) -> SarasonResult:
    """Does ``lim_n ||z^n||_{H(b)}^2 = 1 + ||phi||_2^2`` exist (finitely)?

    The partial sums are exactly the squared monomial norms, so the question
    is summability of ``|phi_k|^2``.  A fitted decay slope below
    ``convergent_slope`` gives ``convergent``, above ``divergent_slope``
    gives ``divergent``, and the window in between is ``inconclusive``.
    """
    ser = getattr(phi, "series", phi)
    if not isinstance(ser, PowerSeries):
        raise TypeError("expected a PowerSeries or a Symbol carrying one")
    sq = np.abs(ser.coeffs) ** 2
    sums = 1.0 + np.cumsum(sq)
    n = ser.order
    if n < 8:
        raise ValueError("need at least 9 coefficients to fit a decay slope")
    ks = np.arange(n // 2, n + 1)
    vals = sq[ks]
    if np.all(vals < 1e-300):
        # finitely supported tail: trivially summable
        return SarasonResult("convergent", -np.inf, sums, float(sums[-1]))
    keep = vals > 0
    slope = float(np.polyfit(np.log(ks[keep]), np.log(vals[keep]), 1)[0])
    if slope < convergent_slope:
        tail = float(vals[-1] * n / (-slope - 1.0))
        return SarasonResult("convergent", slope, sums, float(sums[-1]) + tail)
    if slope > divergent_slope:
        return SarasonResult("divergent", slope, sums, None)
    return SarasonResult("inconclusive", slope, sums, None)
