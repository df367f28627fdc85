"""Trigonometric integrals with a weak power singularity at the origin.

The kernel family integrated here is ``(1 - cos t) / t^(1+2a)`` together with
its sine and cosine relatives, for a nonlocality order ``0 < a < 1``.  These
integrals carry all the special-function content needed by the dispersion
relation: the complete integral has the Euler-Gamma closed form

    int_0^inf (1 - cos t) / t^(1+2a) dt = -cos(pi a) * Gamma(-2a),

continuously extended to pi/2 at a = 1/2.

Evaluation strategy (shared by all partial integrals):

* ``[0, eps]`` with ``eps = min(1, T)``: alternating power series of the
  integrand, integrated term by term.  The series is summed to a fixed depth
  that puts the truncation error far below double precision for ``eps <= 1``.
* ``[eps, T]`` for moderate ``T``: fixed-order Gauss-Legendre panels of width
  ``<= pi`` so each panel sees less than one oscillation period.
* ``T > _TAIL_SPLIT``: the complete integral minus an asymptotic tail.  The
  tail is integrated by parts repeatedly; each step gains a factor ``~s/T``,
  and the recursion stops once the rigorous remainder bound is negligible.

All functions accept scalars or numpy arrays for ``T`` and are pure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from numpy.polynomial.legendre import leggauss
from scipy.special import gamma as _gamma


class DomainError(ValueError):
    """Raised when an argument lies outside the mathematical domain."""


# Where [eps, T] panel quadrature hands over to "complete minus tail".
_TAIL_SPLIT = 60.0
# Series depth for the [0, eps] head with eps <= 1; term k is below
# eps^(2k) / (2k)! which is < 1e-42 at k = 18.
_HEAD_TERMS = 18
# Gauss-Legendre rule shared by all panels.
_GL_NODES, _GL_WEIGHTS = leggauss(24)
# Hard cap on integration-by-parts depth for the asymptotic tail.
_TAIL_MAX_STEPS = 48

_HALF_BRANCH_WIDTH = 1e-6


@dataclass(frozen=True)
class AlphaOrder:
    """Nonlocality order with its complement stored explicitly.

    ``one_minus_alpha`` is kept as a separate field so that orders extremely
    close to 1 (down to 1 - 1e-20) survive in floating point: recomputing
    ``1 - alpha`` from a rounded ``alpha`` would annihilate.
    """

    alpha: float
    one_minus_alpha: float

    def __post_init__(self):
        if not (self.one_minus_alpha > 0.0 and self.one_minus_alpha < 1.0):
            raise DomainError(
                f"order must satisfy 0 < alpha < 1, got alpha={self.alpha!r}"
            )

    @classmethod
    def from_alpha(cls, alpha: float) -> "AlphaOrder":
        alpha = float(alpha)
        if not math.isfinite(alpha):
            raise DomainError(f"order must be finite, got {alpha!r}")
        return cls(alpha, 1.0 - alpha)

    @classmethod
    def from_complement(cls, one_minus_alpha: float) -> "AlphaOrder":
        """Build from ``1 - alpha``; use for orders within 1e-8 of 1."""
        c = float(one_minus_alpha)
        return cls(1.0 - c, c)


def _as_order(alpha) -> AlphaOrder:
    if isinstance(alpha, AlphaOrder):
        return alpha
    return AlphaOrder.from_alpha(alpha)


def _check_T(T, allow_inf: bool = False):
    T = np.asarray(T, dtype=float)
    bad = (T < 0) | np.isnan(T)
    if not allow_inf:
        bad |= np.isinf(T)
    if np.any(bad):
        raise DomainError("upper limit T must be >= 0")
    return T


def _pow(base, expo):
    # base**expo via exp/log; base must be > 0.
    return np.exp(expo * np.log(base))


def _head_series(order: AlphaOrder, eps, kind: str):
    """Integral over [0, eps] (eps <= 1) of the series-expanded integrand.

    kind 'F':  (1 - cos t) / t^(1+2a)   -> sum_{k>=1} (-1)^(k+1) eps^(2k-2a) / ((2k-2a) (2k)!)
    kind 'S':  sin t / t^(2a)           -> sum_{k>=0} (-1)^k eps^(2k+2-2a) / ((2k+2-2a) (2k+1)!)
    kind 'C':  cos t / t^(2a-1)         -> sum_{k>=0} (-1)^k eps^(2k+2-2a) / ((2k+2-2a) (2k)!)

    The exponents are assembled from 2(1 - a) so the alpha -> 1 regime keeps
    full precision.
    """
    oma2 = 2.0 * order.one_minus_alpha
    eps = np.asarray(eps, dtype=float)
    out = np.zeros_like(eps)
    pos = eps > 0
    if not np.any(pos):
        return out
    e = eps[pos]
    acc = np.zeros_like(e)
    if kind == "F":
        fact = 2.0  # (2k)! at k = 1
        sign = 1.0
        for k in range(1, _HEAD_TERMS + 1):
            power = 2.0 * (k - 1) + oma2  # 2k - 2a, assembled from 1 - a
            acc += sign * _pow(e, power) / (power * fact)
            sign = -sign
            fact *= (2.0 * k + 1.0) * (2.0 * k + 2.0)
        out[pos] = acc
        return out
    if kind == "S":
        fact = 1.0  # (2k+1)! at k=0
    elif kind == "C":
        fact = 1.0  # (2k)! at k=0
    else:  # pragma: no cover
        raise ValueError(kind)
    sign = 1.0
    for k in range(0, _HEAD_TERMS + 1):
        power = 2.0 * k + oma2  # 2k + 2 - 2a
        acc += sign * _pow(e, power) / (power * fact)
        sign = -sign
        if kind == "S":
            fact *= (2.0 * k + 2.0) * (2.0 * k + 3.0)
        else:
            fact *= (2.0 * k + 1.0) * (2.0 * k + 2.0)
    out[pos] = acc
    return out


def _integrand(order: AlphaOrder, t, kind: str):
    a2_minus = 1.0 + 2.0 * order.alpha  # 1 + 2a
    if kind == "F":
        return (1.0 - np.cos(t)) * _pow(t, -a2_minus)
    if kind == "S":
        return np.sin(t) * _pow(t, -(a2_minus - 1.0))
    if kind == "C":
        return np.cos(t) * _pow(t, -(a2_minus - 2.0))
    raise ValueError(kind)  # pragma: no cover


def _panel_quadrature(order: AlphaOrder, T, kind: str):
    """Integral over [1, T] for array T with 1 <= T <= _TAIL_SPLIT.

    Panels of width pi starting at 1 are shared across all elements: full
    panels are accumulated once, each element then adds one partial panel.
    """
    T = np.asarray(T, dtype=float)
    out = np.zeros_like(T)
    if T.size == 0:
        return out
    tmax = float(T.max())
    if tmax <= 1.0:
        return out
    edges = np.arange(1.0, tmax + np.pi, np.pi)
    edges[-1] = max(edges[-1], tmax)
    # Cumulative integral over full panels [edges[0], edges[j]].
    mids = 0.5 * (edges[1:] + edges[:-1])
    rads = 0.5 * (edges[1:] - edges[:-1])
    nodes = mids[:, None] + rads[:, None] * _GL_NODES[None, :]
    panel_vals = rads * np.sum(_GL_WEIGHTS[None, :] * _integrand(order, nodes, kind), axis=1)
    cum = np.concatenate([[0.0], np.cumsum(panel_vals)])
    # Index of the panel containing each T, then a partial panel on top.
    idx = np.searchsorted(edges, T, side="right") - 1
    idx = np.clip(idx, 0, len(edges) - 2)
    lo = edges[idx]
    partial_mid = 0.5 * (T + lo)
    partial_rad = 0.5 * (T - lo)
    pnodes = partial_mid[:, None] + partial_rad[:, None] * _GL_NODES[None, :]
    partial = partial_rad * np.sum(
        _GL_WEIGHTS[None, :] * _integrand(order, pnodes, kind), axis=1
    )
    live = T > 1.0
    out[live] = cum[idx[live]] + partial[live]
    return out


def _oscillatory_tail(s: float, T, rel_tol: float = 1e-15):
    """C_s(T) = int_T^inf cos(t) t^(-s) dt by repeated integration by parts.

    Uses the coupled recursion C_s = -sin(T) T^(-s) + s S_(s+1),
    S_s = cos(T) T^(-s) - s C_(s+1); the remainder after each step is bounded
    by 2 * prod(s..s+k-1) * T^(-s-k), monotone once s + k < T.
    """
    T = np.asarray(T, dtype=float)
    total = np.zeros_like(T)
    coef = 1.0
    cur_s = s
    kind = "C"
    tmin = float(T.min())
    for _ in range(_TAIL_MAX_STEPS):
        if kind == "C":
            total += coef * (-np.sin(T)) * _pow(T, -cur_s)
            coef *= cur_s
            kind = "S"
        else:
            total += coef * np.cos(T) * _pow(T, -cur_s)
            coef *= -cur_s
            kind = "C"
        cur_s += 1.0
        # Remainder after this step is <= 2|coef| T^(-cur_s); compare with
        # the leading magnitude T^(-s) at the smallest T of the batch.
        if 2.0 * abs(coef) * tmin ** (s - cur_s) <= rel_tol:
            break
    return total


def _complete_tail(order: AlphaOrder, T):
    """int_T^inf (1 - cos t) / t^(1+2a) dt for T >= _TAIL_SPLIT."""
    a = order.alpha
    T = np.asarray(T, dtype=float)
    # Monomial part integrates exactly; oscillatory part by parts.
    return _pow(T, -2.0 * a) / (2.0 * a) - _oscillatory_tail(1.0 + 2.0 * a, T)


def _partial_kind(alpha, T, kind: str):
    order = _as_order(alpha)
    T = _check_T(T, allow_inf=kind in ("F", "S"))
    scalar = T.ndim == 0
    T = np.atleast_1d(T)
    out = np.zeros_like(T)

    inf = np.isinf(T)
    if np.any(inf):
        # The complete integrals are well defined for F and S.
        full = trig_integral_I(order)
        out[inf] = full if kind == "F" else 2.0 * order.alpha * full
        T = np.where(inf, 0.0, T)

    head_cap = np.minimum(T, 1.0)
    out += _head_series(order, head_cap, kind)

    mid = (T > 1.0) & (T <= _TAIL_SPLIT)
    if np.any(mid):
        out[mid] += _panel_quadrature(order, T[mid], kind)

    far = T > _TAIL_SPLIT
    if np.any(far):
        if kind == "F":
            base = _head_series(order, np.array([1.0]), "F")[0] + _panel_quadrature(
                order, np.array([_TAIL_SPLIT]), "F"
            )[0]
            complete = base + _complete_tail(order, np.array([_TAIL_SPLIT]))[0]
            out[far] = complete - _complete_tail(order, T[far])
        elif kind == "S":
            # Exact integration-by-parts identity; no oscillatory quadrature.
            Tf = T[far]
            out[far] = 2.0 * order.alpha * _partial_kind(order, Tf, "F") + (
                1.0 - np.cos(Tf)
            ) * _pow(Tf, -2.0 * order.alpha)
        else:
            # 'C' keeps per-period panels; large T is outside its intended use
            # but still correct, just linear in T.  The [0,1] head is already
            # in `out`, so only the panel pieces are added here.
            out[far] += _panel_quadrature(
                order, np.full_like(T[far], _TAIL_SPLIT), kind
            ) + _extended_panels(order, T[far], kind)
    return float(out[0]) if scalar else out


def _extended_panels(order: AlphaOrder, T, kind: str):
    """Per-period panels on [_TAIL_SPLIT, T]; only the cosine integral needs it."""
    T = np.asarray(T, dtype=float)
    out = np.zeros_like(T)
    tmax = float(T.max())
    edges = np.arange(_TAIL_SPLIT, tmax + np.pi, np.pi)
    edges[-1] = max(edges[-1], tmax)
    mids = 0.5 * (edges[1:] + edges[:-1])
    rads = 0.5 * (edges[1:] - edges[:-1])
    nodes = mids[:, None] + rads[:, None] * _GL_NODES[None, :]
    panel_vals = rads * np.sum(_GL_WEIGHTS[None, :] * _integrand(order, nodes, kind), axis=1)
    cum = np.concatenate([[0.0], np.cumsum(panel_vals)])
    idx = np.clip(np.searchsorted(edges, T, side="right") - 1, 0, len(edges) - 2)
    lo = edges[idx]
    pm = 0.5 * (T + lo)
    pr = 0.5 * (T - lo)
    pnodes = pm[:, None] + pr[:, None] * _GL_NODES[None, :]
    out = cum[idx] + pr * np.sum(_GL_WEIGHTS[None, :] * _integrand(order, pnodes, kind), axis=1)
    return out


def partial_trig_integral_F(alpha, T):
    """F(a, T) = int_0^T (1 - cos t) / t^(1+2a) dt.

    The integrand extends by 0 at t = 0 (it behaves like t^(1-2a)); the
    result is nondecreasing in T and converges to ``trig_integral_I(alpha)``.
    """
    return _partial_kind(alpha, T, "F")


def partial_sine_integral_S(alpha, T):
    """S(a, T) = int_0^T sin(t) / t^(2a) dt.

    Satisfies S(a,T) = 2a F(a,T) + (1 - cos T) / T^(2a) for T > 0.
    """
    return _partial_kind(alpha, T, "S")


def partial_cosine_integral_C(alpha, T):
    """C(a, T) = int_0^T cos(t) / t^(2a-1) dt (integrable head, 2a-1 < 1)."""
    return _partial_kind(alpha, T, "C")


def trig_integral_I(alpha):
    """I(a) = int_0^inf (1 - cos t) / t^(1+2a) dt by quadrature plus tail.

    This route never touches the Gamma function, so it can serve as an
    independent cross-check of ``gamma_reflection_value``.
    """
    order = _as_order(alpha)
    base = _head_series(order, np.array([1.0]), "F")[0]
    base += _panel_quadrature(order, np.array([_TAIL_SPLIT]), "F")[0]
    return float(base + _complete_tail(order, np.array([_TAIL_SPLIT]))[0])


def gamma_reflection_value(alpha):
    """Closed form -cos(pi a) Gamma(-2a) of the complete integral I(a).

    Gamma is only evaluated at arguments in (0, 2) through the recurrence
    Gamma(-2a) = Gamma(2-2a) / ((-2a)(1-2a)).  Within 1e-6 of the removable
    singularity at a = 1/2 the limit form
    (pi/2) * sinc(a - 1/2) * Gamma(2-2a) / (2a) is used instead.
    """
    order = _as_order(alpha)
    a = order.alpha
    h = a - 0.5
    if abs(h) < _HALF_BRANCH_WIDTH:
        # -cos(pi a) = sin(pi h); sin(pi h)/(2h) -> pi/2 via np.sinc.
        return float(
            (np.pi / 2.0) * np.sinc(h) * _gamma(1.0 - 2.0 * h) / (1.0 + 2.0 * h)
        )
    return float(-np.cos(np.pi * a) * _gamma(2.0 - 2.0 * a) / ((-2.0 * a) * (1.0 - 2.0 * a)))


def improper_sine_integral_J(alpha):
    """J(a) = int_0^inf sin(t) / t^(2a) dt, defined through J = 2a I(a).

    The improper Riemann integral equals 2a I(a) by one integration by
    parts; no oscillatory infinite quadrature is attempted.
    """
    order = _as_order(alpha)
    return 2.0 * order.alpha * trig_integral_I(order)
