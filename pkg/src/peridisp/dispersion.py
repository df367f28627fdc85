"""Dispersion relation of the truncated singular-kernel wave model.

The squared frequency of the plane-wave mode exp(i(xi x + w t)) is

    w^2(xi) = (2 kappa / (rho delta^(2a))) * int_{-1}^{1} (1 - cos(xi delta z)) / |z|^(1+2a) dz
            = (4 kappa / rho) * |xi|^(2a) * F(a, |xi| delta),

with ``F`` the partial trigonometric integral from :mod:`peridisp.specfun`.
Two evaluation paths are kept: the everywhere-convergent alternating power
series for small ``|xi| delta`` and the partial-integral form otherwise;
they overlap near the switchover so each can check the other.

First and second derivatives are evaluated in closed form (no numerical
differentiation): for xi > 0, with w = w(xi), T = xi delta and
q = 2 kappa / (rho delta^(2a)),

    w'(xi)  = a w / xi + q (1 - cos T) / (xi w)
    w''(xi) = a (a-1) w / xi^2 - q (1 - cos T) / (xi^2 w)
              + q delta sin(T) / (xi w) - q^2 (1 - cos T)^2 / (xi^2 w^3),

extended odd and even respectively.  Both have one-sided limits at 0 but
``w'`` jumps there, so the pointwise operations refuse xi = 0 and the limit
values are published by :func:`dispersion_asymptotics`.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .params import PeridynamicParams
from .specfun import DomainError, partial_trig_integral_F, trig_integral_I

#: |xi| delta below which the power series is preferred over the integral.
SERIES_SWITCH = 10.0
# Series depth: at T = 10 the term at k = 30 is ~1e-22 of the total.
_SERIES_TERMS = 30


def _as_array(xi):
    xi = np.asarray(xi, dtype=float)
    return xi.ndim == 0, np.atleast_1d(xi)


def _abs_pow_2a(x, one_minus_alpha):
    """x^(2a) for x > 0 as x^2 * exp(-2(1-a) ln x); keeps alpha -> 1 exact."""
    return x * x * np.exp(-2.0 * one_minus_alpha * np.log(x))


def _delta_pow_2a(p: PeridynamicParams):
    # delta^(2a) = delta^2 * delta^(-2(1-a))
    return p.delta * p.delta * np.exp(-2.0 * p.one_minus_alpha * np.log(p.delta))


def omega_sq_series(xi, p: PeridynamicParams):
    """Power-series path: (2k/r) sum_k (-1)^(k+1) xi^(2k) d^(2(k-a)) / ((k-a)(2k)!).

    Alternating and entire in xi, but suffers catastrophic cancellation once
    |xi| delta grows much beyond the switchover; callers should keep
    |xi| delta <~ 10 (the real-analyticity of w^2 is this series).
    """
    scalar, x = _as_array(xi)
    x = np.abs(x)
    oma = p.one_minus_alpha
    d2 = p.delta * p.delta
    x2d2 = x * x * d2
    # k = 1 term: xi^2 delta^(2(1-a)) / ((1-a) 2!)
    d_2oma = np.exp(2.0 * oma * np.log(p.delta))
    term = x * x * d_2oma / (oma * 2.0)
    acc = term.copy()
    for k in range(2, _SERIES_TERMS + 1):
        # term ratio: -xi^2 d^2 (k-1-a) / ((k-a)(2k-1)(2k)), with k-a = (k-1)+(1-a)
        term = -term * x2d2 * ((k - 2.0) + oma) / (((k - 1.0) + oma) * (2.0 * k - 1.0) * (2.0 * k))
        acc += term
    acc *= 2.0 * p.kappa / p.rho
    out = np.where(x == 0.0, 0.0, acc)
    return float(out[0]) if scalar else out


def omega_sq_integral(xi, p: PeridynamicParams):
    """Partial-integral path: (4k/r) |xi|^(2a) F(a, |xi| delta)."""
    scalar, x = _as_array(xi)
    x = np.abs(x)
    out = np.zeros_like(x)
    nz = x > 0
    if np.any(nz):
        xa = _abs_pow_2a(x[nz], p.one_minus_alpha)
        out[nz] = (4.0 * p.kappa / p.rho) * xa * partial_trig_integral_F(
            p.order, x[nz] * p.delta
        )
    return float(out[0]) if scalar else out


def omega_sq(xi, p: PeridynamicParams, method: str = "auto"):
    """w^2(xi): finite, nonnegative, even; 0 exactly at xi = 0."""
    if method == "series":
        return omega_sq_series(xi, p)
    if method == "integral":
        return omega_sq_integral(xi, p)
    if method != "auto":
        raise ValueError(f"unknown method {method!r}")
    scalar, x = _as_array(xi)
    x = np.abs(x)
    T = x * p.delta
    out = np.empty_like(x)
    small = T <= SERIES_SWITCH
    if np.any(small):
        out[small] = omega_sq_series(x[small], p)
    if np.any(~small):
        out[~small] = omega_sq_integral(x[~small], p)
    return float(out[0]) if scalar else out


def omega(xi, p: PeridynamicParams, method: str = "auto"):
    """Dispersion relation w(xi) = sqrt(w^2(xi))."""
    return np.sqrt(omega_sq(xi, p, method=method))


def omega_sq_upper_bound(xi, p: PeridynamicParams):
    """Explicit upper bound for w^2 with no hidden constants.

    Obtained by splitting 1 - cos t <= min(t^2/2, 2) over the kernel support:

        (2k/(r d^(2a))) [ xi^2 d^2/(2-2a) * min{2^(2-2a)/(xi d)^(2-2a), 1}
                          + (2/a) 1_{(0,1)}(2/(xi d)) ((xi d)^(2a)/2^(2a) - 1) ]

    It dominates w^2 pointwise for every parameter set.
    """
    scalar, x = _as_array(xi)
    x = np.abs(x)
    a = p.alpha
    oma2 = 2.0 * p.one_minus_alpha  # 2 - 2a
    T = x * p.delta
    first = np.zeros_like(x)
    second = np.zeros_like(x)
    nz = T > 0
    Tn = T[nz]
    first[nz] = (
        x[nz] ** 2
        * p.delta**2
        / oma2
        * np.minimum(np.exp(oma2 * (np.log(2.0) - np.log(Tn))), 1.0)
    )
    ind = T > 2.0  # 2/(xi d) in (0,1)
    if np.any(ind):
        Ti = T[ind]
        # (T/2)^(2a) assembled stably: (T/2)^2 * (T/2)^(-2(1-a))
        second[ind] = (2.0 / a) * (_abs_pow_2a(Ti / 2.0, p.one_minus_alpha) - 1.0)
    out = (2.0 * p.kappa / (p.rho * _delta_pow_2a(p))) * (first + second)
    return float(out[0]) if scalar else out


def _q_factor(p: PeridynamicParams):
    return 2.0 * p.kappa / (p.rho * _delta_pow_2a(p))


def omega_prime(xi, p: PeridynamicParams):
    """Group velocity w'(xi) for xi != 0; odd in xi.

    Jumps at the origin (the dispersion relation has a corner), so xi = 0 is
    a domain error; the one-sided limits live in ``dispersion_asymptotics``.
    """
    scalar, x = _as_array(xi)
    if np.any(x == 0):
        raise DomainError("omega_prime is undefined at xi = 0 (jump discontinuity)")
    s = np.sign(x)
    ax = np.abs(x)
    w = omega(ax, p)
    T = ax * p.delta
    val = p.alpha * w / ax + _q_factor(p) * (1.0 - np.cos(T)) / (ax * w)
    out = s * val
    return float(out[0]) if scalar else out


def omega_second(xi, p: PeridynamicParams):
    """Second derivative w''(xi) for xi != 0; even in xi."""
    scalar, x = _as_array(xi)
    if np.any(x == 0):
        raise DomainError("omega_second is undefined at xi = 0 (use the limit values)")
    ax = np.abs(x)
    w = omega(ax, p)
    T = ax * p.delta
    q = _q_factor(p)
    one_m_cos = 1.0 - np.cos(T)
    out = (
        p.alpha * (p.alpha - 1.0) * w / ax**2
        - q * one_m_cos / (ax**2 * w)
        + q * p.delta * np.sin(T) / (ax * w)
        - q**2 * one_m_cos**2 / (ax**2 * w**3)
    )
    return float(out[0]) if scalar else out


@dataclass(frozen=True)
class SecondDerivativeTail:
    """Large-frequency behavior of w'': |xi|^exponent * w'' -> [lower, upper].

    For a > 1/2 the rescaled second derivative converges (lower == upper);
    for a <= 1/2 it oscillates forever between the two accumulation values.
    """

    exponent: float
    lower: float
    upper: float

    @property
    def is_limit(self) -> bool:
        return self.lower == self.upper


@dataclass(frozen=True)
class DispersionAsymptotics:
    """All closed-form limit coefficients of w, w' and w''."""

    low_freq_slope_sq: float  # lim w^2/xi^2 at 0
    high_freq_coeff_sq: float  # lim |xi|^(-2a) w^2 at infinity
    omega_prime_at_zero: float  # lim w'(0+); the 0- limit is its negative
    omega_prime_infty_coeff: float  # lim |xi|^(1-a) w' at +infinity
    omega_second_over_xi_at_zero: float  # lim w''/|xi| at 0
    omega_second_infty: SecondDerivativeTail


def dispersion_asymptotics(p: PeridynamicParams) -> DispersionAsymptotics:
    """Limit coefficients at zero and infinity, all in closed form."""
    oma = p.one_minus_alpha
    a = p.alpha
    d_2oma = np.exp(2.0 * oma * np.log(p.delta))
    low = p.kappa * d_2oma / (oma * p.rho)
    I = trig_integral_I(p.order)
    high = 4.0 * p.kappa * I / p.rho
    wp0 = float(np.sqrt(low))
    wp_inf = 2.0 * a * float(np.sqrt(p.kappa * I / p.rho))
    wpp0 = -float(
        np.sqrt(p.kappa * oma) * p.delta ** (3.0 - a) / (4.0 * (2.0 - a) * np.sqrt(p.rho))
    )
    sk = np.sqrt(p.kappa / p.rho)
    if a > 0.5:
        c = -2.0 * a * oma * sk * np.sqrt(I)
        tail = SecondDerivativeTail(exponent=2.0 - a, lower=float(c), upper=float(c))
    elif a < 0.5:
        d_pow = np.exp((1.0 - 2.0 * a) * np.log(p.delta))
        c = sk * d_pow / np.sqrt(I)
        tail = SecondDerivativeTail(exponent=1.0 + a, lower=float(-c), upper=float(c))
    else:
        osc = sk / np.sqrt(I)
        drift = 0.5 * sk * np.sqrt(I)
        tail = SecondDerivativeTail(
            exponent=1.5, lower=float(-osc - drift), upper=float(osc - drift)
        )
    return DispersionAsymptotics(
        low_freq_slope_sq=float(low),
        high_freq_coeff_sq=float(high),
        omega_prime_at_zero=wp0,
        omega_prime_infty_coeff=float(wp_inf),
        omega_second_over_xi_at_zero=wpp0,
        omega_second_infty=tail,
    )


def log_line_deviation(xi, p: PeridynamicParams):
    """Distance of log w from the straight line a log|xi| it approaches.

    Returns |log(sqrt((1-a) rho) w(xi) / sqrt(kappa)) - a log|xi||, evaluated
    through the cancellation-free identity  (1/2) |log(4 (1-a) F(a,|xi| d))|.
    Meaningful for a in [1/2, 1) and xi != 0.
    """
    if p.alpha < 0.5:
        raise DomainError("log-line deviation is defined for alpha in [1/2, 1)")
    scalar, x = _as_array(xi)
    if np.any(x == 0):
        raise DomainError("log_line_deviation is undefined at xi = 0")
    ax = np.abs(x)
    F = partial_trig_integral_F(p.order, ax * p.delta)
    out = 0.5 * np.abs(np.log(4.0 * p.one_minus_alpha * F))
    return float(out[0]) if scalar else out


def classical_limit_ratio(xi, p: PeridynamicParams):
    """sqrt(1-a) w(xi) / (sqrt(kappa/rho) |xi|); tends to 1 as a -> 1-.

    The normalization constant is pinned to 1 by the low-frequency limit
    together with delta^(2(1-a)) -> 1.  kappa and rho cancel exactly:
    the ratio equals 2 sqrt((1-a) F(a, |xi| d)) |xi|^(-(1-a)).
    """
    scalar, x = _as_array(xi)
    if np.any(x == 0):
        raise DomainError("classical_limit_ratio is undefined at xi = 0")
    ax = np.abs(x)
    F = partial_trig_integral_F(p.order, ax * p.delta)
    out = 2.0 * np.sqrt(p.one_minus_alpha * F) * np.exp(
        -p.one_minus_alpha * np.log(ax)
    )
    return float(out[0]) if scalar else out


def count_sign_changes(fn, lo: float, hi: float, step: float, refine: bool = True):
    """Count sign changes of ``fn`` on [lo, hi] by dense sampling.

    Sampling at the caller-chosen step (pi/(20 delta) resolves the sin(xi d)
    oscillation of w''), then each bracketing interval is bisected to locate
    the crossing.  Returns (count, crossing positions).
    """
    xs = np.arange(lo, hi + step, step)
    xs[-1] = min(xs[-1], hi)
    vals = np.asarray(fn(xs))
    sgn = np.sign(vals)
    nz = sgn != 0
    xs, sgn = xs[nz], sgn[nz]
    idx = np.where(sgn[1:] * sgn[:-1] < 0)[0]
    roots = []
    for i in idx:
        a, b = xs[i], xs[i + 1]
        if refine:
            fa = float(fn(a))
            for _ in range(40):
                m = 0.5 * (a + b)
                fm = float(fn(m))
                if fm == 0.0:
                    a = b = m
                    break
                if fa * fm < 0:
                    b = m
                else:
                    a, fa = m, fm
        roots.append(0.5 * (a + b))
    return len(roots), np.array(roots)
