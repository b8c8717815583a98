"""Numeric kernels: gamma, Riemann/Hurwitz zeta, s-derivatives, digamma,
and generalized Stieltjes constants.

Hurwitz zeta is computed by Euler-Maclaurin summation,

    zeta(s, a) ~= sum_{n<M} (n+a)^-s  +  (M+a)^(1-s)/(s-1)  +  (M+a)^-s / 2
                  + sum_{j=1..J} B_{2j}/(2j)! * (s)_{2j-1} * (M+a)^(-s-2j+1),

with the head length M and the Bernoulli-correction count J taken from
:class:`PrecisionConfig`.  For Re s < 1/2 the head length is shrunk so the
head/integral cancellation cannot eat the absolute accuracy target; the
correction sum always stops at its smallest term (optimal truncation).

s-derivatives of any order share one kernel: trapezoidal (Cauchy) contour
differentiation on a circle around s.  Stieltjes constants gamma_n(a) are the
Taylor coefficients at 0 of g(t) = zeta(1+t, a) - 1/t, where g is evaluated in
subtracted form: the Euler-Maclaurin integral term minus the pole is
expm1(-t*log(M+a))/t, which is stable uniformly in t.  Doing the subtraction
on finished zeta values instead would lose all precision near t = 0.

Accuracy is absolute (``target_abs_error``) for values of moderate magnitude;
when the value itself is astronomically large (e.g. Re s very negative and
alpha large) accuracy degrades gracefully to relative ~1e-13.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from math import factorial

from . import exact
from .errors import (ConvergenceError, DomainError, NumericOverflowError,
                     PoleProximityError)

__all__ = [
    "PrecisionConfig",
    "DEFAULT_CONFIG",
    "StieltjesValue",
    "gamma_complex",
    "riemann_zeta",
    "hurwitz_zeta",
    "hurwitz_zeta_deriv",
    "riemann_zeta_deriv",
    "hurwitz_taylor",
    "stieltjes",
    "stieltjes_value",
    "digamma",
    "format_complex",
]

_MACH_EPS = 2.220446049250313e-16
_TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class PrecisionConfig:
    """Accuracy knobs shared by every numeric kernel.

    em_cutoff        Euler-Maclaurin head length M
    em_tail_terms    number J of Bernoulli correction terms
    contour_radius   radius rho for Cauchy differentiation
    contour_points   sample count K on the contour (power of two)
    target_abs_error absolute accuracy target for moderate-size values
    """

    em_cutoff: int = 25
    em_tail_terms: int = 12
    contour_radius: float = 0.5
    contour_points: int = 32
    target_abs_error: float = 1e-11

    def __post_init__(self):
        if self.em_cutoff < 8:
            raise ValueError("em_cutoff must be >= 8")
        if not 1 <= self.em_tail_terms <= 20:
            raise ValueError("em_tail_terms must be in 1..20")
        if self.contour_points < 16 or self.contour_points & (self.contour_points - 1):
            raise ValueError("contour_points must be a power of two >= 16")
        if not 0.0 < self.contour_radius <= 1.0:
            raise ValueError("contour_radius must be in (0, 1]")
        if self.target_abs_error < 1e-13:
            raise ValueError("target_abs_error must be >= 1e-13 at double precision")


DEFAULT_CONFIG = PrecisionConfig()


@dataclass(frozen=True)
class StieltjesValue:
    """A generalized Stieltjes constant gamma_order(at), tagged with its index."""

    order: int
    at: float
    value: complex


# B_{2j}/(2j)! and B_{2j}/(2j) for j = 1..20, from the exact module.
_B2J_OVER_FACT = tuple(
    float(exact.bernoulli_number(2 * j)) / factorial(2 * j) for j in range(1, 21)
)
_B2J_OVER_2J = tuple(
    float(exact.bernoulli_number(2 * j) / (2 * j)) for j in range(1, 21)
)


def _require_finite(value: complex, what: str) -> complex:
    if not (math.isfinite(value.real) and math.isfinite(value.imag)):
        raise NumericOverflowError(f"non-finite value in {what}")
    return value


def format_complex(z: complex) -> str:
    """Serialize as "re±im·i" with 15 significant digits."""
    z = complex(z)
    re = z.real + 0.0  # normalise -0.0
    im = z.imag + 0.0
    sign = "-" if im < 0 else "+"
    return f"{re:.15g}{sign}{abs(im):.15g}i"


# ---------------------------------------------------------------------------
# Gamma
# ---------------------------------------------------------------------------

# Lanczos approximation, g = 7, 9 terms.
_LANCZOS_G = 7.0
_LANCZOS_C = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)


def gamma_complex(z: complex, config: PrecisionConfig | None = None) -> complex:
    """Gamma(z) by the Lanczos approximation, reflection for Re z < 1/2."""
    z = complex(z)
    if z.real < 0.5:
        nearest = round(z.real)
        if nearest <= 0 and abs(z - nearest) < 1e-12:
            raise PoleProximityError(f"gamma pole at non-positive integer near {z!r}")
        # Gamma(z) Gamma(1-z) = pi / sin(pi z)
        return _require_finite(
            math.pi / (cmath.sin(math.pi * z) * gamma_complex(1.0 - z, config)),
            "gamma reflection")
    w = z - 1.0
    acc = complex(_LANCZOS_C[0])
    for i in range(1, len(_LANCZOS_C)):
        acc += _LANCZOS_C[i] / (w + i)
    t = w + _LANCZOS_G + 0.5
    try:
        value = math.sqrt(_TWO_PI) * t ** (w + 0.5) * cmath.exp(-t) * acc
    except OverflowError:
        raise NumericOverflowError("gamma overflow") from None
    return _require_finite(value, "gamma")


# ---------------------------------------------------------------------------
# Euler-Maclaurin Hurwitz zeta
# ---------------------------------------------------------------------------


def _em_head_length(s: complex, alpha: float, cfg: PrecisionConfig) -> int:
    """Head length M: config default, shrunk when Re s < 1/2 to keep the
    head/integral cancellation below the absolute accuracy target."""
    m = cfg.em_cutoff
    if s.real < 0.5:
        cap = (cfg.target_abs_error / (5.0 * _MACH_EPS)) ** (1.0 / (1.0 - s.real))
        m = min(m, max(2, int(round(cap - alpha)) + 1))
    return m


def _em_tail_terms(s: complex, cfg: PrecisionConfig) -> int:
    """For very negative Re s the correction series only terminates after
    the rising factorial crosses zero; make sure we reach that point."""
    j = cfg.em_tail_terms
    if s.real < 0.0:
        j = max(j, int(-s.real / 2.0) + 3)
    return min(j, len(_B2J_OVER_FACT))


def _em_tail(s: complex, big_t: float, t_pow: complex, terms: int) -> complex:
    """Bernoulli correction sum with optimal (smallest-term) truncation.

    For Re s < 0 the term magnitudes legitimately rise before falling, so the
    sum is only cut back to its smallest term when the final term has clearly
    re-entered asymptotic growth.  ``t_pow`` must be (M+a)^(-s-1) on entry.
    """
    acc = 0j
    poch = s
    inv_t2 = 1.0 / (big_t * big_t)
    min_mag = math.inf
    acc_at_min = 0j
    mag = 0.0
    for j in range(1, terms + 1):
        term = _B2J_OVER_FACT[j - 1] * poch * t_pow
        acc += term
        mag = abs(term)
        if mag <= min_mag:
            min_mag = mag
            acc_at_min = acc
        if mag == 0.0:
            break
        poch *= (s + (2 * j - 1)) * (s + 2 * j)
        t_pow *= inv_t2
    if mag > 10.0 * min_mag:
        return acc_at_min
    return acc


def _em_hurwitz(s: complex, alpha: float, cfg: PrecisionConfig) -> complex:
    m = _em_head_length(s, alpha, cfg)
    head = 0j
    for n in range(m):
        head += (n + alpha) ** (-s)
    big_t = m + alpha
    t_ms = cmath.exp(-s * math.log(big_t))  # (M+a)^-s
    value = head + t_ms * big_t / (s - 1.0) + 0.5 * t_ms
    value += _em_tail(s, big_t, t_ms / big_t, _em_tail_terms(s, cfg))
    return value


def _em_hurwitz_minus_pole(t: complex, alpha: float, cfg: PrecisionConfig) -> complex:
    """zeta(1+t, alpha) - 1/t, stable for |t| small (t = 0 allowed)."""
    s = 1.0 + t
    m = cfg.em_cutoff
    head = 0j
    for n in range(m):
        head += (n + alpha) ** (-s)
    big_t = m + alpha
    log_t = math.log(big_t)
    t_ms = cmath.exp(-s * log_t)
    # (M+a)^(1-s)/(s-1) - 1/t = ((M+a)^-t - 1)/t = expm1(-t log(M+a))/t
    if t == 0:
        integral = complex(-log_t)
    else:
        integral = _cexpm1(-t * log_t) / t
    value = head + integral + 0.5 * t_ms
    value += _em_tail(s, big_t, t_ms / big_t, _em_tail_terms(s, cfg))
    return value


def _cexpm1(z: complex) -> complex:
    """exp(z) - 1 without cancellation for small |z|."""
    x, y = z.real, z.imag
    if y == 0.0:
        return complex(math.expm1(x))
    re = math.expm1(x) * math.cos(y) - 2.0 * math.sin(0.5 * y) ** 2
    im = math.exp(x) * math.sin(y)
    return complex(re, im)


def hurwitz_zeta(s: complex, alpha: float,
                 config: PrecisionConfig | None = None) -> complex:
    """Hurwitz zeta(s, alpha) for real alpha > 0, s != 1."""
    cfg = config or DEFAULT_CONFIG
    s = complex(s)
    alpha = float(alpha)
    if alpha <= 0.0:
        raise DomainError("hurwitz_zeta requires alpha > 0")
    if abs(s - 1.0) <= 1e-10:
        raise PoleProximityError("hurwitz_zeta pole at s = 1")
    return _require_finite(_em_hurwitz(s, alpha, cfg), "hurwitz_zeta")


def riemann_zeta(s: complex, config: PrecisionConfig | None = None) -> complex:
    """Riemann zeta(s) = zeta(s, 1)."""
    return hurwitz_zeta(s, 1.0, config)


# ---------------------------------------------------------------------------
# Contour (Cauchy) differentiation
# ---------------------------------------------------------------------------


def _contour_coeff(f, rho: float, points: int, order: int) -> complex:
    """Taylor coefficient a_order of f about 0 from samples on |t| = rho."""
    acc = 0j
    for k in range(points):
        theta = _TWO_PI * k / points
        t = cmath.rect(rho, theta)
        acc += f(t) * cmath.exp(complex(0.0, -order * theta))
    return acc / (points * rho ** order)


def hurwitz_zeta_deriv(r: int, s: complex, alpha: float,
                       config: PrecisionConfig | None = None) -> complex:
    """r-th partial s-derivative of zeta(s, alpha), r <= 6.

    Trapezoidal contour differentiation on a circle around s; the radius
    shrinks to half the distance to the pole at s = 1 when necessary.
    """
    cfg = config or DEFAULT_CONFIG
    if not 0 <= r <= 6:
        raise ValueError("derivative order must be in 0..6")
    if r == 0:
        return hurwitz_zeta(s, alpha, cfg)
    s = complex(s)
    alpha = float(alpha)
    if alpha <= 0.0:
        raise DomainError("hurwitz_zeta_deriv requires alpha > 0")
    dist = abs(s - 1.0)
    if dist <= cfg.contour_radius + 1e-10:
        raise PoleProximityError(
            f"contour of radius {cfg.contour_radius} around s={s!r} meets the pole at 1")
    rho = min(cfg.contour_radius, 0.5 * dist)
    coeff = _contour_coeff(lambda t: _em_hurwitz(s + t, alpha, cfg),
                           rho, cfg.contour_points, r)
    return _require_finite(factorial(r) * coeff, "hurwitz_zeta_deriv")


def riemann_zeta_deriv(r: int, s: complex,
                       config: PrecisionConfig | None = None) -> complex:
    """r-th derivative of Riemann zeta, = hurwitz_zeta_deriv(r, s, 1)."""
    return hurwitz_zeta_deriv(r, s, 1.0, config)


# ---------------------------------------------------------------------------
# Stieltjes constants and digamma
# ---------------------------------------------------------------------------


def stieltjes(n: int, alpha: float, config: PrecisionConfig | None = None) -> complex:
    """Generalized Stieltjes constant gamma_n(alpha), for -1 <= n <= 5.

    gamma_n(alpha) is the n-th Taylor coefficient at 0 of
    g(t) = zeta(1+t, alpha) - 1/t; gamma_{-1} = 1 identically.
    """
    cfg = config or DEFAULT_CONFIG
    if not -1 <= n <= 5:
        raise ValueError("stieltjes order must be in -1..5")
    if n == -1:
        return complex(1.0)
    alpha = float(alpha)
    if alpha <= 0.0:
        raise DomainError("stieltjes requires alpha > 0")
    coeff = _contour_coeff(lambda t: _em_hurwitz_minus_pole(t, alpha, cfg),
                           cfg.contour_radius, cfg.contour_points, n)
    return _require_finite(coeff, "stieltjes")


def stieltjes_value(n: int, alpha: float,
                    config: PrecisionConfig | None = None) -> StieltjesValue:
    """Like :func:`stieltjes`, tagged with its index and evaluation point."""
    return StieltjesValue(order=n, at=float(alpha), value=stieltjes(n, alpha, config))


def digamma(alpha: float, config: PrecisionConfig | None = None) -> float:
    """psi(alpha) = Gamma'/Gamma for real alpha > 0.

    Upward recurrence psi(a+1) = psi(a) + 1/a until the argument is large,
    then the Bernoulli asymptotic series.
    """
    alpha = float(alpha)
    if alpha <= 0.0:
        raise DomainError("digamma requires alpha > 0")
    acc = 0.0
    x = alpha
    while x < 16.0:
        acc -= 1.0 / x
        x += 1.0
    inv2 = 1.0 / (x * x)
    series = 0.0
    pw = inv2
    for j in range(1, 9):
        series += _B2J_OVER_2J[j - 1] * pw
        pw *= inv2
    value = acc + math.log(x) - 0.5 / x - series
    if not math.isfinite(value):
        raise NumericOverflowError("non-finite value in digamma")
    return value


# ---------------------------------------------------------------------------
# Taylor-disc evaluation (complex alpha)
# ---------------------------------------------------------------------------


def hurwitz_taylor(s: complex, alpha: complex, k: int,
                   config: PrecisionConfig | None = None) -> complex:
    """zeta(s, alpha) for complex alpha inside the disc |alpha| < k - 1/4.

    Uses the shifted-zeta Taylor expansion

        zeta(s, a) = sum_{n<k} (n+a)^-s
                     + sum_{n>=0} (s)_n zeta_k(s+n) (-a)^n / n!,

    where zeta_k(u) = zeta(u) - sum_{1<=m<k} m^-u and (s)_n is the rising
    factorial.  Requires every zeta_k(s+n) to be off the pole, i.e. s+n != 1.
    """
    cfg = config or DEFAULT_CONFIG
    s = complex(s)
    alpha = complex(alpha)
    if k < 1:
        raise ValueError("k must be a positive integer")
    if abs(alpha) >= k - 0.25:
        raise DomainError(f"alpha={alpha!r} outside the safe disc |alpha| < {k - 0.25}")
    # s + n = 1 for some integer n >= 0 would hit the zeta pole
    d = 1.0 - s
    if abs(d.imag) < 1e-10 and d.real > -1e-10 and abs(d.real - round(d.real)) < 1e-10:
        raise PoleProximityError(f"pole collision: s + {round(d.real)} = 1")

    head = 0j
    for n in range(k):
        base = n + alpha
        if base == 0:
            raise DomainError("alpha makes a head term (n + alpha) vanish")
        head += cmath.exp(-s * cmath.log(base))

    def zeta_k(u: complex) -> complex:
        # zeta(u) - sum_{1<=m<k} m^-u == zeta(u, k); the index-shifted form
        # avoids the cancellation that the literal subtraction suffers once
        # zeta(u) rounds to 1 (the series would then blow up in the noise).
        return hurwitz_zeta(u, float(k), cfg)

    threshold = cfg.target_abs_error / 10.0
    total = head
    poch = 1.0 + 0j  # (s)_n
    coef = 1.0 + 0j  # (-alpha)^n / n!
    small_run = 0
    for n in range(400):
        term = poch * zeta_k(s + n) * coef
        total += term
        if abs(term) < threshold:
            small_run += 1
            if small_run >= 2 and n >= 4:
                return _require_finite(total, "hurwitz_taylor")
        else:
            small_run = 0
        poch *= s + n
        coef *= -alpha / (n + 1)
    raise ConvergenceError("hurwitz_taylor did not reach the term threshold in 400 terms")
