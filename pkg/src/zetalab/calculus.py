"""The alpha-calculus layer: antiderivative families in alpha, the forward
alpha-derivative rule, the digamma derivative chain, and the two definite
integrals that follow from them.

Central derived fact: the antiderivative of zeta^(r)(s, .) is

    sum_{l=0..r} c_l zeta^(l)(s-1, a) / (1-s)^(r+1-l),   c_l = r!/l!.

The coefficients are not taken on faith: differentiating the family in alpha
with the forward rule must collapse, as an exact rational-function identity,
to the single term zeta^(r)(s, a) -- see
:func:`antiderivative_alpha_derivative_symbolic`, which the test suite runs
for every r used anywhere else.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from . import kernels
from .errors import DomainError, PoleProximityError
from .exact import RatPoly
from .kernels import PrecisionConfig
from .reduction import RationalFunctionOfS

__all__ = [
    "AntiderivativeTerm",
    "antiderivative_terms",
    "antiderivative_eval",
    "antiderivative_alpha_derivative_symbolic",
    "alpha_derivative",
    "alpha_derivative_at_zero",
    "stieltjes_alpha_derivative",
    "psi_chain",
    "integral_01",
    "integral_1_inf",
]

_MAX_R = 6


@dataclass(frozen=True)
class AntiderivativeTerm:
    """One term c * zeta^(deriv_order)(s-1, a) / (1-s)^pole_power."""

    deriv_order: int
    coefficient: Fraction
    pole_power: int


def antiderivative_terms(r: int) -> tuple[AntiderivativeTerm, ...]:
    """Terms of the antiderivative of zeta^(r)(s, .) in alpha: c_l = r!/l!."""
    if not 0 <= r <= _MAX_R:
        raise ValueError(f"derivative order must be in 0..{_MAX_R}")
    return tuple(
        AntiderivativeTerm(deriv_order=l,
                           coefficient=Fraction(factorial(r), factorial(l)),
                           pole_power=r + 1 - l)
        for l in range(r + 1)
    )


def antiderivative_eval(r: int, s: complex, alpha: float,
                        config: PrecisionConfig | None = None) -> complex:
    """Numeric antiderivative value sum_l c_l zeta^(l)(s-1, a)/(1-s)^(r+1-l)."""
    cfg = config or kernels.DEFAULT_CONFIG
    if not 0 <= r <= 4:
        raise ValueError("derivative order must be in 0..4")
    s = complex(s)
    if abs(s - 1.0) <= cfg.contour_radius:
        raise PoleProximityError("antiderivative family is singular at s = 1")
    one_minus_s = 1.0 - s
    total = 0j
    for term in antiderivative_terms(r):
        z = kernels.hurwitz_zeta_deriv(term.deriv_order, s - 1.0, alpha, cfg)
        total += float(term.coefficient) * z / one_minus_s ** term.pole_power
    return total


def antiderivative_alpha_derivative_symbolic(r: int) -> dict[int, RationalFunctionOfS]:
    """Differentiate the antiderivative family in alpha, symbolically.

    Each term c_l zeta^(l)(s-1, a)/(1-s)^(r+1-l) maps under d/da to
    -l zeta^(l-1)(s, a) - (s-1) zeta^(l)(s, a) times its coefficient.  The
    result maps derivative order j to the exact rational-function coefficient
    of zeta^(j)(s, a); the family is a true antiderivative iff this collapses
    to {r: 1}.
    """
    one_minus_s = RatPoly((1, -1))
    s_minus_1 = RatPoly((-1, 1))
    collected: dict[int, RationalFunctionOfS] = {}

    def add(j: int, rf: RationalFunctionOfS) -> None:
        collected[j] = collected.get(j, RationalFunctionOfS.zero()) + rf

    for term in antiderivative_terms(r):
        denom = RatPoly.one()
        for _ in range(term.pole_power):
            denom = denom * one_minus_s
        base = RationalFunctionOfS(RatPoly((term.coefficient,)), denom)
        if term.deriv_order >= 1:
            add(term.deriv_order - 1, base * Fraction(-term.deriv_order))
        add(term.deriv_order, base * RationalFunctionOfS(-s_minus_1))
    return {j: rf for j, rf in collected.items() if not rf.is_zero()}


def alpha_derivative(r: int, s: complex, alpha: float,
                     config: PrecisionConfig | None = None) -> complex:
    """Forward rule: d/da zeta^(r)(s, a) = -r zeta^(r-1)(s+1, a) - s zeta^(r)(s+1, a).

    Valid for s != 0 (the shifted kernel sits on its pole at s = 0, matching
    the stated exclusion of the rule there).
    """
    if not 0 <= r <= _MAX_R:
        raise ValueError(f"derivative order must be in 0..{_MAX_R}")
    s = complex(s)
    value = -s * kernels.hurwitz_zeta_deriv(r, s + 1.0, alpha, config)
    if r >= 1:
        value -= r * kernels.hurwitz_zeta_deriv(r - 1, s + 1.0, alpha, config)
    return value


def alpha_derivative_at_zero(r: int, alpha: float,
                             config: PrecisionConfig | None = None) -> complex:
    """d/da zeta^(r)(0, a) = -r! gamma_{r-1}(a)."""
    if not 0 <= r <= 4:
        raise ValueError("derivative order must be in 0..4")
    return -factorial(r) * kernels.stieltjes(r - 1, alpha, config)


def stieltjes_alpha_derivative(r: int, alpha: float,
                               config: PrecisionConfig | None = None) -> complex:
    """d/da gamma_{r-1}(a) = -(1/r!) d^r/ds^r [s(s+1) zeta(s+2, a)] at s=0.

    The bracketed function is entire (the factor s+1 removes the zeta pole),
    so plain contour differentiation about 0 applies; for r = 1 this equals
    -zeta(2, a).
    """
    cfg = config or kernels.DEFAULT_CONFIG
    if r < 1:
        raise ValueError("order must be >= 1")
    if r > 5:
        raise ValueError("order must be <= 5")
    alpha = float(alpha)
    if alpha <= 0.0:
        raise DomainError("stieltjes_alpha_derivative requires alpha > 0")

    def h(t: complex) -> complex:
        return t * (t + 1.0) * kernels._em_hurwitz(t + 2.0, alpha, cfg)

    coeff = kernels._contour_coeff(h, cfg.contour_radius, cfg.contour_points, r)
    # d^r/ds^r at 0 is r! * coeff; dividing by r! leaves the bare coefficient
    return -coeff


def psi_chain(r: int, alpha: float,
              config: PrecisionConfig | None = None) -> complex:
    """d^r/da^r psi(a) = (-1)^(r-1) r! zeta(r+1, a) for r >= 1."""
    if r < 1:
        raise ValueError("order must be >= 1")
    return (-1.0) ** (r - 1) * factorial(r) * kernels.hurwitz_zeta(r + 1.0, alpha, config)


def integral_01(r: int, s: complex,
                config: PrecisionConfig | None = None) -> complex:
    """int_0^1 zeta^(r)(s, a) da for Re s < 1, via antiderivative endpoints.

    The antiderivative is continuous up to a = 0 with the a -> 0 limit equal
    to the a = 1 value (both reduce to zeta^(l)(s-1)), so the difference
    F(1) - F(0+) vanishes; the returned magnitude certifies the identity.
    The independent check of the same statement is tanh-sinh quadrature.
    """
    cfg = config or kernels.DEFAULT_CONFIG
    if not 0 <= r <= 4:
        raise ValueError("derivative order must be in 0..4")
    s = complex(s)
    if s.real >= 1.0:
        raise DomainError("integral_01 requires Re s < 1")
    one_minus_s = 1.0 - s
    total = 0j
    for term in antiderivative_terms(r):
        at_one = kernels.hurwitz_zeta_deriv(term.deriv_order, s - 1.0, 1.0, cfg)
        at_zero = kernels.riemann_zeta_deriv(term.deriv_order, s - 1.0, cfg)
        total += (float(term.coefficient)
                  * (at_one - at_zero) / one_minus_s ** term.pole_power)
    return total


def integral_1_inf(r: int, s: complex,
                   config: PrecisionConfig | None = None) -> complex:
    """int_1^inf zeta^(r)(s, a) da = -sum_l c_l zeta^(l)(s-1)/(1-s)^(r+1-l),
    for Re s > 2 (the antiderivative vanishes at infinity there)."""
    cfg = config or kernels.DEFAULT_CONFIG
    if not 0 <= r <= 3:
        raise ValueError("derivative order must be in 0..3")
    s = complex(s)
    if s.real <= 2.0:
        raise DomainError("integral_1_inf requires Re s > 2")
    one_minus_s = 1.0 - s
    total = 0j
    for term in antiderivative_terms(r):
        z = kernels.riemann_zeta_deriv(term.deriv_order, s - 1.0, cfg)
        total += float(term.coefficient) * z / one_minus_s ** term.pole_power
    return -total
