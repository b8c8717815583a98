"""Exact integration-by-parts reduction of moment integrals of Hurwitz zeta.

For Re s < 1 and integers i >= 0, repeated integration by parts against the
antiderivative zeta(s-1, a)/(1-s) turns

    int_0^1 a^i zeta(s, a) da          (and the zeta'(s, a) variant)

into finite linear combinations of shifted Riemann zeta values
zeta^(j)(s - k) whose coefficients are rational functions of s.  The
recursion bottoms out at int_0^1 zeta(s - i, a) da = 0.  All coefficient
arithmetic is exact over the rationals; poles of the coefficients land only
at integer shifts s = 1..N by construction.

The closed-form product integrals (the two-factor integral over (0,1), its
s -> 1 limit combination, and the specific triple-product evaluation) live
here too, realised numerically with the kernel layer.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce
from typing import Iterator, Sequence

from . import kernels
from .errors import DomainError, PoleProximityError
from .exact import RatPoly, zeta_neg_int_poly

__all__ = [
    "DerivAtom",
    "RationalFunctionOfS",
    "LinearCombination",
    "reduce_monomial",
    "reduce_poly",
    "integral_poly_zeta",
    "eval_combination",
    "pair_integral",
    "pair_limit_weighted",
    "triple_product_integral",
]

MAX_DEGREE = 64


# ---------------------------------------------------------------------------
# Polynomial gcd machinery (over Fraction coefficients)
# ---------------------------------------------------------------------------


def _poly_divmod(a: RatPoly, b: RatPoly) -> tuple[RatPoly, RatPoly]:
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(a.degree - b.degree + 1, 0)
    rem = list(a.coeffs)
    db, lead = b.degree, b.leading()
    while len(rem) - 1 >= db and rem:
        factor = rem[-1] / lead
        shift = len(rem) - 1 - db
        q[shift] = factor
        for i, c in enumerate(b.coeffs):
            rem[shift + i] -= factor * c
        while rem and rem[-1] == 0:
            rem.pop()
    return RatPoly(q), RatPoly(rem)


def _poly_gcd(a: RatPoly, b: RatPoly) -> RatPoly:
    while not b.is_zero():
        _, r = _poly_divmod(a, b)
        a, b = b, r
    if a.is_zero():
        return a
    return a.scale(1 / a.leading())  # monic


# ---------------------------------------------------------------------------
# Rational functions of s
# ---------------------------------------------------------------------------


class RationalFunctionOfS:
    """A quotient of polynomials in s, stored gcd-reduced with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num: RatPoly, den: RatPoly = RatPoly((1,))):
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            num, den = RatPoly(), RatPoly((1,))
        else:
            g = _poly_gcd(num, den)
            if g.degree > 0:
                num, _ = _poly_divmod(num, g)
                den, _ = _poly_divmod(den, g)
            lead = den.leading()
            if lead != 1:
                num = num.scale(1 / lead)
                den = den.scale(1 / lead)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):  # pragma: no cover - immutability guard
        raise AttributeError("RationalFunctionOfS is immutable")

    @staticmethod
    def constant(c) -> "RationalFunctionOfS":
        return RationalFunctionOfS(RatPoly((Fraction(c),)))

    @staticmethod
    def zero() -> "RationalFunctionOfS":
        return RationalFunctionOfS(RatPoly())

    @staticmethod
    def one() -> "RationalFunctionOfS":
        return RationalFunctionOfS(RatPoly((1,)))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __add__(self, other: "RationalFunctionOfS") -> "RationalFunctionOfS":
        return RationalFunctionOfS(self.num * other.den + other.num * self.den,
                                   self.den * other.den)

    def __sub__(self, other: "RationalFunctionOfS") -> "RationalFunctionOfS":
        return self + (-other)

    def __neg__(self) -> "RationalFunctionOfS":
        return RationalFunctionOfS(-self.num, self.den)

    def __mul__(self, other) -> "RationalFunctionOfS":
        if isinstance(other, (int, Fraction)):
            return RationalFunctionOfS(self.num.scale(other), self.den)
        return RationalFunctionOfS(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return (isinstance(other, RationalFunctionOfS)
                and self.num == other.num and self.den == other.den)

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def shifted_argument(self, delta) -> "RationalFunctionOfS":
        """Return f(s + delta)."""
        return RationalFunctionOfS(self.num.shift_argument(delta),
                                   self.den.shift_argument(delta))

    def evaluate(self, s: complex) -> complex:
        return self.num.evaluate_complex(s) / self.den.evaluate_complex(s)

    def denominator_integer_roots(self) -> list[int]:
        """Integer roots of the denominator (exact evaluation test)."""
        return [k for k in range(-8, MAX_DEGREE + 6)
                if self.den.degree >= 1 and self.den.evaluate(k) == 0]

    def __str__(self) -> str:
        return f"({self.num.ascending_str('s')})/({self.den.ascending_str('s')})"

    def __repr__(self) -> str:
        return f"RationalFunctionOfS({self!s})"


@dataclass(frozen=True, order=True)
class DerivAtom:
    """A reduction target zeta^(j)(s - k): j-th derivative at shift k >= 1."""

    deriv_order: int
    shift: int

    def __str__(self) -> str:
        return f"zeta^({self.deriv_order})(s-{self.shift})"


class LinearCombination:
    """Finite map from :class:`DerivAtom` to rational-function coefficients.

    Zero coefficients are never stored; instances are immutable.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: dict[DerivAtom, RationalFunctionOfS] | None = None):
        clean = {a: c for a, c in (terms or {}).items() if not c.is_zero()}
        object.__setattr__(self, "_terms", clean)

    def __setattr__(self, name, value):  # pragma: no cover - immutability guard
        raise AttributeError("LinearCombination is immutable")

    @staticmethod
    def zero() -> "LinearCombination":
        return LinearCombination()

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def coefficient(self, atom: DerivAtom) -> RationalFunctionOfS:
        return self._terms.get(atom, RationalFunctionOfS.zero())

    def atoms(self) -> list[DerivAtom]:
        return sorted(self._terms)

    def items(self) -> Iterator[tuple[DerivAtom, RationalFunctionOfS]]:
        return iter(sorted(self._terms.items(), key=lambda kv: kv[0]))

    def __add__(self, other: "LinearCombination") -> "LinearCombination":
        merged = dict(self._terms)
        for atom, coeff in other._terms.items():
            if atom in merged:
                merged[atom] = merged[atom] + coeff
            else:
                merged[atom] = coeff
        return LinearCombination(merged)

    def scale(self, factor) -> "LinearCombination":
        if isinstance(factor, (int, Fraction)):
            factor = RationalFunctionOfS.constant(factor)
        return LinearCombination({a: c * factor for a, c in self._terms.items()})

    def shifted(self) -> "LinearCombination":
        """Rewrite a combination in u at u = s - 1: shifts grow by one and
        coefficients are composed with s - 1."""
        return LinearCombination({
            DerivAtom(a.deriv_order, a.shift + 1): c.shifted_argument(-1)
            for a, c in self._terms.items()
        })

    def max_shift(self) -> int:
        return max((a.shift for a in self._terms), default=0)

    def __eq__(self, other) -> bool:
        return isinstance(other, LinearCombination) and self._terms == other._terms

    def serialize(self) -> str:
        """Canonical text form: one "atom * (num)/(den)" line per atom."""
        lines = [f"{atom} * {coeff}" for atom, coeff in self.items()]
        return "\n".join(lines) if lines else "0"

    def __repr__(self) -> str:
        return f"<LinearCombination of {len(self._terms)} atoms>"


# ---------------------------------------------------------------------------
# The reduction recursion
# ---------------------------------------------------------------------------

_S_MINUS_1 = RatPoly((-1, 1))  # s - 1


def _check_r(r: int) -> None:
    if r not in (0, 1):
        raise ValueError("derivative order for the reduction must be 0 or 1")


@lru_cache(maxsize=None)
def reduce_monomial(i: int, r: int) -> LinearCombination:
    """Exact reduction of int_0^1 a^i zeta^(r)(s, a) da, r in {0, 1}.

    One integration by parts against the order-r antiderivative family gives
    boundary terms at a = 1 plus i times the same integral with i-1 and
    s-1; the i = 0 case vanishes identically (zero-mean over the unit
    interval for Re s < 1).
    """
    _check_r(r)
    if not 0 <= i <= MAX_DEGREE:
        raise ValueError(f"monomial degree must be in 0..{MAX_DEGREE}")
    if i == 0:
        return LinearCombination.zero()
    inv_1ms = RationalFunctionOfS(RatPoly((-1,)), _S_MINUS_1)       # 1/(1-s)
    inv_1ms2 = RationalFunctionOfS(RatPoly((1,)), _S_MINUS_1 * _S_MINUS_1)
    if r == 0:
        lc = LinearCombination({DerivAtom(0, 1): inv_1ms})
        # + i/(s-1) * I_{i-1}(s-1)
        factor = RationalFunctionOfS(RatPoly((i,)), _S_MINUS_1)
        return lc + reduce_monomial(i - 1, 0).shifted().scale(factor)
    lc = LinearCombination({DerivAtom(1, 1): inv_1ms, DerivAtom(0, 1): inv_1ms2})
    # - i/(1-s) * I^{(1)}_{i-1}(s-1) - i/(1-s)^2 * I^{(0)}_{i-1}(s-1)
    f1 = RationalFunctionOfS(RatPoly((i,)), _S_MINUS_1)
    f0 = RationalFunctionOfS(RatPoly((-i,)), _S_MINUS_1 * _S_MINUS_1)
    return (lc
            + reduce_monomial(i - 1, 1).shifted().scale(f1)
            + reduce_monomial(i - 1, 0).shifted().scale(f0))


def reduce_poly(p: RatPoly, r: int) -> LinearCombination:
    """Reduction of int_0^1 p(a) zeta^(r)(s, a) da by linearity."""
    _check_r(r)
    if p.degree > MAX_DEGREE:
        raise ValueError(f"polynomial degree must be <= {MAX_DEGREE}")
    total = LinearCombination.zero()
    for i, c in enumerate(p.coeffs):
        if c == 0:
            continue
        total = total + reduce_monomial(i, r).scale(c)
    return total


def integral_poly_zeta(ms: Sequence[int], r: int) -> LinearCombination:
    """Reduction of int_0^1 zeta(-m_1, a) ... zeta(-m_k, a) zeta^(r)(s, a) da.

    Builds the exact product polynomial prod_i (-B_{m_i+1}(a)/(m_i+1)) of
    degree N = sum (m_i + 1); the resulting atoms have shifts 1..N.
    """
    _check_r(r)
    if any(m < 0 for m in ms):
        raise ValueError("polynomial factors need non-negative indices")
    degree = sum(m + 1 for m in ms)
    if degree > MAX_DEGREE:
        raise ValueError(f"total product degree {degree} exceeds {MAX_DEGREE}")
    prod = reduce(lambda acc, m: acc * zeta_neg_int_poly(m), ms, RatPoly.one())
    return reduce_poly(prod, r)


def eval_combination(lc: LinearCombination, s: complex,
                     config: kernels.PrecisionConfig | None = None) -> complex:
    """Numeric value of a reduction at the point s.

    Refuses s within 1e-8 of a coefficient pole (the integer shifts) and
    reports which shift is at fault when a zeta evaluation sits on the pole.
    """
    s = complex(s)
    for atom, coeff in lc.items():
        for root in coeff.denominator_integer_roots():
            if abs(s - root) <= 1e-8:
                raise PoleProximityError(
                    f"coefficient of {atom} has a pole at s = {root}")
    total = 0j
    for atom, coeff in lc.items():
        try:
            value = kernels.riemann_zeta_deriv(atom.deriv_order, s - atom.shift, config)
        except PoleProximityError as exc:
            raise PoleProximityError(f"shift {atom.shift}: {exc}") from None
        total += coeff.evaluate(s) * value
    return total


# ---------------------------------------------------------------------------
# Closed-form product integrals
# ---------------------------------------------------------------------------

_LOG_TWO_PI = math.log(2.0 * math.pi)


def _near_nonpositive_integer(z: complex, margin: float) -> int | None:
    nearest = round(z.real)
    if nearest <= 0 and abs(z - nearest) < margin:
        return nearest
    return None


def pair_integral(s1: complex, s2: complex,
                  config: kernels.PrecisionConfig | None = None) -> complex:
    """Closed form of int_0^1 zeta(s1, a) zeta(s2, a) da:

        2 (2 pi)^(s1+s2-2) Gamma(1-s1) Gamma(1-s2) cos(pi (s1-s2)/2)
          * zeta(2 - s1 - s2),

    valid away from the singularities of either side.
    """
    s1, s2 = complex(s1), complex(s2)
    for label, z in (("Gamma(1-s1)", 1.0 - s1), ("Gamma(1-s2)", 1.0 - s2)):
        bad = _near_nonpositive_integer(z, 1e-10)
        if bad is not None:
            raise PoleProximityError(f"{label} pole: argument near {bad}")
    if abs(1.0 - s1 - s2) <= 1e-10:
        raise PoleProximityError("zeta factor pole: 2 - s1 - s2 near 1")
    value = (2.0 * cmath.exp((s1 + s2 - 2.0) * _LOG_TWO_PI)
             * kernels.gamma_complex(1.0 - s1, config)
             * kernels.gamma_complex(1.0 - s2, config)
             * cmath.cos(0.5 * math.pi * (s1 - s2))
             * kernels.riemann_zeta(2.0 - s1 - s2, config))
    return value


def pair_limit_weighted(s1: complex, s2: complex,
                        config: kernels.PrecisionConfig | None = None) -> complex:
    """Limit as s -> 1- of int_0^1 zeta(s1,a) zeta(s2,a) (s-1) zeta(s,a) da,
    for Re s1 < 0 and Re s2 < 0: the pair integral minus zeta(s1) zeta(s2)."""
    s1, s2 = complex(s1), complex(s2)
    if s1.real >= 0 or s2.real >= 0:
        raise DomainError("pair_limit_weighted requires Re s1 < 0 and Re s2 < 0")
    return (pair_integral(s1, s2, config)
            - kernels.riemann_zeta(s1, config) * kernels.riemann_zeta(s2, config))


def triple_product_integral(s: complex,
                            config: kernels.PrecisionConfig | None = None) -> complex:
    """Closed form of int_0^1 zeta(0,a) zeta(1-s,a) zeta(2-s,a) da for Re s > 1:

        (1/(2(s-1))) * (2 (2 pi)^(-2s) Gamma(s)^2 zeta(2s) - zeta(1-s)^2).
    """
    s = complex(s)
    if s.real <= 1.0:
        raise DomainError("triple_product_integral requires Re s > 1")
    term = (2.0 * cmath.exp(-2.0 * s * _LOG_TWO_PI)
            * kernels.gamma_complex(s, config) ** 2
            * kernels.riemann_zeta(2.0 * s, config))
    zeta_sq = kernels.riemann_zeta(1.0 - s, config) ** 2
    return (term - zeta_sq) / (2.0 * (s - 1.0))
