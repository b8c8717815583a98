"""Exact rational arithmetic: Bernoulli numbers and polynomials.

Rationals are ``fractions.Fraction`` (always reduced, positive denominator,
zero stored as 0/1).  Polynomials are dense sequences of rational
coefficients in ascending degree order, wrapped in :class:`RatPoly`.

Convention: B1 = -1/2 (the "first" Bernoulli numbers).  This is forced by
zeta(0, a) = 1/2 - a together with zeta(-n, a) = -B_{n+1}(a)/(n+1); the
B1 = +1/2 convention seen elsewhere is NOT used anywhere in this package.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from math import comb, factorial
from typing import Iterable, Sequence, Union

Rational = Fraction
RationalLike = Union[Fraction, int]

__all__ = [
    "Rational",
    "RatPoly",
    "bernoulli_number",
    "bernoulli_polynomial",
    "poly_mul",
    "poly_eval",
    "poly_reflect",
    "poly_integral_01",
    "bernoulli_product_integral",
    "zeta_neg_int_poly",
    "rational_str",
]


def rational_str(q: Fraction) -> str:
    """Serialize a rational as decimal digits, "num/den" (den omitted when 1)."""
    return str(q)


# ---------------------------------------------------------------------------
# Bernoulli numbers
# ---------------------------------------------------------------------------

# Cache grows monotonically under the lock; readers only ever see a fully
# initialised prefix, so lock-free reads of already-computed entries are safe.
_bernoulli_cache: list[Fraction] = [Fraction(1)]
_bernoulli_lock = threading.Lock()


def bernoulli_number(n: int) -> Fraction:
    """Bernoulli number B_n (B1 = -1/2), by the defining recurrence.

    sum_{k=0}^{m} C(m+1, k) B_k = 0 for m >= 1, solved for B_m with
    memoization up to the largest n requested.
    """
    if n < 0:
        raise ValueError("Bernoulli index must be non-negative")
    if n < len(_bernoulli_cache):
        return _bernoulli_cache[n]
    with _bernoulli_lock:
        for m in range(len(_bernoulli_cache), n + 1):
            if m > 2 and m % 2 == 1:
                _bernoulli_cache.append(Fraction(0))
                continue
            acc = Fraction(0)
            for k in range(m):
                acc += comb(m + 1, k) * _bernoulli_cache[k]
            _bernoulli_cache.append(-acc / (m + 1))
    return _bernoulli_cache[n]


# ---------------------------------------------------------------------------
# Dense rational polynomials
# ---------------------------------------------------------------------------


class RatPoly:
    """Polynomial with rational coefficients, ascending degree order.

    Immutable; the zero polynomial has an empty coefficient tuple.  The
    highest-degree stored coefficient is always nonzero.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[RationalLike] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):  # pragma: no cover - immutability guard
        raise AttributeError("RatPoly is immutable")

    @staticmethod
    def zero() -> "RatPoly":
        return RatPoly()

    @staticmethod
    def one() -> "RatPoly":
        return RatPoly((1,))

    @staticmethod
    def variable() -> "RatPoly":
        """The monomial x."""
        return RatPoly((0, 1))

    @staticmethod
    def constant(c: RationalLike) -> "RatPoly":
        return RatPoly((Fraction(c),))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def leading(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "RatPoly") -> "RatPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return RatPoly(out)

    def __neg__(self) -> "RatPoly":
        return RatPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "RatPoly") -> "RatPoly":
        return self + (-other)

    def __mul__(self, other) -> "RatPoly":
        if isinstance(other, (int, Fraction)):
            return self.scale(Fraction(other))
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1) if self.coeffs and other.coeffs else []
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return RatPoly(out)

    __rmul__ = __mul__

    def scale(self, c: RationalLike) -> "RatPoly":
        c = Fraction(c)
        if c == 0:
            return RatPoly()
        return RatPoly(tuple(c * a for a in self.coeffs))

    def __eq__(self, other) -> bool:
        return isinstance(other, RatPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"RatPoly({list(self.coeffs)!r})"

    # -- evaluation and transforms ----------------------------------------

    def evaluate(self, x: RationalLike) -> Fraction:
        """Exact Horner evaluation at a rational point."""
        x = Fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def evaluate_complex(self, z: complex) -> complex:
        """Horner evaluation at a complex point (coefficients rounded once)."""
        acc = 0j
        for c in reversed(self.coeffs):
            acc = acc * z + float(c)
        return acc

    def derivative(self) -> "RatPoly":
        return RatPoly(tuple(k * c for k, c in enumerate(self.coeffs) if k >= 1))

    def shift_argument(self, delta: RationalLike) -> "RatPoly":
        """Return q with q(x) = p(x + delta), by exact binomial expansion."""
        delta = Fraction(delta)
        if delta == 0 or self.is_zero():
            return self
        n = self.degree
        out = [Fraction(0)] * (n + 1)
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            # c * (x + delta)^k
            pw = Fraction(1)
            for j in range(k, -1, -1):
                out[j] += c * comb(k, j) * pw
                pw *= delta
        return RatPoly(out)

    def ascending_str(self, var: str = "s") -> str:
        """Canonical ascending-degree text form, e.g. "-1 + 1*s + 2*s^2"."""
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                parts.append(str(c))
            elif k == 1:
                parts.append(f"{c}*{var}")
            else:
                parts.append(f"{c}*{var}^{k}")
        return " + ".join(parts)

    def pretty_str(self, var: str = "alpha") -> str:
        """Human-facing descending form, e.g. "alpha^2 - alpha + 1/6"."""
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                head = var if k == 1 else f"{var}^{k}"
                body = head if mag == 1 else f"{mag}*{head}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)


# ---------------------------------------------------------------------------
# Operations
# ---------------------------------------------------------------------------

_bpoly_cache: dict[int, RatPoly] = {}
_bpoly_lock = threading.Lock()


def bernoulli_polynomial(n: int) -> RatPoly:
    """Bernoulli polynomial B_n(x) = sum_i C(n,i) B_{n-i} x^i."""
    if n < 0:
        raise ValueError("Bernoulli polynomial index must be non-negative")
    poly = _bpoly_cache.get(n)
    if poly is None:
        coeffs = [comb(n, i) * bernoulli_number(n - i) for i in range(n + 1)]
        poly = RatPoly(coeffs)
        with _bpoly_lock:
            _bpoly_cache[n] = poly
    return poly


def poly_mul(a: RatPoly, b: RatPoly) -> RatPoly:
    """Exact polynomial product."""
    return a * b


def poly_eval(p: RatPoly, x: RationalLike) -> Fraction:
    """Exact Horner evaluation of p at the rational point x."""
    return p.evaluate(x)


def poly_reflect(p: RatPoly) -> RatPoly:
    """Return q with q(x) = p(1 - x)."""
    if p.is_zero():
        return p
    n = p.degree
    out = [Fraction(0)] * (n + 1)
    for k, c in enumerate(p.coeffs):
        if c == 0:
            continue
        # c * (1 - x)^k
        for j in range(k + 1):
            out[j] += c * comb(k, j) * (-1) ** j
    return RatPoly(out)


def poly_integral_01(p: RatPoly) -> Fraction:
    """Exact integral of p over [0, 1], term-wise antiderivative."""
    return sum((c / (k + 1) for k, c in enumerate(p.coeffs)), Fraction(0))


def bernoulli_product_integral(indices: Sequence[int]) -> Fraction:
    """Exact integral over [0, 1] of the product of B_{m_i}(x).

    The empty product integrates to 1.  The result vanishes whenever the
    index sum is odd (reflection parity of Bernoulli polynomials).

    Deliberately avoids the term-wise antiderivative: the product p is
    expanded in the Bernoulli basis, whose only member with nonzero mean is
    B_0.  The basis coefficients need only endpoint differences of the
    derivatives of p, so

        int_0^1 p = p(0) - sum_{n>=1} B_n * (p^{(n-1)}(1) - p^{(n-1)}(0)) / n!

    which gives an integration path independent of ``poly_integral_01``.
    """
    if any(m < 1 for m in indices):
        raise ValueError("Bernoulli product indices must be >= 1")
    prod = RatPoly.one()
    for m in indices:
        prod = prod * bernoulli_polynomial(m)
    total = prod.evaluate(0)
    deriv = prod
    n = 1
    while not deriv.is_zero():
        jump = deriv.evaluate(1) - deriv.evaluate(0)
        total -= bernoulli_number(n) * jump / factorial(n)
        deriv = deriv.derivative()
        n += 1
    return total


def zeta_neg_int_poly(m: int) -> RatPoly:
    """The polynomial -B_{m+1}(x)/(m+1): the exact value of zeta(-m, x)."""
    if m < 0:
        raise ValueError("index must be non-negative")
    return bernoulli_polynomial(m + 1).scale(Fraction(-1, m + 1))
