"""Numeric integration used as an independent cross-check oracle.

Two integrators:

* :func:`tanh_sinh_01` -- double-exponential quadrature on (0, 1).  The
  tanh-sinh substitution x = (1 + tanh((pi/2) sinh t)) / 2 clusters nodes at
  both endpoints, so integrands with algebraic endpoint singularities
  x**(-sigma), sigma < 1, converge at the usual double-exponential rate.
  Levels double the node count and reuse all previous nodes.

* :func:`integrate_1_to_A` -- adaptive bisection with fixed-order
  Gauss-Legendre panels for smooth integrands on [1, A].

Integrands may be complex-valued; they are integrated component-wise and the
error estimate is the max over components.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import ConvergenceError, NumericOverflowError

__all__ = ["QuadResult", "tanh_sinh_01", "integrate_1_to_A"]

_HALF_PI = math.pi / 2.0


@dataclass(frozen=True)
class QuadResult:
    """Integral value with the last refinement difference and the eval count."""

    value: complex
    error_estimate: float
    evaluations: int


def _tanh_sinh_node(t: float) -> tuple[float, float]:
    """Abscissa in (0,1) and weight (without the h factor) at parameter t."""
    u = _HALF_PI * math.sinh(t)
    # x = 1/(1 + exp(-2u)) evaluated from the small side for stability
    if u >= 0.0:
        e = math.exp(-2.0 * u)
        x = 1.0 / (1.0 + e)
    else:
        e = math.exp(2.0 * u)
        x = e / (1.0 + e)
    # dx/dt = (pi/4) cosh(t) sech^2(u), with sech^2 evaluated overflow-free
    sech2 = 4.0 * e / ((1.0 + e) ** 2)
    w = (_HALF_PI / 2.0) * math.cosh(t) * sech2
    return x, w


def _level_nodes(level: int) -> list[tuple[float, float]]:
    """Nodes introduced at the given refinement level (h = 2**-level)."""
    nodes = []
    h = 2.0 ** (-level)
    if level == 0:
        ks: list[float] = [0.0]
        k = 1.0
        while True:
            ks.extend((k, -k))
            if k * h > 7.0:
                break
            k += 1.0
    else:
        ks = []
        k = 1.0
        while k * h <= 7.0:
            ks.extend((k, -k))
            k += 2.0
    for k in ks:
        x, w = _tanh_sinh_node(k * h)
        if 0.0 < x < 1.0 and w > 1e-300:
            nodes.append((x, w))
    return nodes


_node_cache: dict[int, list[tuple[float, float]]] = {}


def _nodes(level: int) -> list[tuple[float, float]]:
    cached = _node_cache.get(level)
    if cached is None:
        cached = _level_nodes(level)
        _node_cache[level] = cached
    return cached


def _check_sample(v: complex, x: float) -> complex:
    v = complex(v)
    if not (math.isfinite(v.real) and math.isfinite(v.imag)):
        raise NumericOverflowError(f"non-finite integrand sample at x={x!r}")
    return v


def tanh_sinh_01(f: Callable[[float], complex], tol: float,
                 budget: int = 2 ** 16) -> QuadResult:
    """Integrate f over (0, 1) by level-doubled tanh-sinh quadrature.

    Refines until the difference between consecutive levels drops below
    ``tol`` or the evaluation budget is exhausted (then raises
    :class:`ConvergenceError`).  The integrand is never called at 0 or 1.
    """
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    evaluations = 0
    partial = 0j  # sum of w*f over all nodes seen so far (no h factor)
    value_prev: complex | None = None
    err = math.inf
    for level in range(0, 14):
        nodes = _nodes(level)
        if evaluations + len(nodes) > budget:
            raise ConvergenceError(
                f"tanh-sinh budget exhausted: {evaluations} evaluations, "
                f"last refinement difference {err:.3e} > tol {tol:.3e}")
        h = 2.0 ** (-level)
        for x, w in nodes:
            partial += w * _check_sample(f(x), x)
            evaluations += 1
        value = h * partial
        if value_prev is not None:
            diff = value - value_prev
            err = max(abs(diff.real), abs(diff.imag))
            if err <= tol:
                return QuadResult(value, err, evaluations)
        value_prev = value
    raise ConvergenceError("tanh-sinh refinement limit reached without convergence")


_GAUSS_ORDER = 16
_gauss_x, _gauss_w = np.polynomial.legendre.leggauss(_GAUSS_ORDER)


def _gauss_panel(f, a: float, b: float) -> complex:
    mid = 0.5 * (a + b)
    half = 0.5 * (b - a)
    total = 0j
    for xi, wi in zip(_gauss_x, _gauss_w):
        x = mid + half * xi
        total += wi * _check_sample(f(x), x)
    return half * total


def integrate_1_to_A(f: Callable[[float], complex], A: float, tol: float,
                     budget: int = 2 ** 16) -> QuadResult:
    """Adaptive Gauss-Legendre integration of a smooth f over [1, A]."""
    if A <= 1.0:
        raise ValueError("upper limit must exceed 1")
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    evaluations = 0
    total = 0j
    err_total = 0.0
    stack = [(1.0, A, _gauss_panel(f, 1.0, A), 0)]
    evaluations += _GAUSS_ORDER
    while stack:
        a, b, whole, depth = stack.pop()
        mid = 0.5 * (a + b)
        left = _gauss_panel(f, a, mid)
        right = _gauss_panel(f, mid, b)
        evaluations += 2 * _GAUSS_ORDER
        if evaluations > budget:
            raise ConvergenceError("adaptive Gauss budget exhausted")
        diff = whole - (left + right)
        err = max(abs(diff.real), abs(diff.imag))
        if err <= tol * (b - a) / (A - 1.0) or depth >= 40:
            total += left + right
            err_total += err
        else:
            stack.append((a, mid, left, depth + 1))
            stack.append((mid, b, right, depth + 1))
    return QuadResult(total, err_total, evaluations)
