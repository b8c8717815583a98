"""Numeric kernels against independent oracles.

Oracles used here: closed forms (pi^2/6, sqrt(pi), -log(2 pi)/2), the exact
rational module for zeta at non-positive integers, the dyadic identity
zeta(s, 1/2) = (2^s - 1) zeta(s), lgamma for zeta'(0, a), an accelerated
alternating series for zeta'(2), finite differences for contour consistency,
and the Laurent definition for Stieltjes constants.
"""

import cmath
import math
from fractions import Fraction

import pytest

from zetalab.errors import (DomainError, NumericOverflowError,
                            PoleProximityError)
from zetalab.exact import poly_eval, zeta_neg_int_poly
from zetalab.kernels import (DEFAULT_CONFIG, PrecisionConfig, StieltjesValue,
                             digamma, format_complex, gamma_complex,
                             hurwitz_taylor, hurwitz_zeta, hurwitz_zeta_deriv,
                             riemann_zeta, riemann_zeta_deriv, stieltjes,
                             stieltjes_value)

EULER_GAMMA = 0.5772156649015329


def alternating_sum(terms):
    """Accelerated alternating series sum_{k>=0} (-1)^k a_k (Chebyshev-based)."""
    n = len(terms)
    d = (3.0 + math.sqrt(8.0)) ** n
    d = (d + 1.0 / d) / 2.0
    b, c, total = -1.0, -d, 0.0
    for k, a_k in enumerate(terms):
        c = b - c
        total += c * a_k
        b *= (k + n) * (k - n) / ((k + 0.5) * (k + 1.0))
    return total / d


def zeta_prime_2_oracle():
    """zeta'(2) from eta'(2) = (log 2 / 2) zeta(2) + zeta'(2) / 2."""
    # eta'(2) = sum_{n>=1} (-1)^n log(n)/n^2 = -sum_{k>=0} (-1)^k log(k+1)/(k+1)^2
    eta_prime = -alternating_sum([math.log(k + 1) / (k + 1) ** 2 for k in range(40)])
    return 2.0 * eta_prime - math.log(2.0) * (math.pi ** 2 / 6.0)


class TestGamma:
    def test_one(self):
        assert abs(gamma_complex(1.0) - 1.0) < 1e-13

    def test_factorial(self):
        assert abs(gamma_complex(5.0) - 24.0) < 1e-11

    def test_half_is_sqrt_pi(self):
        assert abs(gamma_complex(0.5) - math.sqrt(math.pi)) < 1e-13

    def test_functional_equation(self):
        for z in (0.3 + 0.7j, 2.5, 4.0 - 1.0j):
            assert abs(gamma_complex(z + 1) - z * gamma_complex(z)) < 1e-10

    def test_reflection_region(self):
        # Gamma(z) Gamma(1-z) sin(pi z) = pi on both sides of the split
        for z in (-2.3 + 0.4j, -0.7, 0.2):
            prod = gamma_complex(z) * gamma_complex(1.0 - z) * cmath.sin(math.pi * z)
            assert abs(prod - math.pi) < 1e-10

    def test_pole_guard(self):
        with pytest.raises(PoleProximityError):
            gamma_complex(-3.0)
        with pytest.raises(PoleProximityError):
            gamma_complex(0.0 + 1e-14j)

    def test_overflow_is_an_error(self):
        with pytest.raises(NumericOverflowError):
            gamma_complex(400.0)


class TestRiemannZeta:
    def test_basel(self):
        assert abs(riemann_zeta(2.0) - math.pi ** 2 / 6.0) < 1e-12

    @pytest.mark.parametrize("n", range(0, 9))
    def test_nonpositive_integers_vs_exact(self, n):
        expected = float(poly_eval(zeta_neg_int_poly(n), 1))
        assert abs(riemann_zeta(-float(n)) - expected) < 1e-10

    def test_pole_guard(self):
        with pytest.raises(PoleProximityError):
            riemann_zeta(1.0 + 1e-12j)

    def test_complex_strip(self):
        # conjugate symmetry on the critical strip
        v = riemann_zeta(0.5 + 6.0j)
        w = riemann_zeta(0.5 - 6.0j)
        assert abs(v - w.conjugate()) < 1e-12


class TestHurwitzZeta:
    def test_alpha_one_is_riemann(self):
        for s in (2.5, -1.5, 0.3 + 0.4j):
            assert hurwitz_zeta(s, 1.0) == riemann_zeta(s)

    @pytest.mark.parametrize("s", [2.0, 3.0, -1.5, 0.5, -0.5 + 1.0j])
    def test_dyadic_identity(self, s):
        # zeta(s, 1/2) = (2^s - 1) zeta(s)
        lhs = hurwitz_zeta(s, 0.5)
        rhs = (2.0 ** complex(s) - 1.0) * riemann_zeta(s)
        assert abs(lhs - rhs) < 1e-11

    def test_half_value(self):
        assert abs(hurwitz_zeta(2.0, 0.5) - math.pi ** 2 / 2.0) < 1e-12

    def test_forward_difference(self):
        lhs = hurwitz_zeta(2.0, 0.3) - hurwitz_zeta(2.0, 1.3)
        assert abs(lhs - 0.3 ** -2.0) < 1e-11

    @pytest.mark.parametrize("m", range(0, 9))
    def test_negative_integers_vs_exact(self, m):
        poly = zeta_neg_int_poly(m)
        for tenths in range(1, 20):
            a = Fraction(tenths, 10)
            expected = float(poly_eval(poly, a))
            assert abs(hurwitz_zeta(-float(m), float(a)) - expected) < 1e-10

    def test_domain_guard(self):
        with pytest.raises(DomainError):
            hurwitz_zeta(2.0, 0.0)
        with pytest.raises(DomainError):
            hurwitz_zeta(2.0, -1.0)

    def test_pole_guard(self):
        with pytest.raises(PoleProximityError):
            hurwitz_zeta(1.0, 0.5)


class TestDerivatives:
    def test_order_zero_delegates(self):
        assert hurwitz_zeta_deriv(0, 2.0, 0.7) == hurwitz_zeta(2.0, 0.7)

    def test_log_gamma_link(self):
        # zeta'(0, a) = log(Gamma(a)/sqrt(2 pi)), via lgamma
        for a in (0.5, 1.0, 2.0):
            expected = math.lgamma(a) - 0.5 * math.log(2.0 * math.pi)
            assert abs(hurwitz_zeta_deriv(1, 0.0, a) - expected) < 1e-9

    def test_zeta_prime_zero(self):
        assert abs(riemann_zeta_deriv(1, 0.0) - (-0.5 * math.log(2.0 * math.pi))) < 1e-9

    def test_zeta_prime_two_alternating_oracle(self):
        assert abs(riemann_zeta_deriv(1, 2.0) - zeta_prime_2_oracle()) < 1e-9

    @pytest.mark.parametrize("s, a", [(2.5, 0.7), (-0.5, 1.3), (3.0 + 1.0j, 0.4)])
    def test_contour_vs_central_difference(self, s, a):
        h = 1e-5
        fd = (hurwitz_zeta(s + h, a) - hurwitz_zeta(s - h, a)) / (2 * h)
        assert abs(hurwitz_zeta_deriv(1, s, a) - fd) < 1e-6

    def test_second_derivative_consistency(self):
        # d/ds of zeta'(s, a) by finite differences matches r=2
        s, a, h = 2.0, 0.6, 1e-4
        fd = (hurwitz_zeta_deriv(1, s + h, a) - hurwitz_zeta_deriv(1, s - h, a)) / (2 * h)
        assert abs(hurwitz_zeta_deriv(2, s, a) - fd) < 1e-5

    def test_pole_margin_guard(self):
        with pytest.raises(PoleProximityError):
            hurwitz_zeta_deriv(1, 1.2, 0.7)  # |s-1| < default radius 0.5

    def test_order_bounds(self):
        with pytest.raises(ValueError):
            hurwitz_zeta_deriv(7, 3.0, 1.0)
        with pytest.raises(ValueError):
            hurwitz_zeta_deriv(-1, 3.0, 1.0)


class TestTaylorDisc:
    def test_alpha_one_consistency(self):
        for s in (-2.5, 0.6, 2.5):
            assert abs(hurwitz_taylor(s, 1.0, 3) - riemann_zeta(s)) < 1e-10

    def test_cross_method_spot(self):
        assert abs(hurwitz_taylor(-2.5, 0.7, 4) - hurwitz_zeta(-2.5, 0.7)) < 1e-9

    def test_cross_method_grid(self):
        worst = 0.0
        for s in (-2.5, -1.5, -0.5, 0.75, 2.5):
            for a in (0.3, 0.7, 1.2, 1.6):
                d = abs(hurwitz_taylor(s, a, 3) - hurwitz_zeta(s, a))
                worst = max(worst, d)
        assert worst < 1e-9

    def test_alpha_to_zero_limit(self):
        assert abs(hurwitz_taylor(-1.5, 1e-10, 2) - riemann_zeta(-1.5)) < 1e-9

    def test_complex_alpha_against_difference_identity(self):
        # zeta(s, a) - zeta(s, a+1) = a^-s holds for complex a in the disc
        s, a = -1.5, 0.4 + 0.8j
        lhs = hurwitz_taylor(s, a, 3) - hurwitz_taylor(s, a + 1.0, 3)
        rhs = cmath.exp(-s * cmath.log(a))
        assert abs(lhs - rhs) < 1e-10

    def test_disc_guard(self):
        with pytest.raises(DomainError):
            hurwitz_taylor(2.0, 1.8, 2)

    def test_pole_collision(self):
        with pytest.raises(PoleProximityError):
            hurwitz_taylor(-2.0, 0.5, 2)  # s + 3 = 1


class TestStieltjes:
    def test_order_minus_one_exact(self):
        assert stieltjes(-1, 0.37) == 1.0

    def test_euler_constant(self):
        assert abs(stieltjes(0, 1.0) - EULER_GAMMA) < 1e-12

    @pytest.mark.parametrize("a", [0.5, 2.0])
    def test_negative_digamma(self, a):
        assert abs(stieltjes(0, a) - (-digamma(a))) < 1e-12

    def test_gamma1_value(self):
        # Taylor-coefficient convention: gamma_1(1) = +0.0728158...
        assert abs(stieltjes(1, 1.0) - 0.07281584548367672) < 1e-12

    @pytest.mark.parametrize("a", [0.3, 1.0, 1.7])
    def test_laurent_definition(self, a):
        # zeta(1+s, a) ~ 1/s + sum gamma_n(a) s^n near s = 0
        s = 0.1
        partial = sum(stieltjes(n, a).real * s ** n for n in range(6))
        lhs = hurwitz_zeta(1.0 + s, a).real - 1.0 / s
        assert abs(lhs - partial) < 1e-6

    @pytest.mark.parametrize("n", range(0, 6))
    def test_real_for_real_alpha(self, n):
        for a in (0.4, 1.0, 2.3):
            assert abs(stieltjes(n, a).imag) < 1e-10

    def test_order_bounds(self):
        with pytest.raises(ValueError):
            stieltjes(6, 1.0)
        with pytest.raises(ValueError):
            stieltjes(-2, 1.0)

    def test_tagged_value(self):
        sv = stieltjes_value(-1, 2.0)
        assert sv == StieltjesValue(order=-1, at=2.0, value=1.0 + 0j)


class TestDigamma:
    def test_euler(self):
        assert abs(digamma(1.0) + EULER_GAMMA) < 1e-13

    def test_half(self):
        expected = -EULER_GAMMA - 2.0 * math.log(2.0)
        assert abs(digamma(0.5) - expected) < 1e-13

    def test_recurrence(self):
        assert abs(digamma(2.0) - (digamma(1.0) + 1.0)) < 1e-13

    def test_domain(self):
        with pytest.raises(DomainError):
            digamma(0.0)


class TestPoleStructure:
    def test_zeta_double_pole_ladder(self):
        devs = []
        for eps in (1e-2, 1e-3, 1e-4):
            devs.append(abs(eps * eps * hurwitz_zeta(2.0, eps) - 1.0))
        assert devs[0] > 5 * devs[1] > 25 * devs[2]
        assert devs[2] < 1e-6

    def test_psi_simple_pole_ladder(self):
        devs = []
        for eps in (1e-2, 1e-3, 1e-4):
            psi_eps = digamma(1.0 + eps) - 1.0 / eps
            devs.append(abs(eps * psi_eps + 1.0))
        assert devs[0] > 5 * devs[1] > 25 * devs[2]
        assert devs[2] < 1e-3


class TestConfig:
    def test_defaults(self):
        cfg = DEFAULT_CONFIG
        assert cfg.em_cutoff == 25 and cfg.em_tail_terms == 12
        assert cfg.contour_radius == 0.5 and cfg.contour_points == 32

    @pytest.mark.parametrize("kwargs", [
        {"em_cutoff": 4},
        {"em_tail_terms": 0},
        {"em_tail_terms": 25},
        {"contour_points": 24},
        {"contour_points": 8},
        {"target_abs_error": 1e-16},
        {"contour_radius": 0.0},
    ])
    def test_validation(self, kwargs):
        with pytest.raises(ValueError):
            PrecisionConfig(**kwargs)

    def test_custom_precision_still_accurate(self):
        cfg = PrecisionConfig(em_cutoff=40, em_tail_terms=14, contour_points=64)
        assert abs(riemann_zeta(2.0, cfg) - math.pi ** 2 / 6.0) < 1e-12


class TestSerialization:
    def test_representative(self):
        assert format_complex(complex(1.5, -2.25)) == "1.5-2.25i"

    def test_fifteen_digits(self):
        assert format_complex(complex(math.pi ** 2 / 6.0, 0.0)) == "1.64493406684823+0i"

    def test_negative_zero_normalised(self):
        assert format_complex(complex(-0.0, -0.0)) == "0+0i"
