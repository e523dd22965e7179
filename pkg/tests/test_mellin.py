"""The quadrature oracle: numerators, transforms, error estimates."""

import math
from fractions import Fraction

import mpmath
import pytest

from hsums import (
    CapabilityError,
    IndexVector,
    QuadratureSpec,
    UsageError,
    eval_exact,
    mellin_numeric,
    numerator_eval,
)
from hsums.constants import LN2, ZETA2, ZETA3

mpmath.mp.dps = 25


class TestNumerators:
    def test_li2_half(self):
        # Li2(1/2) = pi^2/12 - ln^2(2)/2
        expected = ZETA2 / 2 - LN2**2 / 2
        assert numerator_eval("li2", 0.5) == pytest.approx(expected, abs=1e-14)

    def test_li2_one(self):
        assert numerator_eval("li2", 1.0) == pytest.approx(ZETA2, abs=1e-14)

    def test_li3_one(self):
        assert numerator_eval("li3", 1.0) == pytest.approx(ZETA3, abs=1e-14)

    def test_s12_one(self):
        assert numerator_eval("s12", 1.0) == pytest.approx(ZETA3, abs=1e-14)

    @pytest.mark.parametrize("x", [0.03, 0.2, 0.45, 0.5, 0.62, 0.85, 0.97])
    def test_li2_against_mpmath(self, x):
        ref = float(mpmath.polylog(2, x))
        assert abs(numerator_eval("li2", x) - ref) < 1e-13

    @pytest.mark.parametrize("x", [0.03, 0.2, 0.45, 0.55, 0.7, 0.9, 0.99])
    def test_li3_against_mpmath(self, x):
        ref = float(mpmath.polylog(3, x))
        assert abs(numerator_eval("li3", x) - ref) < 1e-13

    @pytest.mark.parametrize("x", [0.05, 0.3, 0.5, 0.65, 0.8, 0.95])
    def test_s12_against_mpmath(self, x):
        # S12(x) = (1/2) int_0^x ln(1-t)^2/t dt
        ref = float(
            mpmath.quad(lambda t: mpmath.log(1 - t) ** 2 / t / 2, [0, x])
        )
        assert abs(numerator_eval("s12", x) - ref) < 1e-13

    def test_f1_integrand_at_one(self):
        assert numerator_eval("F1", 1.0) == pytest.approx(LN2 / 2, abs=1e-15)

    def test_domain_errors(self):
        with pytest.raises(UsageError):
            numerator_eval("li2", 0.0)
        with pytest.raises(UsageError):
            numerator_eval("li2", 1.5)
        with pytest.raises(UsageError):
            numerator_eval("F0", 1.0)  # bare 1/(x-1) singular at 1


class TestMellinNumeric:
    def test_plus_distribution_trivial(self):
        val, err = mellin_numeric("F0", 2.0)
        assert abs(val - 1.0) <= max(1e-12, err)

    def test_plus_distribution_s1(self):
        # M[1/(x-1)+](7) = S1(6) = 49/20
        val, err = mellin_numeric("F0", 7.0)
        assert abs(val - 2.45) < 1e-10

    def test_f1_at_one(self):
        val, _ = mellin_numeric("F1", 1.0)
        assert abs(val - 0.5 * LN2**2) < 1e-12

    @pytest.mark.parametrize("N", range(2, 31))
    def test_plus_subtraction_consistency(self, N):
        val, _ = mellin_numeric("F0", float(N))
        exact = float(eval_exact(IndexVector([1]), N - 1))
        assert abs(val - exact) < 1e-10

    def test_complex_argument(self):
        val, err = mellin_numeric("F3", 7.25 + 2j)
        ref = complex(
            mpmath.quad(
                lambda x: mpmath.polylog(2, x) / (1 + x) * x ** (mpmath.mpc(7.25, 2) - 1),
                [0, 1],
            )
        )
        assert abs(val - ref) < max(1e-11, 10 * err)

    def test_error_estimates_conservative_closed_forms(self):
        # integrands with closed forms: M[1/(x+1)-style] via F1 at large N is
        # tiny; use F0 (harmonic numbers) and F2 (zeta2 S1 - S21) instead
        for N in (2, 5, 12):
            val, err = mellin_numeric("F0", float(N))
            exact = float(eval_exact(IndexVector([1]), N - 1))
            assert abs(val - exact) <= max(err, 1e-12)

    def test_re_n_positive_required(self):
        with pytest.raises(UsageError):
            mellin_numeric("F1", -0.5)

    def test_registry_only_rejected(self):
        with pytest.raises(CapabilityError):
            mellin_numeric("B401", 3.0)

    def test_spec_tightening(self):
        spec = QuadratureSpec(rel_tol=1e-12, abs_tol=1e-14)
        val, err = mellin_numeric("F3", 3.0, spec=spec)
        assert err < 1e-11

    def test_nonconvergence_reports_best_estimate(self):
        from hsums import ResourceBudgetError

        spec = QuadratureSpec(rel_tol=1e-15, abs_tol=1e-18, max_subdivisions=20)
        with pytest.raises(ResourceBudgetError) as info:
            mellin_numeric("F3", 3.0, spec=spec)
        value, err = info.value.best_estimate
        assert abs(value - 0.19142881274399) < 1e-9
