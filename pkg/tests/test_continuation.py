"""Analytic continuation: registry, branch mapping, recursions, evaluation,
derivatives, and the structural identities tying everything together."""

import cmath
import math
import random
import warnings
from fractions import Fraction

import pytest

from hsums import (
    AccuracyWarning,
    CapabilityError,
    EvalCache,
    IndexVector,
    PoleError,
    asymptotic_coeffs,
    beta_fn,
    differentiate,
    evaluate_complex,
    eval_exact,
    get_function,
    map_branch,
    mellin_numeric,
    psi,
    recursion_shift,
    registry_list,
    taylor_at_one,
)
from hsums.constants import GAMMA_E, LN2, ZETA2, ZETA3
from hsums.continuation import _series

CACHE = EvalCache()


def S(text, N):
    return eval_exact(IndexVector.parse(text), N, cache=CACHE)


# -- exact integer references (closed forms over harmonic sums) -------------


def f0_reference(N: int) -> float:
    return float(S("1", N - 1))


def f1_reference(N: int) -> float:
    n = N - 1
    sm1 = S("-1", n)
    s1 = S("1", n)
    s1m1 = S("1,-1", n)
    return (-1.0) ** (N - 1) * (
        0.5 * LN2**2 + LN2 * float(sm1) - LN2 * float(s1) - float(s1m1)
    )


def f2_reference(N: int) -> float:
    n = N - 1
    return ZETA2 * float(S("1", n)) - float(S("2,1", n))


def f3_reference(N: int) -> float:
    f3_at_1 = ZETA2 * LN2 - 0.625 * ZETA3
    acc = f3_at_1
    for i in range(1, N):
        acc += (-1.0) ** i * (ZETA2 - float(S("1", i)) / i) / i
    return (-1.0) ** (N - 1) * acc


class TestRegistry:
    def test_weight_filters(self):
        w2 = registry_list(weight=2)
        assert [e.display for e in w2] == ["ln(1+x)/(x+1)"]
        w3 = registry_list(weight=3)
        assert {e.id for e in w3} == {"F2", "F3"}
        assert {e.display for e in w3} == {"Li2(x)/(x-1)+", "Li2(x)/(x+1)"}

    def test_weight_six_registry_only(self):
        entries = registry_list(weight=6, support="registry")
        numerators = {e.numerator for e in entries}
        assert "A1(x)" in numerators
        assert "A2(x)" in numerators
        assert "A3(x)" in numerators
        assert "H[0,-1,0,1,1](x)" in numerators

    def test_continuable_set(self):
        ids = {e.id for e in registry_list(support="continuable")}
        assert ids == {"F0", "F1", "F2", "F3"}

    def test_plus_regularization_convention(self):
        for e in registry_list():
            assert e.plus_regularized == (e.denominator_sign < 0)

    def test_aliases(self):
        assert get_function("1/(x-1)+").id == "F0"
        assert get_function("Li2(x)/(x+1)").id == "F3"

    def test_order_counts_present(self):
        from hsums.registry import ORDER_COUNTS

        assert ORDER_COUNTS["order3_wilson"] == 35
        assert ORDER_COUNTS["order3_anomalous_dim"] == 15


class TestBranchMapping:
    def test_f3_mapping(self):
        plan = map_branch("F3")
        assert "Li2(x) -> -Li2(1-x) - ln(x)*ln(1-x) + zeta2" == plan.mapping
        labels = [lab for lab, _, _ in plan.analytic]
        assert "f3_reflected" in labels

    def test_f1_identity_plus_ln2_split(self):
        plan = map_branch("F1")
        assert plan.closed == ("ln2 * beta(z)",)

    def test_f0_identity(self):
        plan = map_branch("F0")
        assert plan.analytic == ()
        assert "psi(z) + gamma_E" in plan.closed

    def test_registry_only_rejected(self):
        with pytest.raises(CapabilityError):
            map_branch("B401")

    def test_raw_numerator_branch_point(self):
        with pytest.raises(CapabilityError):
            taylor_at_one("F3", 5, mapped=False)


class TestTaylorAtOne:
    def test_f3_leading_coeffs(self):
        coeffs = taylor_at_one("F3", 4)
        assert coeffs == [0, Fraction(1, 2), Fraction(3, 8), Fraction(35, 144)]

    def test_f2_coeffs(self):
        coeffs = taylor_at_one("F2", 4)
        assert coeffs == [1, Fraction(1, 4), Fraction(1, 9), Fraction(1, 16)]

    def test_f1_series_sums_to_function(self):
        # eta(t) = ln(1-t/2)/(2-t) at t = 0.3, numerically
        coeffs = taylor_at_one("F1", 60)
        t = 0.3
        series = sum(float(c) * t**k for k, c in enumerate(coeffs))
        assert series == pytest.approx(math.log(1 - t / 2) / (2 - t), abs=1e-14)


class TestRecursionShift:
    def test_f3_displayed_relation(self):
        # F3(3) + F3(2) = (1/2)[zeta2 - (psi(3)+gamma)/2]
        lhs = evaluate_complex("F3", 3.0) + evaluate_complex("F3", 2.0)
        rhs = 0.5 * (ZETA2 - (psi(3.0).real + GAMMA_E) / 2.0)
        assert abs(lhs - rhs) < 1e-12

    def test_f0_harmonic_step(self):
        # S1(z) - S1(z-1) = 1/z, i.e. F0(z+1) - F0(z) = 1/z
        for z in (1.0, 4.5, 2 + 3j):
            ident = recursion_shift("F0", z)
            assert ident.epsilon == 1
            assert abs(ident.inhomogeneity - 1.0 / complex(z)) < 1e-15

    def test_shift_identity_residuals(self):
        rng = random.Random(37)
        for fnid in ("F0", "F1", "F2", "F3"):
            for _ in range(25):
                z = complex(rng.uniform(1, 10), rng.uniform(-5, 5))
                assert recursion_shift(fnid, z).residual() < 1e-12

    def test_f1_shift_against_quadrature(self):
        z = 1.0
        ident = recursion_shift("F1", z)
        f1_z, _ = mellin_numeric("F1", z)
        f1_z1, _ = mellin_numeric("F1", z + 1)
        assert abs(f1_z1 - ident.predict_next(f1_z)) < 1e-10


class TestEvaluateComplex:
    def test_f0_trivial(self):
        assert abs(evaluate_complex("F0", 2.0) - 1.0) < 1e-12

    @pytest.mark.parametrize("N", range(5, 41))
    def test_f0_integer(self, N):
        val = evaluate_complex("F0", float(N)).real
        ref = f0_reference(N)
        assert abs(val - ref) <= 1e-10 * max(abs(ref), 1.0)

    @pytest.mark.parametrize("N", range(5, 41))
    def test_f1_integer(self, N):
        val = evaluate_complex("F1", float(N)).real
        ref = f1_reference(N)
        assert abs(val - ref) <= 1e-10 * max(abs(ref), 1.0)

    @pytest.mark.parametrize("N", range(5, 41))
    def test_f2_integer(self, N):
        val = evaluate_complex("F2", float(N)).real
        ref = f2_reference(N)
        assert abs(val - ref) <= 1e-10 * max(abs(ref), 1.0)

    @pytest.mark.parametrize("N", range(5, 41))
    def test_f3_integer(self, N):
        val = evaluate_complex("F3", float(N)).real
        ref = f3_reference(N)
        assert abs(val - ref) <= 1e-10 * max(abs(ref), 1.0)

    def test_f3_at_one_vs_quadrature(self):
        val = evaluate_complex("F3", 1.0)
        quad, est = mellin_numeric("F3", 1.0)
        assert abs(val - quad) < max(1e-10, 10 * est)

    def test_complex_points_vs_quadrature(self):
        for fnid in ("F0", "F1", "F2", "F3"):
            for z in (3.5, 7.25 + 2j):
                val = evaluate_complex(fnid, z)
                quad, est = mellin_numeric(fnid, z)
                assert abs(val - quad) < max(1e-10, 10 * est)

    def test_pole_error(self):
        for fnid in ("F0", "F3"):
            with pytest.raises(PoleError):
                evaluate_complex(fnid, 0.0)
            with pytest.raises(PoleError):
                evaluate_complex(fnid, -3.0)

    def test_near_pole_warning(self):
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            evaluate_complex("F0", -2.0 + 1e-5)
        assert any(issubclass(w.category, AccuracyWarning) for w in caught)

    def test_registry_only_rejected(self):
        with pytest.raises(CapabilityError):
            evaluate_complex("B612", 3.0)


class TestDifferentiate:
    def test_s2_closure(self):
        # S2(N) = -d/dN S1(N) + zeta2 with S1(N) = F0(N+1)
        for N in range(3, 21):
            ds1 = differentiate("F0", float(N + 1)).real
            s2 = float(S("2", N))
            assert abs(-ds1 + ZETA2 - s2) < 1e-9

    def test_finite_difference_agreement(self):
        h = 1e-5
        for fnid in ("F0", "F1", "F2", "F3"):
            for z in (2.5, 6.0, 3 + 1j):
                d = differentiate(fnid, z)
                fd = (evaluate_complex(fnid, z + h) - evaluate_complex(fnid, z - h)) / (
                    2 * h
                )
                assert abs(d - fd) < 1e-7 * max(1.0, abs(d))

    def test_derivative_against_quadrature(self):
        # d/dz M[f](z) = M[ln(x) f](z); cross-check F1' by differentiating the
        # quadrature value numerically at high accuracy
        z = 4.0
        d = differentiate("F1", z).real
        h = 1e-4
        q1, _ = mellin_numeric("F1", z + h)
        q2, _ = mellin_numeric("F1", z - h)
        assert abs(d - (q1 - q2).real / (2 * h)) < 1e-6


class TestAsymptotics:
    def test_reflected_dilog_coefficients(self):
        asym = asymptotic_coeffs("F3:reflected", 6)
        assert list(asym.coeffs) == [
            0,
            Fraction(1, 2),
            Fraction(1, 4),
            Fraction(-7, 24),
            Fraction(-1, 3),
            Fraction(73, 120),
        ]

    def test_reflected_series_vs_quadrature_large_z(self):
        # the reflected component is itself a Mellin transform; at large z the
        # asymptotic and factorial forms must agree with each other
        fs = _series("f3_reflected")
        asym = asymptotic_coeffs("F3:reflected", 14)
        for z in (30.0, 55.0, 40 + 10j):
            a, _ = asym.evaluate(z)
            f, _ = fs.evaluate(z)
            assert abs(a - f) < 1e-10

    def test_full_functions_factorial_vs_quadrature_large_z(self):
        for fnid in ("F1", "F2", "F3"):
            val = evaluate_complex(fnid, 30.0)
            quad, est = mellin_numeric(fnid, 30.0)
            assert abs(val - quad) < max(1e-10, 10 * est)

    def test_asymptotic_error_decreases_with_order(self):
        fs = _series("f3_reflected")
        z = 35.0
        truth, _ = fs.evaluate(z)
        errs = []
        for order in (4, 6, 9, 12):
            val, _ = asymptotic_coeffs("F3:reflected", order).evaluate(z)
            errs.append(abs(val - truth))
        assert errs == sorted(errs, reverse=True)

    def test_unknown_component(self):
        with pytest.raises(CapabilityError):
            asymptotic_coeffs("F9:nope", 5)


class TestStructuralIdentities:
    def test_log_split_mellin_identity(self):
        # M[ln(1-x^2)](N) = M[ln(1-x)](N) + M[ln(1+x)](N) with
        # M[ln(1-x)](N) = -S1(N)/N and M[ln(1+x)](N) = (ln2 - beta(N+1))/N,
        # the left side computed by direct quadrature.
        from scipy.integrate import quad

        for N in range(2, 21):
            lhs, _ = quad(
                lambda x: math.log(1.0 - x * x) * x ** (N - 1), 0, 1, epsabs=1e-13
            )
            rhs = -float(S("1", N)) / N + (LN2 - beta_fn(N + 1.0).real) / N
            assert abs(lhs - rhs) < 1e-10

    def test_dilog_duplication_corrected_factor(self):
        # Li_k(x^2) = 2^(k-1) [Li_k(x) + Li_k(-x)] for k = 2, 3
        from hsums.mellin import _li2, _li3

        for k, li in ((2, _li2), (3, _li3)):
            for x in [0.05 * i for i in range(1, 20)]:
                lhs = li(x * x)
                rhs = 2.0 ** (k - 1) * (li(x) + li(-x))
                assert abs(lhs - rhs) < 1e-12
