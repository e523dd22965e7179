"""Analytic continuation of the continuable basic-function Mellin transforms.

Every continuable transform F(z) is meromorphic with poles at the
non-positive integers, obeys a one-step recursion

    F(z+1) = epsilon * F(z) + R(z),      epsilon in {+1, -1},

with an inhomogeneity R built from psi/beta/constants, and is evaluated as

    closed psi/beta pieces  +  factorial series of the branch-mapped,
                               analytic-at-x=1 numerator components.

The factorial series needs large Re z for fast truncation, so evaluation
shifts the argument right to Re z >= Z_BIG with the recursion and folds the
shifts back (|epsilon| = 1, so no error amplification).  Derivatives are
analytic throughout: series are differentiated term by term, closed pieces
via higher polygamma, and the recursion is differentiated for the folding.

Component inventory (t = 1 - x everywhere; series coefficients are exact
rationals):

* F0 = M[1/(x-1)+]:        psi(z) + gamma_E            (no series needed)
* F1 = M[ln(1+x)/(x+1)]:   Omega[ln(1-t/2)/(2-t)](z) + ln2*beta(z)
* F2 = M[Li2(x)/(x-1)+]:   Omega[Li2(t)/t](z)
                           + (psi(z)+gamma_E)(zeta2+psi'(z)) - psi''(z)/2 - 2*zeta3
* F3 = M[Li2(x)/(x+1)]:    -Omega[Li2(t)/(2-t)](z) + d/dz Omega[ln(1-t/2)/(2-t)](z)
                           + psi'(z)*beta(z) + (psi(z)+gamma_E)*beta'(z)
                           - beta''(z) + zeta2*beta(z)

The F2/F3 forms come from the dilogarithm reflection
Li2(x) = -Li2(1-x) - ln(x)ln(1-x) + zeta2: the reflected part is analytic at
x = 1 (factorial series), the ln(x)ln(1-x) part reduces to the z-derivative
of M[ln(1-x)/denominator], which closes over F1 resp. psi derivatives.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .constants import GAMMA_E, LN2, ZETA2, ZETA3
from .errors import AccuracyWarning, CapabilityError, PoleError
from .polygamma import beta_fn, psi
from .registry import CONTINUABLE, get_function, registry_list  # noqa: F401 (re-export)
from .series import (
    AsymptoticSeries,
    FactorialSeries,
    factorial_to_asymptotic,
    geometric_half_series,
    log_one_minus_half_series,
    polylog_series,
    series_mul,
)

#: Real part the argument is shifted to before series evaluation.
Z_BIG = 20.0
#: Precomputed series order; truncation error at Re z = Z_BIG is ~1e-26.
SERIES_ORDER = 90
#: Distance to a non-positive integer below which results carry a warning.
NEAR_POLE_DISTANCE = 1e-3

_CONTINUABLE_IDS = ("F0", "F1", "F2", "F3")


@lru_cache(maxsize=None)
def _series(label: str) -> FactorialSeries:
    order = SERIES_ORDER
    if label == "f2_analytic":  # Li2(t)/t
        coeffs = [Fraction(1, (k + 1) ** 2) for k in range(order)]
    elif label == "f3_reflected":  # Li2(t)/(2-t)
        coeffs = series_mul(polylog_series(2, order), geometric_half_series(order), order)
    elif label == "f1_analytic":  # ln(1-t/2)/(2-t)
        coeffs = series_mul(
            log_one_minus_half_series(order), geometric_half_series(order), order
        )
    else:
        raise AssertionError(f"unknown series label {label}")
    return FactorialSeries.from_taylor(coeffs, z_min=0.0, name=label)


@dataclass(frozen=True)
class BranchPlan:
    """Decomposition of a continuable transform after branch mapping.

    ``analytic`` lists (label, derivative order, sign) factorial-series
    components of the big-argument evaluation; ``closed`` lists the psi/beta
    pieces in human-readable form; ``mapping`` describes the numerator
    transformation applied.
    """

    fnid: str
    mapping: str
    analytic: tuple[tuple[str, int, int], ...]
    closed: tuple[str, ...]

    def series(self, label: str) -> FactorialSeries:
        if all(label != lab for lab, _, _ in self.analytic):
            raise CapabilityError(f"{self.fnid} has no series component {label!r}")
        return _series(label)


_PLANS = {
    "F0": BranchPlan(
        fnid="F0",
        mapping="identity numerator; the transform is psi(z) + gamma_E",
        analytic=(),
        closed=("psi(z) + gamma_E",),
    ),
    "F1": BranchPlan(
        fnid="F1",
        mapping="ln(1+x) = ln2 + ln((1+x)/2); the ln2 part closes to ln2*beta(z)",
        analytic=(("f1_analytic", 0, +1),),
        closed=("ln2 * beta(z)",),
    ),
    "F2": BranchPlan(
        fnid="F2",
        mapping="Li2(x) -> -Li2(1-x) - ln(x)*ln(1-x) + zeta2",
        analytic=(("f2_analytic", 0, +1),),
        closed=(
            "(psi(z)+gamma_E) * (zeta2 + psi'(z))",
            "- psi''(z)/2",
            "- 2*zeta3",
        ),
    ),
    "F3": BranchPlan(
        fnid="F3",
        mapping="Li2(x) -> -Li2(1-x) - ln(x)*ln(1-x) + zeta2",
        analytic=(("f3_reflected", 0, -1), ("f1_analytic", 1, +1)),
        closed=(
            "psi'(z) * beta(z)",
            "(psi(z)+gamma_E) * beta'(z)",
            "- beta''(z)",
            "zeta2 * beta(z)",
        ),
    ),
}


def _require_continuable(fnid: str) -> str:
    fn = get_function(fnid)
    if fn.support != CONTINUABLE:
        raise CapabilityError(
            f"{fn.id} ({fn.display}) is registry metadata only; continuation "
            f"covers {', '.join(_CONTINUABLE_IDS)}"
        )
    return fn.id


def map_branch(fnid: str) -> BranchPlan:
    """Branch-mapped decomposition of a continuable function's numerator."""
    return _PLANS[_require_continuable(fnid)]


def taylor_at_one(fnid_or_phi: str, order: int, mapped: bool = True) -> list[Fraction]:
    """Taylor coefficients a_k of phi(1-t) at t = 0, exact rationals.

    For a continuable function id the series of its branch-mapped analytic
    component is returned (``mapped=False`` reports, via CapabilityError,
    when the raw numerator is blocked by a branch point at x = 1).  The
    descriptors "1" and "x" expand trivial numerators for testing.
    """
    if fnid_or_phi == "1":
        return [Fraction(1)] + [Fraction(0)] * (order - 1)
    if fnid_or_phi == "x":
        out = [Fraction(0)] * order
        out[0] = Fraction(1)
        if order > 1:
            out[1] = Fraction(-1)
        return out
    fnid = _require_continuable(fnid_or_phi)
    if not mapped and fnid in ("F2", "F3"):
        raise CapabilityError(
            f"the raw numerator of {fnid} has a branch point at x = 1; "
            "apply map_branch first"
        )
    if fnid == "F0":
        return taylor_at_one("1", order)
    label = _PLANS[fnid].analytic[0][0]
    coeffs = list(_series(label).coeffs[:order])
    coeffs += [Fraction(0)] * (order - len(coeffs))
    return coeffs


# ---------------------------------------------------------------------------
# Recursion data


@dataclass(frozen=True)
class ShiftIdentity:
    """Ingredients of F(z+1) = epsilon * F(z) + inhomogeneity."""

    fnid: str
    z: complex
    epsilon: int
    inhomogeneity: complex

    def predict_next(self, value_at_z: complex) -> complex:
        return self.epsilon * value_at_z + self.inhomogeneity

    def residual(self) -> float:
        """|F(z+1) - (epsilon F(z) + R(z))| with both sides evaluated here."""
        lhs = evaluate_complex(self.fnid, self.z + 1.0)
        rhs = self.predict_next(evaluate_complex(self.fnid, self.z))
        return abs(lhs - rhs)


_EPSILON = {"F0": 1, "F1": -1, "F2": 1, "F3": -1}


def _inhom(fnid: str, z: complex, deriv: int = 0) -> complex:
    """R(z) resp. R'(z) of the one-step recursion."""
    if fnid == "F0":
        return 1.0 / z if deriv == 0 else -1.0 / (z * z)
    if fnid == "F1":
        if deriv == 0:
            return (LN2 - beta_fn(z + 1.0)) / z
        return -(LN2 - beta_fn(z + 1.0)) / (z * z) - beta_fn(z + 1.0, 1) / z
    # F2 and F3 share R(z) = zeta2/z - (psi(z+1)+gamma)/z^2
    s1 = psi(z + 1.0) + GAMMA_E
    if deriv == 0:
        return ZETA2 / z - s1 / (z * z)
    return -ZETA2 / (z * z) - psi(z + 1.0, 1) / (z * z) + 2.0 * s1 / (z**3)


def recursion_shift(fnid: str, z) -> ShiftIdentity:
    """One-step shift identity at z, with both sides' ingredients."""
    fnid = _require_continuable(fnid)
    z = complex(z)
    _check_pole(z, warn=False)
    _check_pole(z + 1.0, warn=False)
    return ShiftIdentity(
        fnid=fnid, z=z, epsilon=_EPSILON[fnid], inhomogeneity=_inhom(fnid, z)
    )


# ---------------------------------------------------------------------------
# Evaluation


def _check_pole(z: complex, warn: bool = True) -> None:
    nearest = round(z.real)
    if nearest > 0:
        return
    dist = abs(z - nearest)
    if dist == 0.0:
        raise PoleError(
            f"evaluation requested at the pole z = {complex(nearest)}",
            location=complex(nearest),
        )
    if warn and dist < NEAR_POLE_DISTANCE:
        warnings.warn(
            f"argument {z} lies within {NEAR_POLE_DISTANCE} of the pole at "
            f"{nearest}; accuracy is degraded",
            AccuracyWarning,
            stacklevel=3,
        )


def _closed_pieces(fnid: str, z: complex, deriv: int) -> complex:
    if fnid == "F0":
        return psi(z, deriv) + (GAMMA_E if deriv == 0 else 0.0)
    if fnid == "F1":
        return LN2 * beta_fn(z, deriv)
    if fnid == "F2":
        s1 = psi(z) + GAMMA_E
        if deriv == 0:
            return s1 * (ZETA2 + psi(z, 1)) - psi(z, 2) / 2.0 - 2.0 * ZETA3
        return psi(z, 1) * (ZETA2 + psi(z, 1)) + s1 * psi(z, 2) - psi(z, 3) / 2.0
    if fnid == "F3":
        s1 = psi(z) + GAMMA_E
        if deriv == 0:
            return (
                psi(z, 1) * beta_fn(z)
                + s1 * beta_fn(z, 1)
                - beta_fn(z, 2)
                + ZETA2 * beta_fn(z)
            )
        return (
            psi(z, 2) * beta_fn(z)
            + 2.0 * psi(z, 1) * beta_fn(z, 1)
            + s1 * beta_fn(z, 2)
            - beta_fn(z, 3)
            + ZETA2 * beta_fn(z, 1)
        )
    raise AssertionError(fnid)


def _eval_big(fnid: str, z: complex, deriv: int) -> complex:
    total = _closed_pieces(fnid, z, deriv)
    for label, base_deriv, sign in _PLANS[fnid].analytic:
        value, _ = _series(label).evaluate(z, derivative=base_deriv + deriv)
        total += sign * value
    return total


def _evaluate(fnid: str, z: complex, deriv: int) -> complex:
    fnid = _require_continuable(fnid)
    z = complex(z)
    _check_pole(z)
    shifts = max(0, math.ceil(Z_BIG - z.real))
    value = _eval_big(fnid, z + shifts, deriv)
    eps = _EPSILON[fnid]
    for j in range(shifts - 1, -1, -1):
        value = eps * (value - _inhom(fnid, z + j, deriv))
    return value


def evaluate_complex(fnid: str, z) -> complex:
    """F(z) for a continuable function at complex z.

    Target accuracy is 1e-10 relative on the Re z >= 1 band; arguments
    within 1e-3 of a non-positive integer produce a value plus an
    :class:`AccuracyWarning`, the poles themselves raise :class:`PoleError`.
    """
    return _evaluate(fnid, z, 0)


def differentiate(fnid: str, z) -> complex:
    """dF/dz at z, by analytic differentiation (no finite differences)."""
    return _evaluate(fnid, z, 1)


# ---------------------------------------------------------------------------
# Asymptotics

_COMPONENT_ALIASES = {
    "F3:reflected": "f3_reflected",
    "F1:analytic": "f1_analytic",
    "F2:analytic": "f2_analytic",
}


def asymptotic_coeffs(component, order: int = 12) -> AsymptoticSeries:
    """Exact 1/z expansion of a factorial-series component.

    ``component`` is one of "F3:reflected", "F1:analytic", "F2:analytic",
    or an explicit :class:`FactorialSeries`.  Coefficients come from the
    exact factorial-to-asymptotic conversion, so any order is available.
    """
    if isinstance(component, FactorialSeries):
        return factorial_to_asymptotic(component, order)
    key = _COMPONENT_ALIASES.get(component)
    if key is None:
        raise CapabilityError(
            f"no pure power-series asymptotic part registered for {component!r}"
        )
    return factorial_to_asymptotic(_series(key), order)
