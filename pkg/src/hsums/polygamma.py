"""Polygamma psi^(k) and the half-argument beta function on the complex plane.

Evaluation strategy: shift the argument right with

    psi^(k)(z+1) = psi^(k)(z) + (-1)^k k! / z^(k+1)

until Re z >= SHIFT_THRESHOLD, then apply the standard asymptotic expansion
with Bernoulli coefficients through order ASYMPTOTIC_ORDER.  With the
defaults (threshold 12, order 14) the relative error stays below 1e-12 for
k <= 3 in double precision; both knobs are configurable per call.

Arguments are only ever shifted right, never reflected; a request exactly at
a non-positive integer raises :class:`PoleError` carrying the location.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction

from .constants import LN2
from .errors import PoleError

SHIFT_THRESHOLD = 12.0
ASYMPTOTIC_ORDER = 14

#: B_2, B_4, ..., B_20 (even-index Bernoulli numbers).
_BERNOULLI_EVEN = (
    Fraction(1, 6),
    Fraction(-1, 30),
    Fraction(1, 42),
    Fraction(-1, 30),
    Fraction(5, 66),
    Fraction(-691, 2730),
    Fraction(7, 6),
    Fraction(-3617, 510),
    Fraction(43867, 798),
    Fraction(-174611, 330),
)

MAX_DERIVATIVE = 6  # guard only; accuracy is characterized for k <= 3


def _pole_at(z: complex) -> complex | None:
    if z.imag == 0.0 and z.real <= 0.0 and z.real == round(z.real):
        return complex(round(z.real), 0.0)
    return None


def psi(z, k: int = 0, shift_threshold: float = SHIFT_THRESHOLD,
        order: int = ASYMPTOTIC_ORDER) -> complex:
    """k-th derivative of the digamma function at complex z."""
    if not 0 <= k <= MAX_DERIVATIVE:
        raise ValueError(f"derivative order must be in 0..{MAX_DERIVATIVE}, got {k}")
    if order // 2 > len(_BERNOULLI_EVEN):
        raise ValueError(f"asymptotic order {order} exceeds the Bernoulli table")
    z = complex(z)
    pole = _pole_at(z)
    if pole is not None:
        raise PoleError(f"psi^({k}) has a pole at {pole}", location=pole)

    kfac = math.factorial(k)
    corr = 0.0 + 0.0j
    while z.real < shift_threshold:
        corr -= ((-1) ** k) * kfac / z ** (k + 1)
        z += 1.0

    if k == 0:
        res = cmath.log(z) - 1.0 / (2.0 * z)
        zpow = z * z
        for n in range(1, order // 2 + 1):
            b = _BERNOULLI_EVEN[n - 1]
            res -= (b.numerator / b.denominator) / (2 * n) / zpow
            zpow *= z * z
    else:
        res = math.factorial(k - 1) / z**k + kfac / (2.0 * z ** (k + 1))
        for n in range(1, order // 2 + 1):
            b = _BERNOULLI_EVEN[n - 1]
            coeff = (b.numerator / b.denominator) * (
                math.factorial(2 * n + k - 1) / math.factorial(2 * n)
            )
            res += coeff / z ** (2 * n + k)
        res *= (-1) ** (k - 1)
    return res + corr


def beta_fn(z, k: int = 0) -> complex:
    """k-th derivative of beta(z) = (psi((z+1)/2) - psi(z/2)) / 2.

    Equals the alternating series sum_{j>=0} (-1)^j/(z+j) for Re z > 0 and
    continues it to the plane; poles sit at the non-positive integers.
    """
    z = complex(z)
    pole = _pole_at(z)
    if pole is not None:
        raise PoleError(f"beta^({k}) has a pole at {pole}", location=pole)
    scale = 0.5 ** (k + 1)
    return scale * (psi((z + 1.0) / 2.0, k) - psi(z / 2.0, k))


def duplication_check(z) -> float:
    """Residual |psi(z/2) - psi(z) + beta(z) + ln 2|; should be ~1e-16.

    Diagnostic for the half-argument relation tying psi at z/2 to psi and
    beta at z.
    """
    z = complex(z)
    return abs(psi(z / 2.0) - psi(z) + beta_fn(z) + LN2)
