"""Factorial series and asymptotic series with exact rational coefficients.

A Mellin transform Omega(z) = integral_0^1 t^(z-1) phi(t) dt whose integrand
is analytic at t = 1 expands, with phi(1-t) = sum_k a_k t^k, into the
factorial series

    Omega(z) = sum_{k>=0} a_k * k! / (z (z+1) ... (z+k)),

term k being a_k * B(z, k+1).  The series converges for Re z > 0 here (the
coefficient sequences in this package are summable) and its truncation error
at moderate order is controlled by k^(-Re z), so evaluation is performed at
large Re z and shifted back by the per-function recursions in
:mod:`hsums.continuation`.

The same coefficients convert exactly into an asymptotic expansion
sum_j c_j z^(-j) by expanding each k!/(z)_{k+1} in powers of 1/z.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import CapabilityError, PoleError

SeriesCoeffs = list[Fraction]


# -- rational power-series helpers (coefficient lists in t) -----------------


def series_mul(a: SeriesCoeffs, b: SeriesCoeffs, order: int) -> SeriesCoeffs:
    out = [Fraction(0)] * order
    for i, ai in enumerate(a[:order]):
        if ai == 0:
            continue
        for j, bj in enumerate(b[: order - i]):
            if bj != 0:
                out[i + j] += ai * bj
    return out


def polylog_series(k: int, order: int) -> SeriesCoeffs:
    """Li_k(t) = sum_{n>=1} t^n / n^k."""
    return [Fraction(0)] + [Fraction(1, n**k) for n in range(1, order)]


def geometric_half_series(order: int) -> SeriesCoeffs:
    """1/(2-t) = sum_k t^k / 2^(k+1)."""
    return [Fraction(1, 2 ** (k + 1)) for k in range(order)]


def log_one_minus_half_series(order: int) -> SeriesCoeffs:
    """ln(1 - t/2) = -sum_{k>=1} (t/2)^k / k."""
    return [Fraction(0)] + [Fraction(-1, k * 2**k) for k in range(1, order)]


# -- factorial series --------------------------------------------------------


@dataclass(frozen=True)
class FactorialSeries:
    """Coefficients a_k of sum a_k k!/(z)_{k+1}, valid for Re z > z_min."""

    coeffs: tuple[Fraction, ...]
    z_min: float = 0.0
    name: str = ""
    _float_coeffs: tuple[float, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(
            self, "_float_coeffs", tuple(float(c) for c in self.coeffs)
        )

    @classmethod
    def from_taylor(cls, coeffs, z_min: float = 0.0, name: str = "") -> "FactorialSeries":
        """Build from the Taylor coefficients a_k of phi(1-t) at t = 0."""
        return cls(tuple(Fraction(c) for c in coeffs), z_min=z_min, name=name)

    def evaluate(
        self,
        z,
        terms: int | None = None,
        derivative: int = 0,
        tol: float = 1e-17,
    ) -> tuple[complex, float]:
        """(value, error estimate) of the series or its z-derivative at z.

        The running Pochhammer factor u_k = k!/(z)_{k+1} advances by
        u_{k+1} = u_k (k+1)/(z+k+1); derivatives use d/dz u = -u T and
        d2/dz2 u = u (T^2 + T') with T = sum 1/(z+j).  The error estimate is
        the magnitude of the last added term.
        """
        if derivative not in (0, 1, 2):
            raise ValueError("derivative order must be 0, 1 or 2")
        z = complex(z)
        if z.imag == 0.0 and z.real <= 0.0 and z.real == round(z.real):
            raise PoleError(
                f"factorial series has a pole at {z}", location=complex(round(z.real))
            )
        if z.real <= self.z_min:
            warnings.warn(
                f"factorial series {self.name or ''} evaluated at Re z = {z.real}"
                f" <= z_min = {self.z_min}; the series diverges there",
                stacklevel=2,
            )
        n_terms = terms if terms is not None else len(self.coeffs)
        n_terms = min(n_terms, len(self.coeffs))
        u = 1.0 / z
        T = 1.0 / z
        T2 = 1.0 / (z * z)
        total = 0.0 + 0.0j
        last = 0.0
        scale = 0.0
        for k in range(n_terms):
            ak = self._float_coeffs[k]
            if ak != 0.0:
                if derivative == 0:
                    term = ak * u
                elif derivative == 1:
                    term = -ak * u * T
                else:
                    term = ak * u * (T * T + T2)
                total += term
                last = abs(term)
                scale = max(scale, abs(total))
                if last < tol * max(scale, 1e-300) and k > 4:
                    break
            zk = z + (k + 1)
            u = u * (k + 1) / zk
            T = T + 1.0 / zk
            T2 = T2 + 1.0 / (zk * zk)
        return total, last


# -- asymptotic series --------------------------------------------------------


@dataclass(frozen=True)
class AsymptoticSeries:
    """Expansion sum_j coeffs[j-1] * z^(-j), j = 1..len(coeffs).

    ``closed_terms`` names closed-form companions (psi/beta pieces) that a
    full-function expansion carries alongside the pure power part; they are
    informational here and evaluated by the continuation engine.
    Evaluation refuses |z| < min_abs_z: below that the truncated tail is no
    longer under control.
    """

    coeffs: tuple[Fraction, ...]
    closed_terms: tuple[str, ...] = ()
    min_abs_z: float = 10.0

    def evaluate(self, z) -> tuple[complex, float]:
        """(value, error estimate); stops at the first non-decreasing term
        (asymptotic-series stopping), estimate = first omitted term."""
        z = complex(z)
        if abs(z) < self.min_abs_z:
            raise CapabilityError(
                f"asymptotic series needs |z| >= {self.min_abs_z}, got |z| = {abs(z):.3g}"
            )
        total = 0.0 + 0.0j
        prev = math.inf
        omitted = 0.0
        zpow = z
        for c in self.coeffs:
            term = float(c) / zpow
            mag = abs(term)
            if mag > prev:
                omitted = mag
                break
            total += term
            if mag > 0.0:
                prev = mag
            omitted = mag
            zpow *= z
        return total, omitted


def factorial_to_asymptotic(
    fs: FactorialSeries, order: int, min_abs_z: float = 10.0
) -> AsymptoticSeries:
    """Exact conversion of a factorial series to its 1/z expansion.

    Each term a_k k!/(z)_{k+1} = a_k k! u^{k+1} prod_{j=1..k} (1+j u)^{-1}
    with u = 1/z is expanded to the requested order in u; only k < order
    contributes.  All arithmetic is exact.
    """
    c = [Fraction(0)] * (order + 1)
    for k in range(min(len(fs.coeffs), order)):
        ak = fs.coeffs[k]
        if ak == 0:
            continue
        deg = order - (k + 1)
        poly = [Fraction(0)] * (deg + 1)
        poly[0] = Fraction(math.factorial(k))
        for j in range(1, k + 1):
            new = [Fraction(0)] * (deg + 1)
            for i, pi in enumerate(poly):
                if pi == 0:
                    continue
                jp = Fraction(1)
                for d in range(deg + 1 - i):
                    new[i + d] += pi * jp
                    jp *= -j
            poly = new
        for d, pd in enumerate(poly):
            c[k + 1 + d] += ak * pd
    return AsymptoticSeries(coeffs=tuple(c[1:]), min_abs_z=min_abs_z)
