"""Evaluation of nested harmonic sums at integer argument.

The sums are defined recursively:

    S_{b,a...}(N) = sum_{k=1..N} sign(b)^k / k^|b| * S_{a...}(k),   S_{}(k) = 1,

with S(0) = 0 for every nonempty index (empty-sum convention).

Three evaluators live here:

* :func:`eval_exact` - exact rationals via the recursion, prefix-shared
  per suffix level, optionally memoized across calls through
  :class:`EvalCache`.
* :func:`eval_oracle` - an independent brute-force check that unfolds the
  full nested sum ``sum_{N >= k1 >= k2 >= ... >= kd >= 1}`` with explicit
  nested loops and no sharing with the recursion above.  All arithmetic is
  exact (integer numerators over the common denominator lcm(1..N)^weight).
* :func:`eval_float` - floating evaluation with a conservative error bound,
  in double precision or, for ``precision > 53`` bits, in ``decimal``
  arithmetic.

:func:`limit_value` estimates the N -> infinity limit (a multiple zeta
value for convergent sums) from a geometric ladder of arguments with exact
elimination of 1/N^m * ln(N)^p tail terms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction

from .constants import LN2_FRACTION
from .errors import ResourceBudgetError, UsageError
from .indices import IndexVector

#: Default work budget for eval_exact, measured as weight * N.
DEFAULT_BUDGET = 5_000_000

_EPS = 2.0 ** -52


class EvalCache:
    """Shared memo for :func:`eval_exact`.

    Maps each index suffix to the prefix list [S(0), S(1), ..., S(Nmax)]
    computed so far; lists only ever grow, so concurrent readers are safe.
    """

    def __init__(self):
        self.tables: dict[tuple[int, ...], list[Fraction]] = {}

    def __len__(self) -> int:
        return len(self.tables)


def _prefix_values(idx: tuple[int, ...], N: int, tables: dict) -> list[Fraction]:
    """Prefix list [S_idx(0..N)], extending any cached shorter prefix."""
    if not idx:
        raise AssertionError("empty suffix has no table")
    cached = tables.get(idx)
    if cached is not None and len(cached) > N:
        return cached
    inner = None if len(idx) == 1 else _prefix_values(idx[1:], N, tables)
    b = idx[0]
    ab, neg = abs(b), b < 0
    if cached is None:
        cached = [Fraction(0)]
        tables[idx] = cached
    run = cached[-1]
    for k in range(len(cached), N + 1):
        term = Fraction((-1) ** k if neg else 1, k**ab)
        if inner is not None:
            term *= inner[k]
        run += term
        cached.append(run)
    return cached


def eval_exact(
    v: IndexVector,
    N: int,
    cache: EvalCache | None = None,
    budget: int = DEFAULT_BUDGET,
) -> Fraction:
    """Exact rational value S_v(N).

    Raises ResourceBudgetError when weight(v)*N exceeds ``budget`` (the
    result is never silently truncated).
    """
    if N < 0:
        raise UsageError(f"N must be >= 0, got {N}")
    if N == 0:
        return Fraction(0)
    if v.weight * N > budget:
        raise ResourceBudgetError(
            f"weight*N = {v.weight * N} exceeds the work budget {budget}"
        )
    tables = cache.tables if cache is not None else {}
    return _prefix_values(v.entries, N, tables)[N]


_ORACLE_MAX_N = 200
_ORACLE_MAX_DEPTH = 4


def _lcm_upto(n: int) -> int:
    L = 1
    for i in range(2, n + 1):
        L = L * i // math.gcd(L, i)
    return L


def eval_oracle(v: IndexVector, N: int) -> Fraction:
    """Brute-force reference value of S_v(N).

    Unfolds sum over N >= k1 >= k2 >= ... >= kd >= 1 of
    prod_i sign(a_i)^{k_i} / k_i^{|a_i|} with explicit nested loops; no
    recursion sharing, no memoization.  Exactness comes from accumulating
    integer numerators over the fixed common denominator lcm(1..N)^weight.
    """
    if N < 0 or N > _ORACLE_MAX_N:
        raise UsageError(f"oracle supports 0 <= N <= {_ORACLE_MAX_N}, got {N}")
    if v.depth > _ORACLE_MAX_DEPTH:
        raise UsageError(f"oracle supports depth <= {_ORACLE_MAX_DEPTH}, got {v.depth}")
    if N == 0:
        return Fraction(0)
    idx = v.entries
    L = _lcm_upto(N) ** v.weight
    last = len(idx) - 1
    total = 0

    def loop(level: int, kmax: int, denom: int, sgn: int):
        nonlocal total
        a = idx[level]
        ab, neg = abs(a), a < 0
        for k in range(1, kmax + 1):
            s = -sgn if (neg and k % 2) else sgn
            d = denom * k**ab
            if level == last:
                total += s * (L // d)
            else:
                loop(level + 1, k, d, s)

    loop(0, N, 1, 1)
    return Fraction(total, L)


@dataclass(frozen=True)
class FloatEval:
    """Floating value of a sum with a conservative absolute error bound."""

    value: float
    error_bound: float
    decimal_str: str
    precision_bits: int


def _float_pass(idx: tuple[int, ...], N: int) -> tuple[float, float]:
    """(value, error bound) in double precision, Neumaier-compensated."""
    values = [1.0] * (N + 1)
    bounds = [0.0] * (N + 1)
    for level in range(len(idx) - 1, -1, -1):
        b = idx[level]
        ab, neg = abs(b), b < 0
        run = comp = 0.0
        absrun = 0.0
        bnd = 0.0
        new_vals = [0.0] * (N + 1)
        new_bnds = [0.0] * (N + 1)
        inner_top = level < len(idx) - 1
        for k in range(1, N + 1):
            f = 1.0 / float(k) ** ab
            term = -f if (neg and k % 2) else f
            if inner_top:
                bnd += f * bounds[k]
                term *= values[k]
            t = run + term
            if abs(run) >= abs(term):
                comp += (run - t) + term
            else:
                comp += (term - t) + run
            run = t
            absrun += abs(term)
            new_vals[k] = run + comp
            new_bnds[k] = bnd + 2.0 * _EPS * absrun
        values, bounds = new_vals, new_bnds
    return values[N], bounds[N]


def eval_float_decimal(v: IndexVector, N: int, digits: int) -> tuple[Decimal, Decimal]:
    """(value, error bound) computed in ``decimal`` arithmetic at ``digits``."""
    with localcontext() as ctx:
        ctx.prec = digits + 5
        ulp = Decimal(10) ** (2 - digits)
        values: list[Decimal] | None = None
        bounds: list[Decimal] | None = None
        idx = v.entries
        for level in range(len(idx) - 1, -1, -1):
            b = idx[level]
            ab, neg = abs(b), b < 0
            run = Decimal(0)
            absrun = Decimal(0)
            bnd = Decimal(0)
            new_vals = [Decimal(0)] * (N + 1)
            new_bnds = [Decimal(0)] * (N + 1)
            for k in range(1, N + 1):
                f = Decimal(1) / (Decimal(k) ** ab)
                term = -f if (neg and k % 2) else f
                if values is not None:
                    bnd += f * bounds[k]
                    term *= values[k]
                run += term
                absrun += abs(term)
                new_vals[k] = run
                new_bnds[k] = bnd + 2 * ulp * absrun
            values, bounds = new_vals, new_bnds
        return values[N], bounds[N]


def eval_float(v: IndexVector, N: int, precision: int = 53) -> FloatEval:
    """Floating evaluation of S_v(N) with a reported error bound.

    ``precision`` is in bits; 53 (the default) runs in native double
    precision with compensated summation, anything larger switches to
    ``decimal`` arithmetic at the equivalent number of digits.
    """
    if N < 1:
        raise UsageError(f"N must be >= 1, got {N}")
    if precision <= 53:
        value, bound = _float_pass(v.entries, N)
        return FloatEval(value, bound, repr(value), 53)
    digits = int(math.ceil(precision * math.log10(2))) + 2
    dval, dbnd = eval_float_decimal(v, N, digits)
    return FloatEval(float(dval), float(dbnd), str(dval), precision)


# ---------------------------------------------------------------------------
# Infinite limits


@dataclass(frozen=True)
class LimitResult:
    kind: str  # "finite" | "divergent"
    value: float | None = None
    error_estimate: float | None = None


#: Default ladder: N = 2^7 .. 2^14.  Powers of two keep the parity of the
#: argument fixed, so alternating sums have smooth tails along the ladder.
DEFAULT_LADDER = tuple(2**j for j in range(7, 15))

_LADDER_DIGITS = 40
_MAX_INV_POWER = 6  # eliminate tail terms up to 1/N^6


def _solve_exact(rows: list[list[Fraction]]) -> list[Fraction]:
    """Gauss-Jordan solve of a square system given as [A | b] rows."""
    n = len(rows)
    for c in range(n):
        piv = next((r for r in range(c, n) if rows[r][c] != 0), None)
        if piv is None:
            raise AssertionError("singular extrapolation system")
        rows[c], rows[piv] = rows[piv], rows[c]
        inv = 1 / rows[c][c]
        rows[c] = [x * inv for x in rows[c]]
        for r in range(n):
            if r != c and rows[r][c] != 0:
                f = rows[r][c]
                rows[r] = [xr - f * xc for xr, xc in zip(rows[r], rows[c])]
    return [rows[r][n] for r in range(n)]


def _fit_constant(
    ladder: list[int], values: list[Fraction], basis: list[tuple[int, int]]
) -> Fraction:
    """Constant term of y ~ c + sum coeff * ln(N)^p / N^m fitted exactly.

    Uses the largest 1+len(basis) ladder points; ln N enters as an exact
    multiple of a 50-digit rational approximation of ln 2 (ladder points are
    powers of two), so the solve itself is exact rational arithmetic.
    """
    npts = 1 + len(basis)
    rows = []
    for N, y in zip(ladder[-npts:], values[-npts:]):
        lnN = LN2_FRACTION * round(math.log2(N))
        row = [Fraction(1)]
        row += [Fraction(1, N**m) * lnN**p for (m, p) in basis]
        row.append(y)
        rows.append(row)
    return _solve_exact(rows)[0]


def limit_value(v: IndexVector, ladder: tuple[int, ...] = DEFAULT_LADDER) -> LimitResult:
    """N -> infinity limit of S_v(N) with an error estimate.

    Divergent exactly when the leading index is +1 (logarithmic divergence
    of the outer sum); inner indices equal to 1 are damped by the outer
    1/k^|b| factor and are harmless.  For convergent sums the ladder values
    are computed in 40-digit decimal arithmetic and the limit is read off as
    the constant of an exact fit that eliminates 1/N^m ln(N)^p tail terms;
    the error estimate is the shift observed when the smallest basis term is
    dropped (the last elimination correction).
    """
    if v.entries[0] == 1:
        return LimitResult(kind="divergent")
    ladder = sorted(set(int(n) for n in ladder))
    if len(ladder) < 4 or any(n & (n - 1) for n in ladder):
        raise UsageError("ladder must hold at least 4 distinct powers of two")
    values = []
    for N in ladder:
        dval, _ = eval_float_decimal(v, N, _LADDER_DIGITS)
        values.append(Fraction(*dval.as_integer_ratio()))
    # Tail terms ln(N)^p/N^m: one log power per inner +1 entry.
    pmax = sum(1 for a in v.entries[1:] if a == 1)
    cands = [(m, p) for m in range(1, _MAX_INV_POWER + 1) for p in range(pmax + 1)]
    cands.sort(key=lambda mp: -(math.log(1024.0) ** mp[1] / 1024.0 ** mp[0]))
    basis = cands[: len(ladder) - 1]
    c_full = _fit_constant(ladder, values, basis)
    c_drop = _fit_constant(ladder, values, basis[:-1])
    est = float(abs(c_full - c_drop)) + 10.0 ** (3 - _LADDER_DIGITS)
    return LimitResult(kind="finite", value=float(c_full), error_estimate=est)
