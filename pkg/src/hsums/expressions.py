"""Exact linear combinations of products of symbolic constants and harmonic sums.

A :class:`HarmonicExpr` is a finite map

    (constants monomial, tuple of sum factors) -> Fraction coefficient

where the constants monomial is a product of powers of the symbols in
:data:`hsums.constants.SYMBOLS` and every sum factor is an index vector;
all sum factors share the same implicit argument N.  Outputs of the stuffle
product carry at most one sum factor per term; basis reduction produces
polynomial terms with several (Lyndon) factors.

JSON form: a list of ``{"coeff": "p/q", "constants": [{"sym":..., "power":...}],
"sum": "a1,...,ad" | null}`` objects; terms with more than one sum factor
additionally carry the full factor list under ``"sums"`` (the single-factor
``"sum"`` field is then null).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator

from .constants import SYMBOL_VALUES, SYMBOLS
from .errors import UsageError
from .exact import EvalCache, eval_exact
from .indices import IndexVector

ConstMonomial = tuple[tuple[str, int], ...]
SumFactors = tuple[tuple[int, ...], ...]
TermKey = tuple[ConstMonomial, SumFactors]


def _sum_sort_key(entries: tuple[int, ...]):
    v = IndexVector(entries)
    return (v.weight, v.word_key())


def _normalize_key(constants: Iterable[tuple[str, int]], sums) -> TermKey:
    cmap: dict[str, int] = {}
    for sym, power in constants:
        if sym not in SYMBOLS:
            raise UsageError(f"unknown constant symbol {sym!r}")
        cmap[sym] = cmap.get(sym, 0) + power
    cm = tuple(sorted((s, p) for s, p in cmap.items() if p != 0))
    sf = tuple(sorted((tuple(s) for s in sums), key=_sum_sort_key))
    return cm, sf


class HarmonicExpr:
    """Immutable-by-convention expression; arithmetic returns new objects."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[TermKey, Fraction] | None = None):
        self.terms = {k: v for k, v in (terms or {}).items() if v != 0}

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "HarmonicExpr":
        return cls()

    @classmethod
    def rational(cls, q) -> "HarmonicExpr":
        return cls({((), ()): Fraction(q)})

    @classmethod
    def from_sum(cls, v: IndexVector, coeff=1) -> "HarmonicExpr":
        return cls({((), (v.entries,)): Fraction(coeff)})

    @classmethod
    def from_symbol(cls, sym: str, power: int = 1, coeff=1) -> "HarmonicExpr":
        return cls({_normalize_key([(sym, power)], ()): Fraction(coeff)})

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "HarmonicExpr") -> "HarmonicExpr":
        out = dict(self.terms)
        for key, c in other.terms.items():
            out[key] = out.get(key, Fraction(0)) + c
        return HarmonicExpr(out)

    def __sub__(self, other: "HarmonicExpr") -> "HarmonicExpr":
        return self + other.scale(-1)

    def scale(self, q) -> "HarmonicExpr":
        q = Fraction(q)
        return HarmonicExpr({k: c * q for k, c in self.terms.items()})

    def __mul__(self, other: "HarmonicExpr") -> "HarmonicExpr":
        """Plain commutative product: constant monomials merge, sum-factor
        multisets concatenate.  No stuffle re-expansion happens here."""
        out: dict[TermKey, Fraction] = {}
        for (c1, s1), q1 in self.terms.items():
            for (c2, s2), q2 in other.terms.items():
                key = _normalize_key(c1 + c2, s1 + s2)
                out[key] = out.get(key, Fraction(0)) + q1 * q2
        return HarmonicExpr(out)

    def __eq__(self, other) -> bool:
        return isinstance(other, HarmonicExpr) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- inspection --------------------------------------------------------

    def __iter__(self) -> Iterator[tuple[TermKey, Fraction]]:
        return iter(sorted(self.terms.items()))

    def __len__(self) -> int:
        return len(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def sum_factors(self) -> set[tuple[int, ...]]:
        out = set()
        for (_, sums) in self.terms:
            out.update(sums)
        return out

    def max_factors_per_term(self) -> int:
        return max((len(sums) for (_, sums) in self.terms), default=0)

    def has_constants(self) -> bool:
        return any(consts for (consts, _) in self.terms)

    # -- evaluation --------------------------------------------------------

    def eval_exact_at(self, N: int, cache: EvalCache | None = None) -> Fraction:
        """Exact rational value at argument N; requires a constants-free
        expression (algebraic identities at finite N involve no constants)."""
        if self.has_constants():
            raise UsageError("expression carries symbolic constants; use eval_float_at")
        total = Fraction(0)
        for (_, sums), coeff in self.terms.items():
            prod = coeff
            for entries in sums:
                prod *= eval_exact(IndexVector(entries), N, cache=cache)
            total += prod
        return total

    def eval_float_at(self, N: int, cache: EvalCache | None = None) -> float:
        total = 0.0
        for (consts, sums), coeff in self.terms.items():
            prod = float(coeff)
            for sym, power in consts:
                prod *= SYMBOL_VALUES[sym] ** power
            for entries in sums:
                prod *= float(eval_exact(IndexVector(entries), N, cache=cache))
            total += prod
        return total

    # -- rendering ---------------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (consts, sums), coeff in self:
            factors = [str(coeff)]
            factors += [f"{sym}^{p}" if p != 1 else sym for sym, p in consts]
            factors += ["S(" + ",".join(map(str, s)) + ")" for s in sums]
            parts.append("*".join(factors))
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"HarmonicExpr({self})"

    def to_json_obj(self) -> list[dict]:
        out = []
        for (consts, sums), coeff in self:
            obj = {
                "coeff": str(coeff),
                "constants": [{"sym": s, "power": p} for s, p in consts],
                "sum": ",".join(map(str, sums[0])) if len(sums) == 1 else None,
            }
            if len(sums) > 1:
                obj["sums"] = [",".join(map(str, s)) for s in sums]
            out.append(obj)
        return out

    @classmethod
    def from_json_obj(cls, data: list[dict]) -> "HarmonicExpr":
        terms: dict[TermKey, Fraction] = {}
        for obj in data:
            consts = [(c["sym"], int(c["power"])) for c in obj.get("constants", [])]
            if obj.get("sum") is not None:
                sums = [IndexVector.parse(obj["sum"]).entries]
            else:
                sums = [IndexVector.parse(s).entries for s in obj.get("sums", [])]
            key = _normalize_key(consts, sums)
            terms[key] = terms.get(key, Fraction(0)) + Fraction(obj["coeff"])
        return cls(terms)
