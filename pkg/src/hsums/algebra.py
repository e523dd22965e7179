"""Quasi-shuffle (stuffle) algebra of harmonic sums and Lyndon-basis reduction.

The product of two sums with the non-strict nesting convention satisfies

    S_a(N) * S_b(N) = prefix(a1, S_a' x S_b) + prefix(b1, S_a x S_b')
                      - prefix(a1 @ b1, S_a' x S_b'),

where a1 @ b1 merges two letters by adding absolute values and multiplying
signs; the merged term enters with a minus sign because both interleaving
terms count the diagonal k_i = k_j.

Reduction to the Lyndon basis assembles all stuffle relations at a weight and
Gauss-eliminates the non-Lyndon sums, yielding for every sum a polynomial in
Lyndon-word sums of weight <= w with exact rational coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import CapabilityError, UsageError
from .expressions import HarmonicExpr
from .indices import IndexVector, enumerate_sums, is_lyndon

MAX_PRODUCT_WEIGHT = 8
#: Reduction is supported through weight 5 by default; weight 6 is exact as
#: well but the relation matrix is large, so it sits behind allow_heavy.
MAX_REDUCE_WEIGHT = 5
MAX_REDUCE_WEIGHT_HEAVY = 6

Word = tuple[int, ...]

_stuffle_memo: dict[tuple[Word, Word], tuple[tuple[Word, int], ...]] = {}


def _merge_letters(a: int, b: int) -> int:
    sign = 1 if (a > 0) == (b > 0) else -1
    return sign * (abs(a) + abs(b))


def _stuffle_words(u: Word, v: Word) -> tuple[tuple[Word, int], ...]:
    if not u:
        return ((v, 1),)
    if not v:
        return ((u, 1),)
    key = (u, v) if u <= v else (v, u)
    hit = _stuffle_memo.get(key)
    if hit is not None:
        return hit
    out: dict[Word, int] = {}
    for word, c in _stuffle_words(u[1:], v):
        w = (u[0],) + word
        out[w] = out.get(w, 0) + c
    for word, c in _stuffle_words(u, v[1:]):
        w = (v[0],) + word
        out[w] = out.get(w, 0) + c
    for word, c in _stuffle_words(u[1:], v[1:]):
        w = (_merge_letters(u[0], v[0]),) + word
        out[w] = out.get(w, 0) - c
    result = tuple(sorted(out.items()))
    _stuffle_memo[key] = result
    return result


def stuffle_product(a: IndexVector, b: IndexVector) -> HarmonicExpr:
    """Expression E with S_a(N) * S_b(N) = E(N) for every N >= 0."""
    if a.weight + b.weight > MAX_PRODUCT_WEIGHT:
        raise UsageError(
            f"total weight {a.weight + b.weight} exceeds the product bound "
            f"{MAX_PRODUCT_WEIGHT}"
        )
    terms = {}
    for word, c in _stuffle_words(a.entries, b.entries):
        terms[((), (word,))] = Fraction(c)
    return HarmonicExpr(terms)


@dataclass(frozen=True)
class Relation:
    """sum_w coeffs[w] * S_w(N) = S_a(N) * S_b(N), exactly for all N."""

    coeffs: dict[Word, Fraction]
    pair: tuple[Word, Word]


@dataclass(frozen=True)
class RelationSystem:
    weight: int
    sums: tuple[Word, ...]
    relations: tuple[Relation, ...]

    def rank(self) -> int:
        cols = {w: i for i, w in enumerate(self.sums)}
        return _sparse_rank(
            [{cols[w]: c for w, c in rel.coeffs.items()} for rel in self.relations]
        )

    def independent_count(self) -> int:
        """Number of weight-w sums not eliminable by the relations."""
        return len(self.sums) - self.rank()


def _sparse_rank(rows: list[dict[int, Fraction]]) -> int:
    pivots: dict[int, dict[int, Fraction]] = {}
    rank = 0
    for row in rows:
        vec = {c: v for c, v in row.items() if v != 0}
        while vec:
            c0 = min(vec)
            piv = pivots.get(c0)
            if piv is None:
                inv = 1 / vec[c0]
                pivots[c0] = {c: v * inv for c, v in vec.items()}
                rank += 1
                break
            f = vec[c0]
            for c, v in piv.items():
                nv = vec.get(c, Fraction(0)) - f * v
                if nv:
                    vec[c] = nv
                else:
                    vec.pop(c, None)
        # empty vec: row dependent, move on
    return rank


def _pairs_of_weight(w: int):
    for wa in range(1, w // 2 + 1):
        wb = w - wa
        for a in enumerate_sums(wa):
            for b in enumerate_sums(wb):
                if wa == wb and a.word_key() > b.word_key():
                    continue
                yield a, b


def build_relations(w: int) -> RelationSystem:
    """All stuffle relations among weight-w sums from lower-weight products."""
    if not 2 <= w <= 6:
        raise UsageError(f"relation systems are built for 2 <= w <= 6, got {w}")
    sums = tuple(v.entries for v in enumerate_sums(w))
    relations = []
    for a, b in _pairs_of_weight(w):
        coeffs = {
            word: Fraction(c) for word, c in _stuffle_words(a.entries, b.entries)
        }
        relations.append(Relation(coeffs=coeffs, pair=(a.entries, b.entries)))
    return RelationSystem(weight=w, sums=sums, relations=tuple(relations))


# ---------------------------------------------------------------------------
# Lyndon-basis reduction

# weight -> {non-Lyndon word: (lyndon part, product part)}
_elim_tables: dict[int, dict[Word, tuple[dict, dict]]] = {}
_reduce_memo: dict[Word, HarmonicExpr] = {}


def _elimination_order(w: int) -> tuple[list[Word], list[Word]]:
    vs = enumerate_sums(w)
    non_lyndon = [v.entries for v in vs if not is_lyndon(v)]
    lyndon = [v.entries for v in vs if is_lyndon(v)]
    bydepth = lambda word: (-len(word), IndexVector(word).word_key())
    return sorted(non_lyndon, key=bydepth), sorted(lyndon, key=bydepth)


def _elimination_table(w: int) -> dict[Word, tuple[dict, dict]]:
    """Solve the weight-w relation system for the non-Lyndon sums.

    Returns, per non-Lyndon word, a pair (lyndon coefficients, product-pair
    coefficients) such that

        S_word = sum lyndon_coeffs[u] * S_u + sum pair_coeffs[(a,b)] * S_a*S_b.
    """
    hit = _elim_tables.get(w)
    if hit is not None:
        return hit
    non_lyndon, lyndon = _elimination_order(w)
    cols = {word: i for i, word in enumerate(non_lyndon + lyndon)}
    n_elim = len(non_lyndon)

    rows = []  # (sum part: dict col->Fraction, pair part: dict pair->Fraction)
    system = build_relations(w)
    for rel in system.relations:
        vec = {cols[word]: c for word, c in rel.coeffs.items()}
        rows.append((vec, {rel.pair: Fraction(1)}))

    pivots: dict[int, tuple[dict, dict]] = {}
    for vec, rhs in rows:
        vec = {c: v for c, v in vec.items() if v != 0}
        rhs = dict(rhs)
        while True:
            elim_cols = sorted(c for c in vec if c < n_elim)
            if not elim_cols:
                break
            c0 = elim_cols[0]
            piv = pivots.get(c0)
            if piv is None:
                inv = 1 / vec[c0]
                vec = {c: v * inv for c, v in vec.items()}
                rhs = {p: v * inv for p, v in rhs.items()}
                pivots[c0] = (vec, rhs)
                break
            pvec, prhs = piv
            f = vec[c0]
            for c, v in pvec.items():
                nv = vec.get(c, Fraction(0)) - f * v
                if nv:
                    vec[c] = nv
                else:
                    vec.pop(c, None)
            for p, v in prhs.items():
                nv = rhs.get(p, Fraction(0)) - f * v
                if nv:
                    rhs[p] = nv
                else:
                    rhs.pop(p, None)

    if len(pivots) != n_elim:
        raise AssertionError(
            f"stuffle relations at weight {w} pinned {len(pivots)} of "
            f"{n_elim} non-Lyndon sums"
        )

    # Back-substitute so every pivot row involves no other non-Lyndon column.
    # Forward elimination leaves pivot rows clean below their pivot; walking
    # the pivots from the highest column down cleans the rest.
    for c0 in sorted(pivots, reverse=True):
        vec, rhs = pivots[c0]
        for other in sorted(c for c in vec if c != c0 and c < n_elim):
            lvec, lrhs = pivots[other]
            f = vec[other]
            for c, v in lvec.items():
                nv = vec.get(c, Fraction(0)) - f * v
                if nv:
                    vec[c] = nv
                else:
                    vec.pop(c, None)
            for p, v in lrhs.items():
                nv = rhs.get(p, Fraction(0)) - f * v
                if nv:
                    rhs[p] = nv
                else:
                    rhs.pop(p, None)
        pivots[c0] = (vec, rhs)

    order = non_lyndon + lyndon
    table = {}
    for c0, (vec, rhs) in pivots.items():
        word = order[c0]
        # row reads: S_word + sum_{lyndon} v*S_u = sum pair coeffs * products
        lyn_part = {order[c]: -v for c, v in vec.items() if c != c0}
        table[word] = (lyn_part, rhs)
    _elim_tables[w] = table
    return table


def reduce_to_basis(v: IndexVector, allow_heavy: bool = False) -> HarmonicExpr:
    """Rewrite S_v as a polynomial in Lyndon-word sums, exactly.

    Weight <= 5 by default; weight 6 is allowed with ``allow_heavy=True``
    (exact but noticeably slower).
    """
    limit = MAX_REDUCE_WEIGHT_HEAVY if allow_heavy else MAX_REDUCE_WEIGHT
    if v.weight > limit:
        hint = "" if allow_heavy else " (weight 6 needs allow_heavy=True)"
        raise CapabilityError(
            f"reduction supports weight <= {limit}, got {v.weight}{hint}"
        )
    return _reduce_word(v.entries, allow_heavy)


def _reduce_word(word: Word, allow_heavy: bool) -> HarmonicExpr:
    hit = _reduce_memo.get(word)
    if hit is not None:
        return hit
    v = IndexVector(word)
    if is_lyndon(v):
        expr = HarmonicExpr.from_sum(v)
    else:
        lyn_part, pair_part = _elimination_table(v.weight)[word]
        expr = HarmonicExpr({((), (u,)): c for u, c in lyn_part.items()})
        for (a, b), coeff in pair_part.items():
            expr = expr + (
                _reduce_word(a, allow_heavy) * _reduce_word(b, allow_heavy)
            ).scale(coeff)
    _reduce_memo[word] = expr
    return expr


def verify_product(a: IndexVector, b: IndexVector, n_max: int, cache=None) -> bool:
    """Exact check of the stuffle identity at N = 0..n_max."""
    from .exact import EvalCache, eval_exact

    cache = cache or EvalCache()
    expr = stuffle_product(a, b)
    for N in range(n_max + 1):
        lhs = eval_exact(a, N, cache=cache) * eval_exact(b, N, cache=cache) if N else Fraction(0)
        if expr.eval_exact_at(N, cache=cache) != lhs:
            return False
    return True
