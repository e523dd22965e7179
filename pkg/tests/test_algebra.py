"""Stuffle products, relation systems and Lyndon-basis reduction."""

import random
from fractions import Fraction

import pytest

from hsums import (
    CapabilityError,
    EvalCache,
    HarmonicExpr,
    IndexVector,
    UsageError,
    build_relations,
    enumerate_sums,
    eval_exact,
    is_lyndon,
    lyndon_words,
    reduce_to_basis,
    stuffle_product,
)


def vec(text):
    return IndexVector.parse(text)


def expr_terms(expr):
    return {key: coeff for key, coeff in expr.terms.items()}


class TestStuffleProduct:
    def test_s1_squared(self):
        expr = stuffle_product(vec("1"), vec("1"))
        assert expr_terms(expr) == {
            ((), ((1, 1),)): Fraction(2),
            ((), ((2,),)): Fraction(-1),
        }

    def test_mixed_weights(self):
        expr = stuffle_product(vec("1"), vec("2"))
        assert expr_terms(expr) == {
            ((), ((1, 2),)): Fraction(1),
            ((), ((2, 1),)): Fraction(1),
            ((), ((3,),)): Fraction(-1),
        }
        # N=2: 13/8 + 11/8 - 9/8 = 15/8 = S1(2)*S2(2)
        assert expr.eval_exact_at(2) == Fraction(15, 8)
        assert eval_exact(vec("1"), 2) * eval_exact(vec("2"), 2) == Fraction(15, 8)

    def test_alternating(self):
        expr = stuffle_product(vec("-1"), vec("1"))
        assert expr_terms(expr) == {
            ((), ((-1, 1),)): Fraction(1),
            ((), ((1, -1),)): Fraction(1),
            ((), ((-2,),)): Fraction(-1),
        }

    def test_commutativity(self):
        rng = random.Random(11)
        pool = [v for w in range(1, 4) for v in enumerate_sums(w)]
        for _ in range(25):
            a, b = rng.choice(pool), rng.choice(pool)
            assert stuffle_product(a, b) == stuffle_product(b, a)

    def test_weight_grading(self):
        rng = random.Random(13)
        pool = [v for w in range(1, 4) for v in enumerate_sums(w)]
        for _ in range(25):
            a, b = rng.choice(pool), rng.choice(pool)
            for entries in stuffle_product(a, b).sum_factors():
                assert IndexVector(entries).weight == a.weight + b.weight

    def test_identity_exact_random(self):
        # the full 200-pair run is in the acceptance suite
        rng = random.Random(17)
        pool = [v for w in range(1, 6) for v in enumerate_sums(w)]
        cache = EvalCache()
        checked = 0
        while checked < 30:
            a, b = rng.choice(pool), rng.choice(pool)
            if a.weight + b.weight > 6:
                continue
            expr = stuffle_product(a, b)
            for N in (1, 2, 5, 17, 30):
                lhs = eval_exact(a, N, cache=cache) * eval_exact(b, N, cache=cache)
                assert expr.eval_exact_at(N, cache=cache) == lhs
            checked += 1

    def test_single_sum_factor_per_term(self):
        expr = stuffle_product(vec("1,2"), vec("-1"))
        assert expr.max_factors_per_term() == 1

    def test_weight_bound(self):
        with pytest.raises(UsageError):
            stuffle_product(vec("4,1"), vec("4"))


class TestRelationSystem:
    def test_w2_contains_s11_relation(self):
        system = build_relations(2)
        wanted = {(1, 1): Fraction(2), (2,): Fraction(-1)}
        assert any(rel.coeffs == wanted for rel in system.relations)

    def test_independent_counts(self):
        expected = {2: 3, 3: 8, 4: 18, 5: 48}
        for w, count in expected.items():
            system = build_relations(w)
            assert system.independent_count() == count

    def test_w4_rank(self):
        system = build_relations(4)
        assert len(system.sums) == 54
        assert system.rank() == 36

    def test_relations_vanish_numerically(self):
        system = build_relations(3)
        cache = EvalCache()
        rng = random.Random(5)
        for rel in rng.sample(list(system.relations), 6):
            a, b = (IndexVector(w) for w in rel.pair)
            for N in (1, 4, 9, 25):
                lhs = sum(
                    c * eval_exact(IndexVector(w), N, cache=cache)
                    for w, c in rel.coeffs.items()
                )
                rhs = eval_exact(a, N, cache=cache) * eval_exact(b, N, cache=cache)
                assert lhs == rhs


class TestReduction:
    def test_s11(self):
        expr = reduce_to_basis(vec("1,1"))
        assert expr_terms(expr) == {
            ((), ((2,),)): Fraction(1, 2),
            ((), ((1,), (1,))): Fraction(1, 2),
        }

    def test_lyndon_identity(self):
        for text in ("2", "-2", "-1,1", "1,2"):
            v = vec(text)
            assert is_lyndon(v)
            assert reduce_to_basis(v) == HarmonicExpr.from_sum(v)

    def test_s1m1_structure(self):
        expr = reduce_to_basis(vec("1,-1"))
        factors = expr.sum_factors()
        assert (-1, 1) in factors and (-2,) in factors
        assert (1,) in factors and (-1,) in factors
        cache = EvalCache()
        for N in range(1, 31):
            assert expr.eval_exact_at(N, cache=cache) == eval_exact(
                vec("1,-1"), N, cache=cache
            )

    def test_soundness_weight_le_4(self):
        cache = EvalCache()
        for w in range(1, 5):
            for v in enumerate_sums(w):
                expr = reduce_to_basis(v)
                for N in range(1, 41):
                    assert expr.eval_exact_at(N, cache=cache) == eval_exact(
                        v, N, cache=cache
                    )

    def test_output_factors_are_lyndon(self):
        for w in range(1, 6):
            for v in enumerate_sums(w):
                for entries in reduce_to_basis(v).sum_factors():
                    assert is_lyndon(IndexVector(entries))

    def test_basis_dimension(self):
        # sums irreducible under reduce_to_basis == Lyndon words, per weight
        for w in range(1, 6):
            kept = [
                v
                for v in enumerate_sums(w)
                if reduce_to_basis(v) == HarmonicExpr.from_sum(v)
            ]
            assert len(kept) == len(lyndon_words(w))

    def test_weight_six_needs_flag(self):
        with pytest.raises(CapabilityError):
            reduce_to_basis(vec("6"))
        with pytest.raises(CapabilityError):
            reduce_to_basis(vec("5,2"), allow_heavy=True)


class TestExpressionJson:
    def test_roundtrip_single(self):
        expr = stuffle_product(vec("1"), vec("-2"))
        assert HarmonicExpr.from_json_obj(expr.to_json_obj()) == expr

    def test_roundtrip_products(self):
        expr = reduce_to_basis(vec("1,1,1"))
        data = expr.to_json_obj()
        assert any(obj.get("sums") for obj in data)  # product terms present
        assert HarmonicExpr.from_json_obj(data) == expr

    def test_schema_fields(self):
        expr = stuffle_product(vec("1"), vec("1"))
        for obj in expr.to_json_obj():
            assert set(obj) >= {"coeff", "constants", "sum"}
            Fraction(obj["coeff"])  # parseable
