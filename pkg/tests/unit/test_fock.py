"""Unit tests for the Fock space: vectors, operator actions, weight spaces and relation checks."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st
from pydantic import ValidationError

from common.enums import Sign
from services.fock.checks import (
    check_adjointness,
    check_bracket_identities,
    check_gl_commutators,
    check_gram_spaces,
    check_triple_relations,
    sample_words,
)
from services.fock.context import FockContext, FockError, GlWeight, h_difference
from services.fock.operators import (
    annihilate_word,
    apply_annihilation,
    apply_commutator,
    apply_creation,
    apply_gl,
    apply_gl_power,
    apply_multibrackets,
    apply_operator_word,
    multibracket,
)
from services.fock.vector import FockVector, linear_combination
from services.fock.weight_space import (
    DegreeBoundError,
    WeightSpaceCache,
    canonical_form,
    compositions,
    equals,
    from_canonical,
    get_cache,
    gram,
    gram_for_weight,
    inner_product,
    is_null,
    norm_squared,
    radical_dimension,
    words_of_weight,
)

pytestmark = pytest.mark.unit


class TestFockContext:
    """Test the context and gl(n) weights."""

    def test_invalid_context(self):
        """Test n and p must be positive."""
        with pytest.raises(ValidationError):
            FockContext(n=0, p=1)
        with pytest.raises(ValidationError):
            FockContext(n=2, p=0)

    def test_counts_and_modes(self, ctx_2_2):
        """Test letter counts and mode checking."""
        assert ctx_2_2.counts((1, 2, 1)) == (2, 1)
        assert ctx_2_2.half_p == 1
        with pytest.raises(FockError):
            ctx_2_2.check_mode(3)

    def test_weights(self, ctx_3_3):
        """Test the doubled weight and the h differences."""
        weight = ctx_3_3.weight_of((1, 1, 2))
        assert weight.mu(1) == Fraction(7, 2)
        assert weight.counts(3) == (2, 1, 0)
        assert weight.degree(3) == 3
        assert weight.h_diff(1, 2) == h_difference((2, 1, 0), 1, 2) == 2
        assert weight.h(1) - weight.h(3) == h_difference((2, 1, 0), 1, 3)
        assert weight.is_dominant_shift(3)
        assert not weight.shift(3, 2).is_dominant_shift(3)
        assert GlWeight.lowest(3, 3).counts(3) == (0, 0, 0)
        assert str(GlWeight.lowest(2, 1)) == "(1/2, 1/2)"


class TestFockVector:
    """Test vector arithmetic and serialization."""

    def test_zero_coefficients_dropped(self):
        """Test cancelling terms leave the zero vector."""
        v = FockVector.word((1, 2)) - FockVector.word((1, 2))
        assert v.is_zero()
        assert v == FockVector.zero()

    def test_arithmetic(self):
        """Test scaling, division and linear combinations."""
        v = FockVector.word((1,)) * 2 + FockVector.vacuum()
        assert v.coefficient((1,)) == 2
        assert (v / 2).coefficient(()) == Fraction(1, 2)
        assert 3 * FockVector.vacuum() == FockVector({(): 3})
        assert linear_combination([(1, v), (-2, FockVector.word((1,)))]) == FockVector.vacuum()

    def test_components(self):
        """Test splitting into weight components."""
        v = FockVector({(1, 2): 1, (2, 1): -1, (1,): 3})
        parts = v.components(2)
        assert set(parts) == {(1, 0), (1, 1)}
        assert not v.is_homogeneous(2)
        assert v.degrees() == [1, 2]

    def test_pretty_and_json(self):
        """Test the readable form and the json records."""
        v = FockVector({(1, 2): 2, (2, 1): -1})
        assert v.pretty() == "2 B1+ B2+ |0⟩ - B2+ B1+ |0⟩"
        assert FockVector.zero().pretty() == "0"
        assert v.to_json() == [{"word": [1, 2], "coeff": "2/1"}, {"word": [2, 1], "coeff": "-1/1"}]
        assert FockVector.from_json(v.to_json()) == v


class TestOperators:
    """Test the actions of B^±, E_ij and multibrackets."""

    def test_gl_on_vacuum(self, ctx_2_3):
        """Test E_ij v_0 = delta_ij p/2 v_0."""
        assert apply_gl(ctx_2_3, 1, 1, FockVector.vacuum()) == FockVector.vacuum() * Fraction(3, 2)
        assert apply_gl(ctx_2_3, 1, 2, FockVector.vacuum()).is_zero()

    def test_gl_replaces_letters(self, ctx_2_2):
        """Test E_12 replaces each 2 by 1."""
        result = apply_gl(ctx_2_2, 1, 2, FockVector.word((2, 2)))
        assert result == FockVector({(1, 2): 1, (2, 1): 1})

    def test_annihilation_on_one_mode(self):
        """Test B^- (B^+)^k v_0 = a_k (B^+)^{k-1} v_0 with a_k = k (k even), k-1+p (k odd)."""
        for p in (1, 2, 3):
            for k in range(1, 6):
                expected = k if k % 2 == 0 else k - 1 + p
                assert annihilate_word(p, 1, (1,) * k) == (((1,) * (k - 1), expected),)

    def test_norms_one_mode(self, ctx_1_1):
        """Test p = 1 is an ordinary boson: <(B^+)^k v_0, (B^+)^k v_0> = k!."""
        assert norm_squared(ctx_1_1, FockVector.word((1, 1, 1))) == 6
        assert norm_squared(FockContext(n=1, p=2), FockVector.word((1, 1, 1))) == 16

    def test_operator_word_order(self, ctx_2_2):
        """Test the rightmost operator acts first."""
        v = apply_operator_word(ctx_2_2, [(Sign.MINUS, 1), (Sign.PLUS, 1)], FockVector.vacuum())
        assert v == FockVector.vacuum() * 2

    def test_gl_commutes_with_creation(self, ctx_2_2):
        """Test [E_12, B_2^+] = B_1^+ on a word."""
        v = FockVector.word((2, 1))
        lhs = apply_gl(ctx_2_2, 1, 2, apply_creation(ctx_2_2, 2, v)) - apply_creation(ctx_2_2, 2, apply_gl(ctx_2_2, 1, 2, v))
        assert lhs == apply_creation(ctx_2_2, 1, v)

    def test_anticommutator_of_creation_and_annihilation(self, ctx_2_2):
        """Test {B_1^+, B_2^-} = 2 E_12."""
        v = FockVector.word((2, 2, 1))
        lhs = apply_operator_word(ctx_2_2, [(Sign.PLUS, 1), (Sign.MINUS, 2)], v) + apply_operator_word(
            ctx_2_2, [(Sign.MINUS, 2), (Sign.PLUS, 1)], v
        )
        assert lhs == apply_gl(ctx_2_2, 1, 2, v) * 2

    def test_multibracket(self, ctx_3_2):
        """Test [B_1^+, B_2^+] and its sign."""
        assert multibracket(ctx_3_2, (1, 2), FockVector.vacuum()) == FockVector({(1, 2): 1, (2, 1): -1})
        assert multibracket(ctx_3_2, (1, 1), FockVector.vacuum()).is_zero()
        assert len(multibracket(ctx_3_2, (1, 2, 3), FockVector.vacuum())) == 6
        product = apply_multibrackets(ctx_3_2, [(1, 2), (3,)], FockVector.vacuum())
        assert product == FockVector({(1, 2, 3): 1, (2, 1, 3): -1})

    def test_commutator_and_power(self, ctx_2_2):
        """Test the commutator of two creations and powers of E_21."""
        v = apply_commutator(ctx_2_2, (Sign.PLUS, 1), (Sign.PLUS, 2), FockVector.vacuum())
        assert v == multibracket(ctx_2_2, (1, 2), FockVector.vacuum())
        assert apply_gl_power(ctx_2_2, 2, 1, 3, FockVector.word((1, 1))).is_zero()
        assert apply_gl_power(ctx_2_2, 2, 1, 2, FockVector.word((1, 1))) == FockVector.word((2, 2)) * 2

    def test_invalid_mode(self, ctx_2_2):
        """Test acting with a mode outside 1..n raises FockError."""
        with pytest.raises(FockError):
            apply_creation(ctx_2_2, 3, FockVector.vacuum())
        with pytest.raises(FockError):
            apply_annihilation(ctx_2_2, 0, FockVector.vacuum())


class TestWeightSpaces:
    """Test Gram matrices, pivots and equality in L(p)."""

    def test_words_and_compositions(self):
        """Test word enumeration per weight and the weights of one degree."""
        assert words_of_weight((1, 1)) == [(1, 2), (2, 1)]
        assert words_of_weight((0, 0)) == [()]
        assert list(compositions(2, 2)) == [(2, 0), (1, 1), (0, 2)]

    @pytest.mark.parametrize("p", [1, 2, 3])
    def test_gram_mixed_weight(self, p):
        """Test the Gram matrix of B_1^+ B_2^+ v_0 and B_2^+ B_1^+ v_0."""
        ctx = FockContext(n=2, p=p)
        space = gram(ctx, (1, 1))
        assert space.gram.rows == ((p * p, p * (2 - p)), (p * (2 - p), p * p))
        omega = multibracket(ctx, (1, 2), FockVector.vacuum())
        assert norm_squared(ctx, omega) == 4 * p * (p - 1)

    def test_radical_at_p_one(self, ctx_2_1):
        """Test [B_1^+, B_2^+] v_0 is null at p = 1 and the symmetric vector is not."""
        omega = multibracket(ctx_2_1, (1, 2), FockVector.vacuum())
        assert is_null(ctx_2_1, omega)
        assert not is_null(ctx_2_1, FockVector.word((1, 2)))
        assert equals(ctx_2_1, FockVector.word((1, 2)), FockVector.word((2, 1)))
        assert radical_dimension(ctx_2_1, (1, 1)) == 1
        assert gram(ctx_2_1, (1, 1)).dimension == 1

    def test_canonical_form(self, ctx_2_1):
        """Test canonical coordinates agree for vectors equal in L(p)."""
        a = canonical_form(ctx_2_1, FockVector.word((1, 2)))
        b = canonical_form(ctx_2_1, FockVector.word((2, 1)))
        assert a == b
        assert from_canonical(ctx_2_1, (1, 1), a) == FockVector.word((1, 2))
        assert canonical_form(ctx_2_1, FockVector.zero(), (1, 1)) == (0,)

    def test_canonical_form_errors(self, ctx_2_2):
        """Test inhomogeneous or unlabelled zero vectors are rejected."""
        with pytest.raises(FockError):
            canonical_form(ctx_2_2, FockVector.word((1,)) + FockVector.word((2,)))
        with pytest.raises(FockError):
            canonical_form(ctx_2_2, FockVector.zero())
        with pytest.raises(FockError):
            canonical_form(ctx_2_2, FockVector.word((1,)), (0, 1))

    def test_inner_product_orthogonal_weights(self, ctx_2_2):
        """Test vectors of different weights are orthogonal."""
        assert inner_product(ctx_2_2, FockVector.word((1,)), FockVector.word((2,))) == 0
        assert inner_product(ctx_2_2, FockVector.vacuum(), FockVector.vacuum()) == 1

    def test_degree_bound(self, ctx_2_2):
        """Test weight spaces above the degree bound are refused."""
        cache = WeightSpaceCache(ctx_2_2, degree_bound=2)
        assert cache.get((1, 1)).dimension == 2
        with pytest.raises(DegreeBoundError):
            cache.get((2, 1))
        with pytest.raises(FockError):
            cache.get((1,))

    def test_cache_is_shared(self, ctx_2_2):
        """Test the shared cache returns the same space object."""
        assert get_cache(ctx_2_2) is get_cache(FockContext(n=2, p=2))
        assert gram(ctx_2_2, (2, 1)) is gram(ctx_2_2, (2, 1))

    def test_gram_for_weight(self, ctx_2_2):
        """Test lookup by gl(n) weight and the error below the lowest weight."""
        assert gram_for_weight(ctx_2_2, GlWeight.from_counts((1, 0), 2)).words == ((1,),)
        with pytest.raises(FockError):
            gram_for_weight(ctx_2_2, GlWeight((0, 2)))

    @given(
        st.lists(st.integers(min_value=1, max_value=2), max_size=3),
        st.lists(st.integers(min_value=1, max_value=2), max_size=3),
        st.integers(min_value=1, max_value=2),
    )
    def test_adjointness_property(self, u, w, j):
        """Test <B_j^+ u, w> = <u, B_j^- w> on random words."""
        ctx = FockContext(n=2, p=2)
        lhs = inner_product(ctx, apply_creation(ctx, j, FockVector.word(u)), FockVector.word(w))
        rhs = inner_product(ctx, FockVector.word(u), apply_annihilation(ctx, j, FockVector.word(w)))
        assert lhs == rhs


class TestRelationChecks:
    """Test the generator relation suites."""

    @pytest.mark.parametrize("n,p", [(1, 1), (2, 1), (2, 2), (2, 3)])
    def test_relations_small(self, n, p):
        """Test triple relations, gl(n) commutators, adjointness and Gram checks at degree <= 3."""
        ctx = FockContext(n=n, p=p)
        results = check_triple_relations(ctx, 3)
        results += check_gl_commutators(ctx, 3)
        results += check_adjointness(ctx, 3)
        results += check_gram_spaces(ctx, 4)
        assert all(r.passed for r in results), [r for r in results if not r.passed]

    @pytest.mark.slow
    @pytest.mark.parametrize("p", [1, 2, 3])
    def test_relations_rank_three(self, p):
        """Test the relation suites on every word of degree <= 4 for n = 3."""
        ctx = FockContext(n=3, p=p)
        results = check_triple_relations(ctx, 4) + check_gl_commutators(ctx, 4) + check_gram_spaces(ctx, 5)
        assert all(r.passed for r in results)

    def test_sampling_is_seeded(self):
        """Test the same seed draws the same words."""
        a = sample_words(3, 3, 10, random.Random(7))
        b = sample_words(3, 3, 10, random.Random(7))
        assert a == b and len(a) == 10
        assert len(sample_words(2, 2, None, None)) == 7

    def test_bracket_identities(self, ctx_3_2):
        """Test the three multibracket commutation rules on seeded samples."""
        results = check_bracket_identities(ctx_3_2, 2, 3, random.Random(0), 30)
        assert len(results) == 3
        assert all(r.passed for r in results)
