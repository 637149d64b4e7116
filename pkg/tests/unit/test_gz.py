"""Unit tests for GZ vectors, transition matrices and bracket polynomials."""

from fractions import Fraction

import pytest

from common.enums import CheckStatus
from services.bases.omega import highest_weight_tableau, highest_weight_vector
from services.combinatorics.matrices import exponent_matrix
from services.combinatorics.partitions import Partition, dominates, partitions_of
from services.combinatorics.tableaux import YoungTableau
from services.fock.context import FockContext
from services.fock.weight_space import equals, inner_product
from services.linalg.matrix import RatMatrix
from services.mz.checks import check_bracket_polynomials, check_gz_basis, shapes_up_to
from services.mz.coefficients import hw_scalar
from services.mz.gz import (
    BracketTerm,
    TransitionBlock,
    bracket_expansion,
    brackets_to_vector,
    gz_from_creation_polynomials,
    gz_order_key,
    gz_vector,
    omega_expansion,
    rank_three_transition_coefficient,
    rank_three_transition_row,
    shifted_gamma,
    transition_matrix,
)

pytestmark = pytest.mark.unit


class TestGzVectors:
    """Test v_A built from z_j^+ and y_mj."""

    def test_highest_tableau_is_scaled_omega(self, ctx_2_2):
        """Test v_A = d(lambda) Omega_lambda for the highest weight tableau."""
        shape = Partition((2, 1))
        built = gz_vector(ctx_2_2, highest_weight_tableau(shape))
        assert equals(ctx_2_2, built.vector, highest_weight_vector(ctx_2_2, shape) * hw_scalar(shape))

    def test_rejects_non_semistandard(self, ctx_2_2):
        """Test a tableau with a decreasing row is rejected."""
        with pytest.raises(ValueError):
            gz_vector(ctx_2_2, YoungTableau.from_rows([[2, 1]]))

    def test_vanishes_past_p(self, ctx_2_1):
        """Test v_A = 0 when l(lambda) > p."""
        built = gz_vector(ctx_2_1, YoungTableau.from_rows([[1], [2]]))
        assert built.vector.is_zero()
        assert built.norm_squared == 0

    def test_orthogonal_within_weight(self, ctx_3_2):
        """Test the two GZ vectors of shape (2,1) and content (1,1,1) are orthogonal."""
        first = gz_vector(ctx_3_2, YoungTableau.from_rows([[1, 3], [2]]))
        second = gz_vector(ctx_3_2, YoungTableau.from_rows([[1, 2], [3]]))
        assert inner_product(ctx_3_2, first.vector, second.vector) == 0
        assert first.norm_squared != 0 and second.norm_squared != 0


class TestOrdering:
    """Test the total order used for triangularity."""

    def test_golden_order(self, golden_tableaux):
        """Test the reading orders (0,2,0) < (1,1,1) < (2,0,2)."""
        keys = [gz_order_key(t, 3) for t in golden_tableaux]
        assert [k[2] for k in keys] == [(0, 2, 0), (1, 1, 1), (2, 0, 2)]
        assert keys == sorted(keys)

    def test_shape_order_refines_dominance(self):
        """Test a shape dominating another of the same size sorts after it."""
        shapes = partitions_of(4, 3) + partitions_of(5, 3)
        for shape in shapes:
            for other in shapes:
                if shape != other and dominates(shape, other):
                    key = gz_order_key(highest_weight_tableau(shape), 3)
                    other_key = gz_order_key(highest_weight_tableau(other), 3)
                    assert key > other_key


class TestRankThreeClosedForm:
    """Test the n = 3 transition coefficients."""

    def test_golden_rows(self, ctx_3_2, golden_tableaux):
        """Test the three closed-form rows of the (4,2,0) block at content (2,2,2)."""
        a1, a2, a3 = golden_tableaux
        assert rank_three_transition_row(ctx_3_2, a1) == {a1: Fraction(-1, 2), a2: Fraction(-1, 2), a3: Fraction(-1, 12)}
        assert rank_three_transition_row(ctx_3_2, a2) == {a2: Fraction(-1, 3), a3: Fraction(-1, 12)}
        assert rank_three_transition_row(ctx_3_2, a3) == {a3: Fraction(-1, 12)}

    def test_shifted_gamma(self, golden_tableaux):
        """Test gamma(1) of A1 is gamma of A2."""
        a1, a2, _ = golden_tableaux
        assert shifted_gamma(exponent_matrix(a1, 3), 1) == exponent_matrix(a2, 3)

    def test_coefficient_out_of_range(self, golden_shape, golden_tableaux):
        """Test T_{A,B(l)} = 0 beyond gamma_31."""
        gamma = exponent_matrix(golden_tableaux[0], 3)
        assert rank_three_transition_coefficient(golden_shape, gamma, 3) == 0
        assert rank_three_transition_coefficient(golden_shape, gamma, -1) == 0

    def test_needs_rank_three(self, ctx_2_2):
        """Test n != 3 is rejected."""
        with pytest.raises(ValueError):
            rank_three_transition_row(ctx_2_2, YoungTableau.from_rows([[1]]))

    def test_omega_expansion(self, golden_shape, golden_tableaux, ctx_3_2):
        """Test v_A1 = -6 Omega_A1 - 12 Omega_A2 - 2 Omega_A3."""
        a1, a2, a3 = golden_tableaux
        terms = omega_expansion(golden_shape, rank_three_transition_row(ctx_3_2, a1), 3)
        assert {t: c for c, t in terms} == {a1: -6, a2: -12, a3: -2}
        terms = omega_expansion(golden_shape, rank_three_transition_row(ctx_3_2, a3), 3)
        assert terms == [(Fraction(-2), a3)]


class TestTransitionMatrix:
    """Test T per weight block."""

    def test_vanishing_shape(self, ctx_3_2):
        """Test there are no blocks when l(lambda) > p."""
        assert transition_matrix(ctx_3_2, Partition((1, 1, 1))) == []

    def test_single_box(self, ctx_2_2):
        """Test the blocks of lambda = (1) are 1x1 identities."""
        blocks = transition_matrix(ctx_2_2, Partition((1,)))
        assert [b.counts for b in blocks] == [(1, 0), (0, 1)]
        for block in blocks:
            assert block.matrix.rows == ((Fraction(1),),)
            assert block.is_triangular

    def test_rank_two_checks(self, ctx_2_3):
        """Test orthogonality and triangularity for n = 2 up to size 3."""
        results = check_gz_basis(ctx_2_3, shapes_up_to(ctx_2_3, 3))
        assert results
        assert all(r.status is CheckStatus.PASSED for r in results)

    def test_json_shape(self, ctx_2_2):
        """Test a block serializes its tableaux and both matrices."""
        block = transition_matrix(ctx_2_2, Partition((1,)))[0]
        data = block.to_json()
        assert data["lambda"] == [1]
        assert data["T"] == [["1/1"]]
        assert data["T_inverse"] == [["1/1"]]
        assert data["triangular"] is True

    def test_non_triangular_block_is_flagged(self):
        """Test a block with an entry below the diagonal reports triangular = False."""
        tableaux = [YoungTableau.from_rows([[1, 2]]), YoungTableau.from_rows([[1, 1]])]
        block = TransitionBlock(Partition((2,)), (1, 1), tableaux, RatMatrix([[1, 0], [1, 1]]), RatMatrix.identity(2))
        assert not block.is_triangular
        assert block.to_json()["triangular"] is False

    @pytest.mark.slow
    @pytest.mark.parametrize("p", [2, 3])
    def test_golden_block(self, p, golden_shape, golden_tableaux):
        """Test T and T^{-1} of the (4,2,0) block at content (2,2,2)."""
        ctx = FockContext(n=3, p=p)
        blocks = {b.counts: b for b in transition_matrix(ctx, golden_shape)}
        block = blocks[(2, 2, 2)]
        assert block.tableaux == golden_tableaux
        assert block.matrix.rows == (
            (Fraction(-1, 2), Fraction(-1, 2), Fraction(-1, 12)),
            (Fraction(0), Fraction(-1, 3), Fraction(-1, 12)),
            (Fraction(0), Fraction(0), Fraction(-1, 12)),
        )
        assert block.inverse.rows == ((-2, 3, -1), (0, -3, 3), (0, 0, -12))
        assert block.is_triangular


class TestBracketPolynomials:
    """Test v_A as column-bracket polynomials on the vacuum."""

    def test_leading_bracket_of_A1(self, ctx_3_2, golden_tableaux):
        """Test the coefficient -48 of [B_1^+,B_2^+]^2 (B_3^+)^2 v_0 in v_A1."""
        terms = gz_from_creation_polynomials(ctx_3_2, golden_tableaux[0])
        by_columns = {t.columns: t.coefficient for t in terms}
        assert by_columns[((1, 2), (1, 2), (3,), (3,))] == -48

    def test_repeated_column_entries_vanish(self):
        """Test a column holding a letter twice contributes nothing."""
        assert bracket_expansion([(Fraction(1), YoungTableau.from_rows([[1], [1]]))]) == []

    def test_column_sorting_sign(self):
        """Test Omega of [[2],[1]] is minus the bracket [B_1^+, B_2^+]."""
        terms = bracket_expansion([(Fraction(1), YoungTableau.from_rows([[2], [1]]))])
        assert terms == [BracketTerm(Fraction(-1), ((1, 2),))]

    def test_text_and_latex(self):
        """Test grouped powers in both renderings."""
        term = BracketTerm(Fraction(-48), ((1, 2), (1, 2), (3,), (3,)))
        assert term.to_text() == "-48/1 [B1+,B2+]^2 B3+^2 |0⟩"
        assert term.to_latex() == "-48\\,[B_{1}^+,B_{2}^+]^{2}(B_{3}^+)^{2}|0\\rangle"

    def test_vector_matches_gz_vector(self, ctx_3_2):
        """Test the bracket form reproduces v_A for A = [[1,3],[2]]."""
        tableau = YoungTableau.from_rows([[1, 3], [2]])
        terms = gz_from_creation_polynomials(ctx_3_2, tableau)
        assert equals(ctx_3_2, brackets_to_vector(ctx_3_2, terms), gz_vector(ctx_3_2, tableau).vector)

    def test_rank_two_checks(self, ctx_2_2):
        """Test bracket forms for n = 2 up to size 3."""
        results = check_bracket_polynomials(ctx_2_2, shapes_up_to(ctx_2_2, 3))
        assert all(r.passed for r in results)

    def test_past_p_is_empty(self, ctx_2_1):
        """Test no polynomial is produced when l(lambda) > p."""
        assert gz_from_creation_polynomials(ctx_2_1, YoungTableau.from_rows([[1], [2]])) == []
