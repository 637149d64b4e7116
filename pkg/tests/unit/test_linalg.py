"""Unit tests for exact rational linear algebra."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from services.linalg.matrix import (
    LinalgError,
    RatMatrix,
    inverse,
    nullspace,
    pivot_columns,
    psd_check,
    quadratic_form,
    rank,
    solve_in_span,
)
from services.linalg.rational import common_denominator, format_rational, parse_rational, pochhammer, to_fraction

pytestmark = pytest.mark.unit

small_ints = st.integers(min_value=-5, max_value=5)
square_matrices = st.integers(min_value=1, max_value=4).flatmap(
    lambda n: st.lists(st.lists(small_ints, min_size=n, max_size=n), min_size=n, max_size=n)
)


class TestRational:
    """Test scalar helpers."""

    def test_wire_format(self):
        """Test "num/den" always carries the denominator."""
        assert format_rational(Fraction(-1, 12)) == "-1/12"
        assert format_rational(3) == "3/1"
        assert parse_rational("-1/12") == Fraction(-1, 12)

    def test_bool_rejected(self):
        """Test booleans are not treated as rationals."""
        with pytest.raises(TypeError):
            to_fraction(True)
        with pytest.raises(TypeError):
            to_fraction(0.5)

    def test_common_denominator(self):
        """Test lcm of denominators."""
        assert common_denominator([Fraction(1, 4), Fraction(1, 6), 2]) == 12
        assert common_denominator([]) == 1

    def test_pochhammer(self):
        """Test the rising factorial, including a vanishing one."""
        assert pochhammer(3, 2) == 12
        assert pochhammer(-1, 3) == 0
        assert pochhammer(Fraction(1, 2), 0) == 1


class TestRatMatrix:
    """Test matrix construction and arithmetic."""

    def test_ragged_rows_rejected(self):
        """Test rows of different length raise LinalgError."""
        with pytest.raises(LinalgError):
            RatMatrix([[1, 2], [3]])

    def test_product_and_transpose(self):
        """Test matrix product and transpose."""
        a = RatMatrix([[1, 2], [3, 4]])
        assert (a @ RatMatrix.identity(2)) == a
        assert a.transpose().rows == ((1, 3), (2, 4))
        assert a.apply([1, -1]) == (-1, -1)
        with pytest.raises(LinalgError):
            a @ RatMatrix([[1, 2, 3]])

    def test_from_columns(self):
        """Test building from columns."""
        m = RatMatrix.from_columns([(1, 2), (3, 4), (5, 6)], 2)
        assert m.shape == (2, 3)
        assert m.column(2) == (5, 6)

    def test_json(self):
        """Test the json form keeps exact values."""
        m = RatMatrix([[Fraction(-1, 2), 0], [0, Fraction(1, 12)]])
        assert m.to_json() == [["-1/2", "0/1"], ["0/1", "1/12"]]
        assert RatMatrix.from_json(m.to_json()) == m

    def test_triangular(self):
        """Test upper triangular detection."""
        assert RatMatrix([[1, 2], [0, 3]]).is_upper_triangular()
        assert not RatMatrix([[1, 2], [1, 3]]).is_upper_triangular()


class TestElimination:
    """Test rank, pivots, span solving, kernels and inverses."""

    def test_rank_and_pivots(self):
        """Test pivots are the first independent columns."""
        m = RatMatrix([[1, 2, 0, 1], [2, 4, 0, 3]])
        assert pivot_columns(m) == (0, 3)
        assert rank(m) == 2
        assert rank(RatMatrix.zeros(2, 3)) == 0

    def test_solve_in_span(self):
        """Test finding and failing to find span coefficients."""
        basis = RatMatrix.from_columns([(1, 0, 1), (0, 1, 1)], 3)
        found = solve_in_span(basis, (2, 3, 5))
        assert found.found and found.coefficients == (2, 3)
        missing = solve_in_span(basis, (1, 1, 0))
        assert not missing.found and missing.coefficients is None

    def test_nullspace(self):
        """Test kernel vectors are annihilated."""
        m = RatMatrix([[1, 2, 3], [2, 4, 6]])
        kernel = nullspace(m)
        assert len(kernel) == 2
        for vector in kernel:
            assert m.apply(vector) == (0, 0)

    def test_inverse(self):
        """Test the inverse of the worked transition block."""
        t = RatMatrix([[Fraction(-1, 2), Fraction(-1, 2), Fraction(-1, 12)], [0, Fraction(-1, 3), Fraction(-1, 12)], [0, 0, Fraction(-1, 12)]])
        assert inverse(t) == RatMatrix([[-2, 3, -1], [0, -3, 3], [0, 0, -12]])

    def test_singular_inverse(self):
        """Test inverting a singular matrix raises."""
        with pytest.raises(LinalgError):
            inverse(RatMatrix([[1, 2], [2, 4]]))

    @given(square_matrices)
    def test_rank_nullity(self, rows):
        """Test rank + nullity = number of columns."""
        m = RatMatrix(rows)
        assert rank(m) + len(nullspace(m)) == m.shape[1]

    @given(square_matrices)
    def test_inverse_when_full_rank(self, rows):
        """Test A A^{-1} = I whenever A has full rank."""
        m = RatMatrix(rows)
        if rank(m) == m.shape[0]:
            assert m @ inverse(m) == RatMatrix.identity(m.shape[0])


class TestPsd:
    """Test the exact PSD decision."""

    def test_psd(self):
        """Test a semidefinite Gram matrix passes."""
        assert psd_check(RatMatrix([[4, 2], [2, 1]])).is_psd
        assert psd_check(RatMatrix([[0, 0], [0, 0]])).is_psd

    def test_negative_witness(self):
        """Test an indefinite matrix yields a negative-norm witness."""
        gram = RatMatrix([[1, 2], [2, 1]])
        result = psd_check(gram)
        assert not result.is_psd
        assert quadratic_form(gram, result.witness) < 0

    def test_zero_diagonal_witness(self):
        """Test the witness when both diagonal entries vanish."""
        gram = RatMatrix([[0, 1], [1, 0]])
        result = psd_check(gram)
        assert not result.is_psd
        assert quadratic_form(gram, result.witness) < 0

    def test_non_symmetric_rejected(self):
        """Test psd_check refuses non-symmetric input."""
        with pytest.raises(LinalgError):
            psd_check(RatMatrix([[1, 2], [0, 1]]))

    @given(st.lists(st.lists(small_ints, min_size=3, max_size=3), min_size=1, max_size=4))
    def test_gram_of_vectors_is_psd(self, vectors):
        """Test V^T V is always PSD."""
        v = RatMatrix(vectors)
        assert psd_check(v.transpose() @ v).is_psd
