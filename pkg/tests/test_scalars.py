"""Tests for exact field elements and matrices."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from torus_tqft.exceptions import FieldMismatchError, ParseError, ZeroDivisionFieldError
from torus_tqft.scalars import (
    CYCLOTOMIC3,
    RATIONALS,
    SQRT2,
    FieldMatrix,
    field_mul,
    format_scalar,
    parse_scalar,
    sqrt2_power,
    two_adic_valuation,
)

rationals = st.fractions(max_denominator=50).filter(lambda x: abs(x) < 1000)


def xi_element(a, b):
    return CYCLOTOMIC3.element(a, b)


@pytest.mark.unit
class TestFieldElement:
    """Arithmetic in Q, Q(sqrt2) and Q(xi)."""

    def test_defining_relations(self):
        xi = CYCLOTOMIC3.generator()
        root = SQRT2.generator()
        assert xi * xi == xi_element(-1, -1)
        assert xi**3 == 1
        assert root * root == 2

    def test_sqrt2_power(self):
        assert sqrt2_power(0) == 1
        assert sqrt2_power(2) == 2
        assert sqrt2_power(3) == SQRT2.element(0, 2)
        assert sqrt2_power(-1) == SQRT2.element(0, Fraction(1, 2))
        assert sqrt2_power(-3) * sqrt2_power(3) == 1

    def test_inverse(self):
        x = xi_element(1, 2)
        assert x * x.inv() == 1
        assert 1 / x == x.inv()

    def test_rational_inverse(self):
        two = RATIONALS.element(2)
        assert two.inv() == Fraction(1, 2)
        assert two * two.inv() == 1
        assert RATIONALS.element(Fraction(-3, 7)).inv() == Fraction(-7, 3)
        assert two**-2 == Fraction(1, 4)

    def test_zero_inverse_raises(self):
        with pytest.raises(ZeroDivisionFieldError):
            SQRT2.zero().inv()
        with pytest.raises(ZeroDivisionError):
            RATIONALS.one() / RATIONALS.zero()

    def test_mixing_extensions_raises(self):
        with pytest.raises(FieldMismatchError):
            SQRT2.generator() + CYCLOTOMIC3.generator()
        with pytest.raises(FieldMismatchError):
            field_mul(SQRT2.one(), CYCLOTOMIC3.one())

    def test_rationals_lift_into_extensions(self):
        total = RATIONALS.element(1) + SQRT2.generator()
        assert total == SQRT2.element(1, 1)
        assert RATIONALS.element(3) == SQRT2.element(3)

    def test_rational_field_rejects_generator(self):
        with pytest.raises(FieldMismatchError):
            RATIONALS.element(1, 1)

    def test_conjugate_and_norm(self):
        x = xi_element(2, 1)
        assert x * x.conjugate() == x.norm()
        assert SQRT2.element(1, 1).norm() == -1

    @pytest.mark.property
    @given(rationals, rationals, rationals, rationals)
    def test_multiplication_is_commutative_and_invertible(self, a, b, c, d):
        x, y = xi_element(a, b), xi_element(c, d)
        assert x * y == y * x
        if not y.is_zero():
            assert (x / y) * y == x


@pytest.mark.unit
class TestScalarText:
    """Textual form of scalars."""

    def test_format(self):
        assert format_scalar(xi_element(0, -1)) == "-xi"
        assert format_scalar(xi_element(1, -2)) == "1 - 2*xi"
        assert format_scalar(RATIONALS.element(Fraction(145065, 8))) == "145065/8"
        assert format_scalar(SQRT2.element(Fraction(1, 2), Fraction(3, 4))) == "1/2 + 3/4*sqrt2"

    def test_parse(self):
        assert parse_scalar("1 - 2*xi", CYCLOTOMIC3) == xi_element(1, -2)
        assert parse_scalar("1 + -3*xi", CYCLOTOMIC3) == xi_element(1, -3)
        assert parse_scalar("-xi", CYCLOTOMIC3) == xi_element(0, -1)
        assert parse_scalar("xi", CYCLOTOMIC3) == CYCLOTOMIC3.generator()
        assert parse_scalar("1/2", RATIONALS) == Fraction(1, 2)
        assert parse_scalar("-1/2 - 3/4*sqrt2", SQRT2) == SQRT2.element(
            Fraction(-1, 2), Fraction(-3, 4)
        )

    @pytest.mark.parametrize("text", ["", "abc", "1/0", "w", "1 + xi*2"])
    def test_parse_errors(self, text):
        descriptor = RATIONALS if text in ("", "abc", "1/0", "w") else CYCLOTOMIC3
        with pytest.raises(ParseError):
            parse_scalar(text, descriptor)

    @pytest.mark.property
    @given(rationals, rationals)
    def test_format_parse_inverse(self, a, b):
        x = SQRT2.element(a, b)
        assert parse_scalar(format_scalar(x), SQRT2) == x


@pytest.mark.unit
class TestTwoAdicValuation:
    def test_values(self):
        assert two_adic_valuation(Fraction(3, 64)) == -6
        assert two_adic_valuation(12) == 2
        assert two_adic_valuation(RATIONALS.element(Fraction(5, 2))) == -1

    def test_zero_raises(self):
        with pytest.raises(ZeroDivisionFieldError):
            two_adic_valuation(0)

    def test_irrational_raises(self):
        with pytest.raises(FieldMismatchError):
            two_adic_valuation(SQRT2.generator())


@pytest.mark.unit
class TestFieldMatrix:
    """Exact matrices."""

    def setup_method(self):
        self.m = FieldMatrix.from_rows(CYCLOTOMIC3, [[1, 2], [CYCLOTOMIC3.generator(), 3]])

    def test_identity_is_neutral(self):
        one = FieldMatrix.identity(CYCLOTOMIC3, 2)
        assert one @ self.m == self.m
        assert self.m @ one == self.m

    def test_inverse(self):
        one = FieldMatrix.identity(CYCLOTOMIC3, 2)
        assert self.m @ self.m.inverse() == one
        assert self.m**-2 @ self.m**2 == one

    def test_singular_inverse_raises(self):
        singular = FieldMatrix.from_rows(RATIONALS, [[1, 2], [2, 4]])
        with pytest.raises(ZeroDivisionFieldError):
            singular.inverse()

    def test_rational_matrix_inverse(self):
        diag = FieldMatrix.from_rows(RATIONALS, [[2, 0], [0, 1]])
        assert diag.inverse() == FieldMatrix.from_rows(RATIONALS, [[Fraction(1, 2), 0], [0, 1]])
        m = FieldMatrix.from_rows(RATIONALS, [[2, 1], [7, 4]])
        assert m.inverse() == FieldMatrix.from_rows(RATIONALS, [[4, -1], [-7, 2]])

    def test_sqrt2_inverse(self):
        root = SQRT2.generator()
        m = FieldMatrix.from_rows(SQRT2, [[root, 1], [0, root]])
        half = Fraction(1, 2)
        expected = FieldMatrix.from_rows(SQRT2, [[root * half, -half], [0, root * half]])
        assert m.inverse() == expected
        assert m @ m.inverse() == FieldMatrix.identity(SQRT2, 2)

    def test_singular_over_extension_raises(self):
        xi = CYCLOTOMIC3.generator()
        singular = FieldMatrix.from_rows(CYCLOTOMIC3, [[1, xi], [xi, xi * xi]])
        with pytest.raises(ZeroDivisionFieldError):
            singular.inverse()

    def test_kron_shape_and_index(self):
        a = FieldMatrix.from_rows(RATIONALS, [[1, 2], [3, 4]])
        b = FieldMatrix.from_rows(RATIONALS, [[0, 5, 6]])
        k = a.kron(b)
        assert k.shape == (2, 6)
        assert k[1, 5] == 4 * 6
        assert k[0, 1] == 5

    def test_swap_exchanges_tensor_factors(self):
        u = FieldMatrix.column(RATIONALS, [1, 2, 3])
        w = FieldMatrix.column(RATIONALS, [4, 5, 6])
        swap = FieldMatrix.swap(RATIONALS, 3)
        assert swap @ u.kron(w) == w.kron(u)
        assert swap @ swap == FieldMatrix.identity(RATIONALS, 9)

    def test_block_swap_moves_first_block_last(self):
        vs = [FieldMatrix.column(RATIONALS, [i, 1]) for i in range(3)]
        tau = FieldMatrix.block_swap(RATIONALS, 2, 1, 2)
        assert tau @ vs[0].kron(vs[1]).kron(vs[2]) == vs[1].kron(vs[2]).kron(vs[0])

    def test_trace_and_transpose(self):
        assert self.m.trace() == 4
        assert self.m.transpose()[0, 1] == CYCLOTOMIC3.generator()

    def test_differing_entries(self):
        other = FieldMatrix.from_rows(CYCLOTOMIC3, [[1, 2], [0, 3]])
        assert self.m.differing_entries(other) == [(1, 0)]

    def test_mixed_fields_raise(self):
        with pytest.raises(FieldMismatchError):
            self.m @ FieldMatrix.identity(SQRT2, 2)
