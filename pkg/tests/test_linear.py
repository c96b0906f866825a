from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from bihom import DimensionMismatch, LinearMap, MultilinearMap, SingularMap, Vector
from bihom.linear import format_rational, lm_commute, lm_compose, lm_invert, ml_eval, to_rational

from conftest import rationals, vectors

A1 = LinearMap.from_columns([(2, 0), (1, 1)])
B1 = LinearMap.from_columns([(F(1, 2), 0), (F(-1, 2), 1)])


def ex1_mu():
    return MultilinearMap(2, 2, (((0, 1), 0, 1), ((1, 1), 0, 1)))


def matrices(n):
    return st.lists(rationals(), min_size=n * n, max_size=n * n).map(
        lambda v: LinearMap(tuple(tuple(v[r * n:(r + 1) * n]) for r in range(n)))
    )


class TestScalars:
    def test_to_rational(self):
        assert to_rational("3/6") == F(1, 2)
        assert to_rational(4) == F(4)
        with pytest.raises(TypeError):
            to_rational(0.5)
        with pytest.raises(TypeError):
            to_rational(True)

    def test_format(self):
        assert format_rational(F(6, 3)) == "2"
        assert format_rational(F(-3, 4)) == "-3/4"


class TestCompose:
    def test_identity_left(self):
        assert lm_compose(LinearMap.identity(2), A1) == A1

    def test_alpha_beta_inverse(self):
        assert lm_compose(A1, B1) == LinearMap.identity(2)

    def test_square(self):
        assert lm_compose(A1, A1) == LinearMap.from_columns([(4, 0), (3, 1)])

    def test_order(self):
        swap = LinearMap.from_columns([(0, 1), (1, 0)])
        dil = LinearMap.from_columns([(1, 0), (0, 2)])
        # g first, then f
        x = Vector((F(1), F(0)))
        assert lm_compose(swap, dil)(x) == swap(dil(x))

    def test_mismatch(self):
        with pytest.raises(DimensionMismatch):
            lm_compose(A1, LinearMap.identity(3))


class TestInvert:
    def test_identity(self):
        assert lm_invert(LinearMap.identity(4)) == LinearMap.identity(4)

    def test_alpha(self):
        assert lm_invert(A1) == B1

    def test_singular(self):
        with pytest.raises(SingularMap):
            lm_invert(LinearMap.from_columns([(1, 1), (1, 1)]))

    def test_negative_power(self):
        assert A1.power(-2) == lm_compose(B1, B1)

    @given(matrices(3))
    def test_inverse_property(self, m):
        if m.determinant() == 0:
            with pytest.raises(SingularMap):
                lm_invert(m)
        else:
            assert lm_compose(m, lm_invert(m)) == LinearMap.identity(3)
            assert lm_compose(lm_invert(m), m) == LinearMap.identity(3)


class TestCommute:
    def test_identity(self):
        assert lm_commute(LinearMap.identity(2), A1)

    def test_inverses(self):
        assert lm_commute(A1, B1)

    def test_noncommuting(self):
        assert not lm_commute(LinearMap.from_columns([(0, 1), (1, 0)]), LinearMap.from_columns([(1, 0), (0, 2)]))


class TestMultilinear:
    def test_zero_argument(self):
        assert ml_eval(ex1_mu(), [Vector.zero(2), Vector.basis(2, 1)]).is_zero()

    def test_listed_entries(self):
        e0, e1 = Vector.basis(2, 0), Vector.basis(2, 1)
        mu = ex1_mu()
        assert mu(e0, e1) == e0
        assert mu(e1, e1) == e0
        assert mu(e1, e0).is_zero()

    def test_linearity_example(self):
        e0, e1 = Vector.basis(2, 0), Vector.basis(2, 1)
        assert ex1_mu()(e0 + e1, e1) == e0 * 2

    def test_duplicate_entry(self):
        with pytest.raises(ValueError):
            MultilinearMap(2, 2, (((0, 1), 0, 1), ((0, 1), 0, 2)))

    def test_zero_coefficients_dropped(self):
        m = MultilinearMap(2, 2, (((0, 1), 0, 0), ((1, 1), 1, 3)))
        assert m.entries == (((1, 1), 1, F(3)),)

    def test_arity_mismatch(self):
        with pytest.raises(DimensionMismatch):
            ml_eval(ex1_mu(), [Vector.basis(2, 0)])

    @given(vectors(2), vectors(2), vectors(2), rationals(), rationals())
    def test_bilinear(self, x, y, z, a, b):
        mu = ex1_mu()
        assert mu(x * a + y * b, z) == mu(x, z) * a + mu(y, z) * b
        assert mu(z, x * a + y * b) == mu(z, x) * a + mu(z, y) * b

    @given(matrices(2), vectors(2))
    def test_linear_map_linear(self, m, x):
        assert m(x * 3 - x) == m(x) * 2
