from fractions import Fraction

from hypothesis import given, strategies as st

from cfrieze.poly import C, D, Poly, X


def _x(j):
    return Poly.variable(X(j))


c = Poly.variable(C)
d = Poly.variable(D)


@st.composite
def polys(draw):
    terms = draw(st.integers(0, 4))
    p = Poly.zero()
    for _ in range(terms):
        coeff = draw(st.integers(-5, 5))
        mono = Poly.const(coeff)
        for var in (C, D, X(1), X(2), X(-3)):
            mono = mono * Poly.variable(var) ** draw(st.integers(0, 2))
        p = p + mono
    return p


class TestAlgebra:
    def test_zero_coefficients_dropped(self):
        assert (_x(1) - _x(1)).is_zero()
        assert (_x(1) + _x(2)) - _x(2) == _x(1)

    def test_equality_is_structural(self):
        assert _x(1) * _x(2) + c == c + _x(2) * _x(1)

    @given(polys(), polys(), polys())
    def test_ring_laws(self, p, q, r):
        assert p + q == q + p
        assert p * q == q * p
        assert (p + q) + r == p + (q + r)
        assert p * (q + r) == p * q + p * r

    def test_power(self):
        assert (_x(1) + c) ** 2 == _x(1) ** 2 + 2 * _x(1) * c + c * c

    def test_scalar_multiplication(self):
        assert Fraction(1, 2) * (_x(1) + _x(1)) == _x(1)


class TestSubstitute:
    def test_negate_variable(self):
        p = _x(1) * _x(2) + c
        q = p.substitute({X(1): -_x(1), C: -c})
        assert q == -(_x(1) * _x(2)) - c

    def test_scale_variable(self):
        p = _x(1) * _x(2) + c
        q = p.substitute({X(1): d * _x(1), X(2): d * _x(2), C: c * d * d})
        assert q == d * d * p

    def test_unmapped_variables_stay(self):
        p = _x(1) + _x(2)
        assert p.substitute({X(1): Poly.const(0)}) == _x(2)


class TestText:
    def test_canonical_form(self):
        assert str(_x(1) * _x(2) + c) == "x1*x2 + c"

    def test_third_order(self):
        p = _x(1) * _x(2) * _x(3) + c * _x(1) + c * _x(3)
        assert str(p) == "x1*x2*x3 + c*x1 + c*x3"

    def test_signs_and_coefficients(self):
        assert str(-2 * _x(1) + Poly.const(Fraction(1, 2))) == "-2*x1 + 1/2"
        assert str(Poly.zero()) == "0"

    def test_exponents_and_negative_indices(self):
        assert str(_x(-2) ** 2 * c) == "c*x-2^2"
