import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from cfrieze import (
    BoundExceeded,
    ZeroDenominatorInCF,
    ZeroParameter,
    biparam_eval,
    continuant_det,
    continuant_eval,
    continuant_front_eval,
    continuant_sym,
    continued_fraction_eval,
    flip_sign,
    identity_suite,
    verify_identity,
)
from cfrieze.poly import C, Poly, X


def _x(j):
    return Poly.variable(X(j))


class TestEval:
    def test_order_two(self):
        assert continuant_eval(1, [1, 2]) == 3  # x1*x2 + c

    def test_order_three(self):
        assert continuant_eval(4, [2, -3, -1]) == 10

    def test_empty_window(self):
        assert continuant_eval(-1, []) == 1

    def test_zero_parameter(self):
        with pytest.raises(ZeroParameter):
            continuant_eval(0, [1])


class TestDet:
    def test_two_by_two(self):
        assert continuant_det(4, [2, -3]) == -2  # det [[2,-4],[1,-3]]

    def test_one_by_one(self):
        assert continuant_det(1, [5]) == 5

    def test_admissible_window_vanishes(self):
        assert continuant_det(-1, [1, 2, 2, 1]) == 0

    def test_zero_on_diagonal_pivots(self):
        # forces the row swap path in the elimination
        assert continuant_det(1, [0, 0, 0]) == continuant_eval(1, [0, 0, 0])


class TestFrontEval:
    def test_order_three(self):
        assert continuant_front_eval(4, [2, -3, -1]) == 10

    def test_single_value(self):
        assert continuant_front_eval(7, [-5]) == -5

    def test_negative_parameter(self):
        assert continuant_front_eval(-4, [3, 3, 4]) == 8


class TestContinuedFraction:
    def test_smallest(self):
        assert continued_fraction_eval(1, [1, 1]) == 2

    def test_quotient_of_continuants(self):
        value = continued_fraction_eval(4, [2, -3, -1])
        assert value == Fraction(10, 7)
        assert continuant_eval(4, [-3, -1]) == 7

    def test_zero_suffix(self):
        with pytest.raises(ZeroDenominatorInCF):
            continued_fraction_eval(1, [1, 0])

    def test_single_value(self):
        assert continued_fraction_eval(3, [9]) == 9

    def test_consistency_with_eval(self):
        rng = random.Random(7)
        for _ in range(100):
            k = rng.randint(1, 8)
            c = Fraction(rng.choice([v for v in range(-4, 5) if v]))
            xs = [Fraction(rng.randint(-4, 4)) for _ in range(k)]
            try:
                value = continued_fraction_eval(c, xs)
            except ZeroDenominatorInCF:
                continue
            assert value * continuant_eval(c, xs[1:]) == continuant_eval(c, xs)


class TestBiparam:
    def test_first_order(self):
        assert biparam_eval(2, 3, [5]) == 10

    def test_reduces_to_plain(self):
        assert biparam_eval(2, 3, [1, 2]) == 11
        assert continuant_eval(3, [2, 4]) == 11

    def test_unit_b(self):
        assert biparam_eval(1, -1, [1, 2, 2]) == 1

    def test_zero_b(self):
        with pytest.raises(ZeroParameter):
            biparam_eval(0, 1, [1])


class TestOracleAgreement:
    def test_three_routes_and_biparam(self):
        rng = random.Random(20240817)
        for _ in range(250):
            k = rng.randint(0, 12)
            c = Fraction(rng.choice([v for v in range(-5, 6) if v]),
                         rng.choice([1, 2, 3]))
            xs = [
                Fraction(rng.randint(-6, 6), rng.choice([1, 2]))
                for _ in range(k)
            ]
            b = Fraction(rng.choice([v for v in range(-3, 4) if v]))
            reference = continuant_eval(c, xs)
            assert continuant_det(c, xs) == reference
            assert continuant_front_eval(c, xs) == reference
            assert biparam_eval(b, c, xs) == continuant_eval(c, [b * x for x in xs])

    def test_positivity(self):
        rng = random.Random(99)
        for _ in range(200):
            k = rng.randint(1, 10)
            c = Fraction(rng.randint(1, 9), rng.choice([1, 2, 3]))
            xs = [Fraction(rng.randint(1, 9), rng.choice([1, 2])) for _ in range(k)]
            assert continuant_eval(c, xs) > 0

    @given(
        st.integers(1, 9),
        st.lists(st.integers(-6, 6), min_size=0, max_size=10),
        st.integers(-5, 5).filter(lambda v: v != 0),
    )
    @settings(max_examples=150)
    def test_scaling_numeric(self, cnum, xs, dnum):
        c, dd = Fraction(cnum), Fraction(dnum)
        k = len(xs)
        lhs = continuant_eval(c * dd * dd, [dd * x for x in xs])
        assert lhs == dd ** k * continuant_eval(c, xs)

    def test_modular_numeric(self):
        rng = random.Random(5)
        for _ in range(120):
            k = rng.randint(1, 10)
            c = Fraction(rng.choice([v for v in range(-4, 5) if v]))
            xs = [Fraction(rng.randint(-5, 5)) for _ in range(k + 1)]
            lhs = continuant_eval(c, xs[:k]) * continuant_eval(c, xs[1:]) - \
                continuant_eval(c, xs[1:k]) * continuant_eval(c, xs)
            assert lhs == (-c) ** k

    def test_signflip_numeric(self):
        rng = random.Random(13)
        for _ in range(150):
            k = rng.randint(0, 8)
            start = rng.randint(-4, 5)
            c = Fraction(rng.choice([v for v in range(-4, 5) if v]))
            xs = [Fraction(rng.randint(-5, 5)) for _ in range(k)]
            flipped = [
                -x if (start + m) % 2 else x for m, x in enumerate(xs)
            ]
            lhs = continuant_eval(-c, flipped) if k else Fraction(1)
            assert lhs == flip_sign(k, start) * continuant_eval(c, xs)


class TestSymbolic:
    def test_order_zero(self):
        assert continuant_sym(0) == Poly.const(1)

    def test_order_two(self):
        assert continuant_sym(2) == _x(1) * _x(2) + Poly.variable(C)

    def test_order_three(self):
        c = Poly.variable(C)
        expected = _x(1) * _x(2) * _x(3) + c * _x(1) + c * _x(3)
        assert continuant_sym(3) == expected

    def test_shifted_window(self):
        assert continuant_sym(2, start=4) == _x(4) * _x(5) + Poly.variable(C)

    def test_bound(self):
        with pytest.raises(BoundExceeded):
            continuant_sym(9)
        with pytest.raises(BoundExceeded):
            continuant_sym(-1)
        assert continuant_sym(10, bound=10)  # explicit bound raises the cap

    def test_term_count_is_fibonacci_like(self):
        # P_8 has 34 monomials
        assert len(continuant_sym(8).terms) == 34


class TestIdentities:
    def test_concat_example(self):
        assert verify_identity("concat", 2, 1) is None

    def test_modular_smallest(self):
        assert verify_identity("modular", 1) is None

    def test_signflip_mod4_case(self):
        assert verify_identity("signflip", 2, start_parity="even") is None

    def test_front_first_order(self):
        assert verify_identity("front", 1) is None

    def test_scaling(self):
        assert verify_identity("scaling", 4) is None

    def test_homogeneity(self):
        assert verify_identity("homogeneity", 5) is None

    def test_homogeneity_degree_values(self):
        # for the window x_1..x_k, the grading counting c and even-indexed
        # variables is constant at floor(k/2); with odd-indexed, ceil(k/2)
        from cfrieze.poly import C

        for k in range(0, 9):
            p = continuant_sym(k)
            degrees_even, degrees_odd = set(), set()
            for mono in p.terms:
                de = do = 0
                for var, exp in mono:
                    if var == C:
                        de += exp
                        do += exp
                    elif var[1] % 2 == 0:
                        de += exp
                    else:
                        do += exp
                degrees_even.add(de)
                degrees_odd.add(do)
            assert degrees_even == {k // 2}
            assert degrees_odd == {(k + 1) // 2}

    def test_unknown_kind(self):
        with pytest.raises(ValueError):
            verify_identity("nonsense", 1)

    def test_suite_all_green(self):
        results = identity_suite(6)
        assert results
        assert all(cert is None for _, cert in results)

    def test_sign_table(self):
        # k mod 4 -> sign, split by window-start parity
        assert flip_sign(4, 0) == flip_sign(4, 1) == 1
        assert flip_sign(2, 0) == flip_sign(2, 1) == -1
        assert flip_sign(1, 0) == 1 and flip_sign(1, 1) == -1
        assert flip_sign(3, 0) == -1 and flip_sign(3, 1) == 1
