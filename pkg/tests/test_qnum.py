from fractions import Fraction

import pytest

from qloop.qnum import (
    QParam,
    as_scalar,
    poly_divmod,
    poly_gcd,
    poly_mul,
    q_binom,
    q_factorial,
    q_int,
    scalar_str,
    truncated_exp_series,
    truncated_log_series,
)


class TestQInt:
    @pytest.mark.parametrize("q", [2, 3, Fraction(1, 2), -5])
    def test_small_values(self, q):
        assert q_int(1, q) == 1
        assert q_int(0, q) == 0

    def test_frozen_values(self):
        assert q_int(2, 2) == Fraction(5, 2)
        assert q_int(3, 2) == Fraction(21, 4)
        assert q_int(2, 3) == Fraction(10, 3)

    def test_odd(self):
        for m in range(-6, 7):
            assert q_int(-m, 2) == -q_int(m, 2)


def test_factorial_and_binomial():
    assert q_factorial(0, 2) == 1
    assert q_factorial(1, 2) == 1
    assert q_factorial(2, 2) == Fraction(5, 2)
    assert q_binom(2, 0, 2) == 1
    assert q_binom(2, 1, 2) == Fraction(5, 2)
    assert q_binom(3, 1, 2) == Fraction(21, 4)
    assert q_binom(3, 1, 2) == q_binom(3, 2, 2)
    with pytest.raises(ValueError):
        q_binom(2, 3, 2)


def test_factorial_is_exact_beyond_64_bits():
    big = q_factorial(12, 2)
    assert isinstance(big, Fraction)
    assert big.numerator > 2 ** 64
    assert big == q_factorial(11, 2) * q_int(12, 2)


class TestQParam:
    @pytest.mark.parametrize("bad", [0, 1, -1])
    def test_rejects_roots_of_unity(self, bad):
        with pytest.raises(ValueError):
            QParam(bad)

    def test_rejects_floats(self):
        with pytest.raises((TypeError, ValueError)):
            as_scalar(0.5)


def test_scalar_strings():
    assert scalar_str(Fraction(-5, 2)) == "-5/2"
    assert scalar_str(Fraction(3)) == "3"


class TestSeries:
    def test_exp_examples(self):
        assert truncated_exp_series({}, 3) == [1, 0, 0, 0]
        c = Fraction(3, 7)
        assert truncated_exp_series({1: c}, 2) == [1, c, c * c / 2]
        assert truncated_exp_series({1: -2}, 2) == [1, -2, 2]

    def test_exp_rejects_constant_term(self):
        with pytest.raises(ValueError):
            truncated_exp_series({0: 1}, 2)

    def test_log_of_linear_factor(self):
        # log(1 - u) = -u - u^2/2 - u^3/3
        assert truncated_log_series([1, -1], 3) == [0, -1, Fraction(-1, 2), Fraction(-1, 3)]

    def test_roundtrip(self):
        f = [Fraction(1), Fraction(2), Fraction(-1, 3), Fraction(5)]
        assert truncated_exp_series(truncated_log_series(f, 3), 3) == f


def test_polynomial_helpers():
    a = [Fraction(-1), Fraction(0), Fraction(1)]        # u^2 - 1
    b = [Fraction(1), Fraction(1)]                      # u + 1
    quo, rem = poly_divmod(a, b)
    assert quo == [-1, 1] and not rem
    assert poly_gcd(a, poly_mul(b, b)) == [1, 1]
