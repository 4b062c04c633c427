from fractions import Fraction

import pytest

from qloop.dpoly import (
    DrinfeldPoly,
    check_lweight_consistency,
    lweight_data,
    multiply,
    primitive_root,
    proportional_h,
    qstring,
)
from qloop.qnum import q_int, truncated_exp_series

ONE_MINUS_U = DrinfeldPoly.from_roots([(1, 1)])


class TestQString:
    def test_trivial(self):
        assert qstring(0, 1, 2).is_trivial

    def test_coefficients(self):
        assert qstring(1, 1, 2).coefficients() == [1, -1]
        assert qstring(2, 1, 2).coefficients() == [1, Fraction(-5, 2), 1]

    def test_rejects_zero_centre(self):
        with pytest.raises(ValueError):
            qstring(2, 0, 2)

    def test_roots(self):
        assert qstring(3, 1, 2).root_list() == [Fraction(1, 4), 1, 4]


class TestMonoid:
    def test_identity_and_square(self):
        pi = qstring(2, 3, 2)
        assert pi * DrinfeldPoly.trivial() == pi
        assert multiply(ONE_MINUS_U, ONE_MINUS_U) == DrinfeldPoly.from_roots([(1, 2)])

    def test_product_of_strings(self):
        prod = qstring(1, 1, 2) * qstring(1, 4, 2)
        assert prod.degree == 2
        assert prod == qstring(2, 2, 2)

    def test_rejects_bad_roots(self):
        with pytest.raises(ValueError):
            DrinfeldPoly.from_roots([(0, 1)])
        with pytest.raises(ValueError):
            DrinfeldPoly(((Fraction(1), 0),))

    def test_json_and_text(self):
        pi = DrinfeldPoly.from_roots([(Fraction(1, 2), 2), (3, 1)])
        assert DrinfeldPoly.from_json(pi.to_json()) == pi
        assert pi.to_json() == [{"a": "1/2", "p": 2}, {"a": "3", "p": 1}]
        assert str(pi) == "root(1/2,2)*root(3,1)"


class TestLWeight:
    def test_single_root(self):
        a = Fraction(3)
        data = lweight_data(DrinfeldPoly.from_roots([(a, 1)]), 2, 4)
        for r in range(1, 5):
            assert data.h[r] == q_int(r, 2) * a ** r / r
            assert data.h[-r] == q_int(r, 2) * a ** (-r) / r

    def test_phi_frozen(self):
        data = lweight_data(ONE_MINUS_U, 2, 3)
        assert data.phi_plus[0] == 2
        assert data.phi_plus[1] == 3
        assert data.phi_minus[0] == Fraction(1, 2)

    def test_trivial(self):
        data = lweight_data(DrinfeldPoly.trivial(), 2, 3)
        assert all(v == 0 for v in data.h.values())
        assert all(data.lam[r] == 0 for r in data.lam if r != 0)
        assert data.phi_plus[0] == 1
        assert all(data.phi_plus[r] == 0 for r in range(1, 4))

    def test_lambda_is_exp_of_minus_h_over_qint(self, q):
        pi = qstring(2, 1, q) * DrinfeldPoly.from_roots([(5, 2)])
        data = lweight_data(pi, q)
        R = data.window
        series = truncated_exp_series({s: -data.h[s] / q_int(s, q) for s in range(1, R + 1)}, R)
        assert series == [data.lam.get(r, 0) for r in range(R + 1)]
        assert check_lweight_consistency(pi, q)

    def test_lambda_range(self):
        data = lweight_data(qstring(2, 1, 2), 2)
        assert data.lam[0] == 1
        assert data.lam[1] == Fraction(-5, 2) and data.lam[2] == 1
        assert all(data.lam[r] == 0 for r in range(3, data.window + 1))

    def test_window_too_small(self):
        with pytest.raises(ValueError):
            lweight_data(qstring(3, 1, 2), 2, 2)


class TestVandermondeBookkeeping:
    def test_primitive_root(self):
        assert primitive_root(DrinfeldPoly.from_roots([(1, 2)])) == (ONE_MINUS_U, 2)
        assert primitive_root(qstring(2, 1, 2)) == (qstring(2, 1, 2), 1)
        pi = DrinfeldPoly.from_roots([(1, 2), (3, 4)])
        assert primitive_root(pi) == (DrinfeldPoly.from_roots([(1, 1), (3, 2)]), 2)
        with pytest.raises(ValueError):
            primitive_root(DrinfeldPoly.trivial())

    def test_proportional_h(self):
        assert proportional_h(ONE_MINUS_U, ONE_MINUS_U) == 1
        assert proportional_h(ONE_MINUS_U, ONE_MINUS_U ** 2) == Fraction(1, 2)
        assert proportional_h(ONE_MINUS_U, DrinfeldPoly.from_roots([(3, 1)])) is None
        for n in range(1, 5):
            pi = qstring(2, 1, 2)
            assert proportional_h(pi, pi ** n) == Fraction(1, n)

    def test_proportional_h_agrees_with_eigenvalues(self):
        p1, p2 = qstring(2, 1, 2) ** 2, qstring(2, 1, 2) ** 3
        c = proportional_h(p1, p2)
        d1, d2 = lweight_data(p1, 2), lweight_data(p2, 2, lweight_data(p1, 2).window)
        assert all(d1.h[r] == c * d2.h[r] for r in d1.h)
