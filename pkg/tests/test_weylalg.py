from fractions import Fraction

import numpy as np
import pytest

from qloop import linalg as la
from qloop.dpoly import DrinfeldPoly, qstring
from qloop.repcore.analysis import is_simple, spin
from qloop.repcore.module import verify_presentation
from qloop.sl2eval import eval_module, top_vector
from qloop.weylalg import (
    ALambdaAlgebra,
    ALambdaModule,
    evaluation_character,
    ext_weyl_dimension_check,
    ideal_I_quotient,
    ideal_generators,
    local_weyl,
    weyl_top_h_matches,
)


class TestALambda:
    def test_normal_form(self):
        A = ALambdaAlgebra(3)
        assert A.mul(A.generator(3), A.generator(-3)) == A.one()
        for s in (1, 2):
            assert A.mul(A.generator(3), A.generator(-s)) == A.generator(3 - s)
        assert A.generator(4) == {} and A.generator(0) == A.one()

    def test_evaluate(self):
        A = ALambdaAlgebra(2)
        vals = {1: Fraction(-5, 2), 2: Fraction(1)}
        assert A.evaluate(A.word([1, -1]), vals) == Fraction(25, 4)

    def test_module_checks(self):
        with pytest.raises(ValueError):
            ALambdaModule(1, {1: la.mat([[0, 1], [0, 0]])})
        with pytest.raises(ValueError):
            ALambdaModule(2, {1: la.mat([[1, 1], [0, 1]]), 2: la.mat([[1, 0], [0, 2]])})

    def test_negative_action(self):
        M = evaluation_character(qstring(2, 1, 2), 2)
        assert M.act(-1)[0, 0] == Fraction(-5, 2)
        assert M.act(-2)[0, 0] == 1
        assert M.act(5)[0, 0] == 0


class TestEvaluationCharacter:
    def test_examples(self):
        assert evaluation_character(DrinfeldPoly.from_roots([(1, 1)]), 1).matrices[1][0, 0] == -1
        M = evaluation_character(qstring(2, 1, 2), 2)
        assert M.matrices[1][0, 0] == Fraction(-5, 2) and M.matrices[2][0, 0] == 1
        assert evaluation_character(DrinfeldPoly.trivial(), 0).dim == 1

    def test_degree_mismatch(self):
        with pytest.raises(ValueError):
            evaluation_character(qstring(2, 1, 2), 3)


class TestIdeal:
    def test_m1_frozen(self):
        I = ideal_I_quotient(1, 1, 2)
        assert I.codimension == 2
        L1 = I.module.matrices[1]
        assert L1.tolist() == [[0, -4], [1, -4]]
        # single Jordan block at -2a[m] = -2
        N = L1 + 2 * la.eye(2)
        assert not la.is_zero(N) and la.is_zero(la.mm(N, N))

    def test_membership_and_non_split(self, q):
        for m in (1, 2, 3):
            for a in (1, 2):
                I = ideal_I_quotient(m, a, q)
                assert I.codimension == 2 and I.membership and I.non_split

    def test_generators_vanish_on_coefficients(self):
        for m in (1, 2):
            d = (qstring(m, 1, 2) ** 2).coefficients()
            assert [g(d) for g in ideal_generators(m, 1, 2)] == [0] * (2 * m + 2)

    def test_last_generator_identically_zero(self):
        gens = ideal_generators(2, 1, 2)
        assert gens[4]([Fraction(7), Fraction(3), Fraction(1), Fraction(2), Fraction(5)]) == 0

    def test_top_generator_is_not_in_the_codim_two_ideal(self):
        # imposing the r = 2m - 1 generator as well cuts the quotient to dimension 1
        I = ideal_I_quotient(2, 1, 2)
        assert I.literal_codimension == 1
        assert not la.is_zero(I.top_residual)


class TestLocalWeyl:
    def test_single_factor(self):
        W = local_weyl(qstring(1, 3, 2), 2)
        assert W.same_matrices(eval_module(1, 3, 2))
        assert is_simple(W).simple

    def test_adjacent_pair(self):
        W = local_weyl(qstring(1, 1, 2) * qstring(1, 4, 2), 2)
        assert W.dim == 4
        assert len(spin(W, top_vector(W))) == 4
        assert not is_simple(W).simple

    def test_square_dims(self, q):
        for m in (1, 2):
            W = local_weyl(qstring(m, 1, q) ** 2, q)
            assert W.dim == 2 ** (2 * m)
            assert verify_presentation(W).passed
            assert len(spin(W, top_vector(W))) == W.dim

    def test_weight_multiplicities_binomial(self):
        W = local_weyl(qstring(3, 1, 2), 2)
        counts = {w: W.weights.count(w) for w in set(W.weights)}
        assert counts == {3: 1, 1: 3, -1: 3, -3: 1}

    def test_top_h(self):
        assert weyl_top_h_matches(qstring(2, 1, 2) ** 2, 2)

    def test_trivial_rejected(self):
        with pytest.raises(ValueError):
            local_weyl(DrinfeldPoly.trivial(), 2)


class TestExtWeyl:
    @pytest.mark.parametrize("pi", [qstring(1, 1, 2), qstring(1, 1, 2) ** 2,
                                    qstring(1, 1, 2) * qstring(1, 4, 2)], ids=str)
    def test_dimension(self, pi):
        computed, expected = ext_weyl_dimension_check(pi, 2)
        assert computed == expected == pi.degree
