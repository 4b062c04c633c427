from fractions import Fraction

import pytest

from qloop.repcore.module import verify_presentation
from qloop.sl2eval import (
    EvalModuleSpec,
    check_genrel_single,
    check_genrel_square,
    eval_module,
    weyl_quotient_dims,
    xr_closed_form,
)


def test_eval_shape():
    for m in range(5):
        V = eval_module(m, 1, 2)
        assert V.dim == m + 1
        assert sorted(V.weights) == list(range(-m, m + 1, 2))
    assert eval_module(0, 1, 2).dim == 1


def test_eval_entries():
    V = eval_module(1, 1, 2)
    assert V.f1[1, 0] == 1
    assert xr_closed_form(EvalModuleSpec(1, 1, 2), "-", 1)[1, 0] == 2
    assert V.label == "eval(1,1,2)"


def test_rejects_zero_parameter():
    with pytest.raises(ValueError):
        eval_module(1, 0, 2)


def test_presentation(q):
    for m in range(4):
        assert verify_presentation(eval_module(m, Fraction(2, 3), q)).passed


class TestGenrel:
    def test_single(self, q):
        for m in (1, 2, 3):
            assert check_genrel_single(m, 1, q)
        assert not check_genrel_single(2, 1, 2, coefficient=2 ** 3)

    def test_square(self, q):
        for m in (1, 2, 3):
            assert check_genrel_square(m, 1, q)
        assert not check_genrel_square(2, 1, 2, middle=3 * 4)

    def test_weyl_quotient(self):
        assert weyl_quotient_dims(1, 1, 2) == (4, 4)
        assert weyl_quotient_dims(2, 1, 2) == (16, 9)
        assert weyl_quotient_dims(2, 1, 2, middle=-8)[1] != 9
