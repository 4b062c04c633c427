from fractions import Fraction

import numpy as np
import pytest

from qloop import linalg as la
from qloop.repcore.io import dumps, load_module, loads, module_to_dict, save_module
from qloop.repcore.module import (
    Module,
    direct_sum,
    dual,
    tensor,
    trivial_module,
    verify_presentation,
)
from qloop.sl2eval import eval_module


class TestPresentation:
    def test_trivial(self):
        assert verify_presentation(trivial_module(2)).passed

    def test_eval(self, q):
        for m in range(4):
            assert verify_presentation(eval_module(m, 2, q)).passed

    def test_perturbed_e0_fails(self):
        V = eval_module(1, 1, 2)
        bad = Module(V.weights, V.e1, V.f1, 2 * V.e0, V.f0, V.q)
        rep = verify_presentation(bad)
        assert not rep.passed
        assert any("e0" in name and "f0" in name for name in rep.failures)

    def test_weight_homogeneity_enforced(self):
        V = eval_module(1, 1, 2)
        with pytest.raises(ValueError):
            Module(V.weights, V.f1, V.f1, V.e0, V.f0, V.q)


class TestTensor:
    def test_counit(self):
        V = eval_module(2, 3, 2)
        VT = tensor(V, trivial_module(2))
        assert VT.same_matrices(V)

    def test_dims_and_weights(self, adjacent_pair):
        assert adjacent_pair.dim == 4
        assert sorted(adjacent_pair.weights) == [-2, 0, 0, 2]
        assert verify_presentation(adjacent_pair).passed

    def test_associative(self):
        U, V, W = eval_module(1, 1, 2), eval_module(1, 3, 2), eval_module(2, 5, 2)
        assert tensor(tensor(U, V), W).same_matrices(tensor(U, tensor(V, W)))

    def test_mismatched_q(self):
        with pytest.raises(ValueError):
            tensor(eval_module(1, 1, 2), eval_module(1, 1, 3))

    def test_direct_sum(self):
        S = direct_sum(eval_module(1, 1, 2), eval_module(2, 1, 2))
        assert S.dim == 5 and verify_presentation(S).passed


class TestDual:
    def test_trivial(self):
        assert dual(trivial_module(2)).same_matrices(trivial_module(2))

    def test_weights_and_presentation(self, q):
        V = tensor(eval_module(1, 1, q), eval_module(2, 3, q))
        D = dual(V)
        assert D.dim == V.dim
        assert D.weights == tuple(-w for w in V.weights)
        assert verify_presentation(D).passed

    def test_double_dual_is_conjugation_by_k(self):
        V = eval_module(2, 3, 2)
        dd = dual(dual(V))
        assert dd.weights == V.weights
        for g, (left, right) in {"e1": (V.kinv, V.k), "f1": (V.kinv, V.k),
                                 "e0": (V.k, V.kinv), "f0": (V.k, V.kinv)}.items():
            assert np.array_equal(dd.gen(g), la.mm(la.mm(left, V.gen(g)), right))


class TestJson:
    def test_roundtrip_exact(self, tmp_path):
        V = tensor(eval_module(1, Fraction(1, 3), 2), eval_module(1, 4, 2))
        text = dumps(V)
        assert loads(text).same_matrices(V)
        assert dumps(loads(text)) == text
        path = tmp_path / "v.json"
        save_module(V, path)
        assert load_module(path).same_matrices(V)

    def test_format(self):
        d = module_to_dict(eval_module(1, 1, 2))
        assert d["dim"] == 2 and d["q"] == "2" and d["weights"] == [1, -1]
        assert d["e1"] == [[0, 1, "1"]]
        assert d["label"] == "eval(1,1,2)"
