"""Named verification suites shared by the CLI and the acceptance tests.

Each suite returns a list of :class:`Check` records.  ``criterion`` ties a
check to an acceptance item number so the tests can group them.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import numpy as np

from . import linalg as la
from .dpoly import lweight_data, primitive_root, proportional_h, qstring
from .qnum import as_qparam, q_int, scalar_str
from .repcore.analysis import highest_lweight_vectors, is_simple
from .repcore.drinfeld import drinfeld_matrices
from .repcore.module import dual, tensor, verify_presentation
from .selfext import class_of, ext1, graded_twist, walkprop_forcing_check
from .sl2eval import (
    check_genrel_single,
    check_genrel_square,
    eval_module,
    top_vector,
    weyl_quotient_dims,
    xr_closed_form,
    EvalModuleSpec,
)
from .weylalg import ext_weyl_dimension_check, ideal_I_quotient, local_weyl

SUITES = ("presentation", "drinfeld-oracle", "theorem1", "weyl", "ideal", "walkprop")


@dataclass
class Check:
    name: str
    expected: str
    computed: str
    passed: bool
    criterion: int

    def as_dict(self) -> dict:
        return {"name": self.name, "expected": self.expected, "computed": self.computed, "pass": self.passed}


def _fmt(x) -> str:
    if isinstance(x, bool) or x is None:
        return str(x).lower() if isinstance(x, bool) else "none"
    if isinstance(x, Fraction):
        return scalar_str(x)
    if isinstance(x, (list, tuple)):
        return "(" + ",".join(_fmt(v) for v in x) + ")"
    return str(x)


def _check(out: list, criterion: int, name: str, expected, computed, passed: bool | None = None):
    if passed is None:
        passed = computed == expected
    out.append(Check(name, _fmt(expected), _fmt(computed), bool(passed), criterion))


def _qtag(q) -> str:
    return f"q={scalar_str(as_qparam(q).q)}"


def presentation_suite(q=2, m_max: int = 3, window: int | None = None) -> list[Check]:
    q = as_qparam(q)
    out: list[Check] = []
    evals = [eval_module(m, a, q) for m in range(1, m_max + 1) for a in (1, 2)]
    modules = list(evals)
    for i, V in enumerate(evals):
        for W in evals[i:]:
            if V.dim * W.dim <= 16:
                modules.append(tensor(V, W))
    modules += [graded_twist(V) for V in evals]
    modules += [dual(V) for V in modules[:len(evals) + 3]]
    qq = q.q
    weyl_pis = [qstring(1, 1, q) ** 2, qstring(1, 1, q) * qstring(1, 4, q),
                qstring(2, 1, q) ** 2, qstring(2, 1, q) * qstring(2, qq ** 6, q),
                qstring(1, 1, q) * qstring(1, qq ** 2, q) * qstring(1, qq ** 7, q)]
    modules += [local_weyl(pi, q) for pi in weyl_pis]
    for V in modules:
        rep = verify_presentation(V)
        _check(out, 1, f"presentation {V.label} {_qtag(q)}", "all residuals 0",
               "all residuals 0" if rep.passed else "fails: " + ",".join(rep.failures[:4]), rep.passed)
    return out


def drinfeld_oracle_suite(q=2, m_max: int = 3, window: int | None = None) -> list[Check]:
    q = as_qparam(q)
    R = window or 3
    dq = q.q - 1 / q.q
    out: list[Check] = []
    for m in range(1, m_max + 1):
        for a in (1, 2):
            spec = EvalModuleSpec(m, a, q)
            V = eval_module(spec)
            D = drinfeld_matrices(V, R)
            mism = [f"x{s}{r}" for r in range(-R, R + 1) for s, X in (("+", D.xplus), ("-", D.xminus))
                    if not np.array_equal(X[r], xr_closed_form(spec, s, r))]
            _check(out, 2, f"closed form x^+-_r eval({m},{a}) |r|<={R} {_qtag(q)}", "no mismatch",
                   "no mismatch" if not mism else ",".join(mism), not mism)
            v = top_vector(V)
            data = lweight_data(qstring(m, a, q), q, R)
            ok = True
            for r in range(1, R + 1):
                closed_p = dq * (a * q.q ** m) ** r * q_int(m, q)
                closed_m = -dq * (a * q.q ** m) ** (-r) * q_int(m, q)
                got_p = D.phi_plus[r].dot(v)[0]
                got_m = D.phi_minus[-r].dot(v)[0]
                ok &= got_p == closed_p == data.phi_plus[r]
                ok &= got_m == closed_m == data.phi_minus[-r]
                ok &= D.h[r].dot(v)[0] == Fraction(a) ** r * q_int(r * m, q) / r == data.h[r]
            _check(out, 2, f"phi/h top eigenvalues eval({m},{a}) {_qtag(q)}", True, ok)
    return out


def theorem1_suite(q=2, m_max: int = 3, window: int | None = None) -> list[Check]:
    q = as_qparam(q)
    qq = q.q
    out: list[Check] = []
    for m in range(1, m_max + 1):
        V = eval_module(m, 1, q)
        E = ext1(V)
        cls = class_of(graded_twist(V), V, E)
        _check(out, 3, f"class of E(eval({m},1)) nonzero {_qtag(q)}", "nonzero", _fmt(cls), any(cls))
        lines = [s for s in highest_lweight_vectors(graded_twist(V)) if s.eigen]
        _check(out, 3, f"E(eval({m},1)) highest-l-weight lines {_qtag(q)}", 1, sum(s.dim for s in lines))
        _check(out, 4, f"dim Ext1(eval({m},1)) {_qtag(q)}", 1, E.dim)
    V12 = tensor(eval_module(1, 1, q), eval_module(1, qq ** 4, q))
    E12 = ext1(V12)
    cls = class_of(graded_twist(V12), V12, E12)
    _check(out, 3, f"class of E(eval(1,1)(x)eval(1,q^4)) nonzero {_qtag(q)}", "nonzero", _fmt(cls), any(cls))
    lines = [s for s in highest_lweight_vectors(graded_twist(V12)) if s.eigen]
    _check(out, 3, f"E(eval(1,1)(x)eval(1,q^4)) highest-l-weight lines {_qtag(q)}", 1,
           sum(s.dim for s in lines))
    for m in (1, 2):
        V = eval_module(m, 1, q)
        d = ext1(tensor(V, V)).dim
        _check(out, 5, f"dim Ext1(eval({m},1)^2) {_qtag(q)}", ">=2", d, d >= 2)
    simple = is_simple(V12)
    _check(out, 7, f"eval(1,1)(x)eval(1,q^4) simple {_qtag(q)}", True, simple.simple)
    d1 = ext1(eval_module(1, 1, q)).dim
    _check(out, 7, f"dim Ext1(V1(x)V2) >= dim Ext1(V1) {_qtag(q)}", f">={d1}", E12.dim, E12.dim >= d1 == 1)
    for m in (1, 2):
        for a in (1, 2):
            V = eval_module(m, a, q)
            _check(out, 10, f"eval({m},{a}) simple {_qtag(q)}", True, is_simple(V).simple)
            _check(out, 10, f"eval({m},{a})^2 simple {_qtag(q)}", True, is_simple(tensor(V, V)).simple)
    adj = tensor(eval_module(1, 1, q), eval_module(1, qq ** 2, q))
    res = is_simple(adj)
    cert_ok = res.certificate is not None
    if cert_ok:
        from .repcore.analysis import spin
        cert_ok = len(spin(adj, res.certificate)) < adj.dim
    _check(out, 10, f"eval(1,1)(x)eval(1,q^2) not simple with certificate {_qtag(q)}", "false+certificate",
           f"{_fmt(res.simple)}+{'certificate' if cert_ok else 'none'}", res.simple is False and cert_ok)
    pi0 = qstring(1, 1, q)
    for s in (1, 2, 3):
        root, power = primitive_root(pi0 ** s)
        _check(out, 11, f"primitive_root(str(1,1)^{s}) {_qtag(q)}", ("str(1,1)", s),
               ("str(1,1)" if root == pi0 else str(root), power), root == pi0 and power == s)
        c = proportional_h(pi0, pi0 ** s)
        _check(out, 11, f"proportional_h(str(1,1), str(1,1)^{s}) {_qtag(q)}", Fraction(1, s), c)
    return out


def weyl_suite(q=2, m_max: int = 3, window: int | None = None) -> list[Check]:
    q = as_qparam(q)
    qq = q.q
    out: list[Check] = []
    cases = [("str(1,1)", qstring(1, 1, q)), ("str(1,1)^2", qstring(1, 1, q) ** 2),
             ("str(1,1)*str(1,4)", qstring(1, 1, q) * qstring(1, 4, q)),
             ("str(2,1)*str(2,q^6)", qstring(2, 1, q) * qstring(2, qq ** 6, q))]
    for name, pi in cases:
        computed, expected = ext_weyl_dimension_check(pi, q)
        _check(out, 6, f"dim Ext1(W({name})) = deg {_qtag(q)}", expected, computed)
    for m in range(1, m_max + 1):
        _check(out, 9, f"genrel single m={m} {_qtag(q)}", True, check_genrel_single(m, 1, q))
        _check(out, 9, f"genrel square m={m} {_qtag(q)}", True, check_genrel_square(m, 1, q))
    _check(out, 9, f"weyl_quotient_dims m=2 {_qtag(q)}", (16, 9), weyl_quotient_dims(2, 1, q))
    return out


def ideal_suite(q=2, m_max: int = 3, window: int | None = None) -> list[Check]:
    q = as_qparam(q)
    out: list[Check] = []
    for m in range(1, m_max + 1):
        I = ideal_I_quotient(m, 1, q)
        _check(out, 8, f"codim A/I m={m} {_qtag(q)}", 2, I.codimension)
        _check(out, 8, f"generators vanish at pi(m,1)^2 m={m} {_qtag(q)}", True, I.membership)
        _check(out, 8, f"A/I non-split m={m} {_qtag(q)}", True, I.non_split)
    return out


def ideal_literal_suite(q=2, m_max: int = 3, window: int | None = None) -> list[Check]:
    """Codimension with the ``r = 2m - 1`` generator also imposed (known to be 1)."""
    q = as_qparam(q)
    out: list[Check] = []
    for m in range(1, m_max + 1):
        I = ideal_I_quotient(m, 1, q)
        _check(out, 8, f"codim with r=2m-1 generator m={m} {_qtag(q)}", 2, I.literal_codimension)
    return out


def walkprop_suite(q=2, m_max: int = 3, window: int | None = None) -> list[Check]:
    out: list[Check] = []
    for m, a in ((2, -1), (3, -1), (3, -2)):
        _check(out, 12, f"walkprop forcing (m={m}, a={a}) {_qtag(q)}", True, walkprop_forcing_check(m, a, q))
    return out


SUITE_FUNCS: dict[str, Callable[..., list[Check]]] = {
    "presentation": presentation_suite,
    "drinfeld-oracle": drinfeld_oracle_suite,
    "theorem1": theorem1_suite,
    "weyl": weyl_suite,
    "ideal": ideal_suite,
    "walkprop": walkprop_suite,
}


def run_suite(name: str, q=2, m_max: int = 3, window: int | None = None) -> list[Check]:
    if name == "all":
        return [c for s in SUITES for c in SUITE_FUNCS[s](q, m_max, window)]
    if name not in SUITE_FUNCS:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES + ('all',))}")
    return SUITE_FUNCS[name](q, m_max, window)
