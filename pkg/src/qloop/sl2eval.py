"""Evaluation modules of the quantum loop algebra of sl2 and their relations.

Basis order is ``v_m, v_{m-1}, ..., v_0`` so the top vector sits at index 0.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import linalg as la
from .qnum import QParam, as_qparam, as_scalar, q_int
from .repcore.module import Module, tensor


@dataclass(frozen=True)
class EvalModuleSpec:
    m: int
    a: Fraction
    q: QParam

    def __post_init__(self):
        object.__setattr__(self, "a", as_scalar(self.a))
        object.__setattr__(self, "q", as_qparam(self.q))
        if self.a == 0:
            raise ValueError("evaluation parameter must be nonzero")
        if self.m < 0:
            raise ValueError("m must be nonnegative")


def _spec(m, a=None, q=None) -> EvalModuleSpec:
    if isinstance(m, EvalModuleSpec):
        return m
    return EvalModuleSpec(m, a, 2 if q is None else q)


def _index(m: int, j: int) -> int:
    return m - j


def xr_closed_form(spec: EvalModuleSpec, sign: str, r: int) -> np.ndarray:
    """Matrix of ``x_r^+`` or ``x_r^-`` on ``V(pi(m,a))`` from the closed form.

    ``x_r^+ v_j = (a q^(2j+2-m))^r [j+1] v_(j+1)`` and
    ``x_r^- v_j = (a q^(2j-m))^r [m-j+1] v_(j-1)``.
    """
    m, a, q = spec.m, spec.a, spec.q
    qq = q.q
    out = la.zeros(m + 1)
    for j in range(m + 1):
        if sign == "+" and j < m:
            out[_index(m, j + 1), _index(m, j)] = (a * qq ** (-m + 2 * j + 2)) ** r * q_int(j + 1, q)
        if sign == "-" and j > 0:
            out[_index(m, j - 1), _index(m, j)] = (a * qq ** (-m + 2 * j)) ** r * q_int(m - j + 1, q)
    return out


def eval_module(m, a=None, q=None) -> Module:
    """The (m+1)-dimensional evaluation module ``V(pi(m,a))``.

    ``e0 = x_1^- k^-1`` and ``f0 = k x_{-1}^+``.
    """
    spec = _spec(m, a, q)
    weights = tuple(2 * (spec.m - i) - spec.m for i in range(spec.m + 1))
    k = la.diag([spec.q.q ** w for w in weights])
    kinv = la.diag([spec.q.q ** (-w) for w in weights])
    return Module(
        weights,
        e1=xr_closed_form(spec, "+", 0),
        f1=xr_closed_form(spec, "-", 0),
        e0=la.mm(xr_closed_form(spec, "-", 1), kinv),
        f0=la.mm(k, xr_closed_form(spec, "+", -1)),
        q=spec.q,
        label=f"eval({spec.m},{spec.a},{spec.q})",
    )


def top_vector(V: Module) -> np.ndarray:
    """Basis vector of the highest weight (first such index)."""
    top = max(V.weights)
    v = la.vec([0] * V.dim)
    v[V.weights.index(top)] = Fraction(1)
    return v


def check_genrel_single(spec, a=None, q=None, coefficient=None) -> bool:
    """``(x_1^- - a q^m x_0^-) v_m = 0`` in ``V(pi(m,a))``."""
    spec = _spec(spec, a, q)
    if spec.m < 1:
        raise ValueError("needs m >= 1")
    from .repcore.drinfeld import drinfeld_matrices

    c = spec.a * spec.q.q ** spec.m if coefficient is None else as_scalar(coefficient)
    V = eval_module(spec)
    D = drinfeld_matrices(V, 1)
    return la.is_zero((D.xminus[1] - c * D.xminus[0]).dot(top_vector(V)))


def genrel_square_operator(D, spec: EvalModuleSpec, middle=None) -> np.ndarray:
    """``x_2^- - 2 a q^m x_1^- + a^2 q^2m x_0^-`` (middle coefficient overridable)."""
    aqm = spec.a * spec.q.q ** spec.m
    mid = 2 * aqm if middle is None else as_scalar(middle)
    return D.xminus[2] - mid * D.xminus[1] + aqm ** 2 * D.xminus[0]


def check_genrel_square(spec, a=None, q=None, middle=None) -> bool:
    """The quadratic relation on ``v_m (x) v_m`` in ``V(pi(m,a))^(x)2``."""
    spec = _spec(spec, a, q)
    if spec.m < 1:
        raise ValueError("needs m >= 1")
    from .repcore.drinfeld import drinfeld_matrices

    V = eval_module(spec)
    VV = tensor(V, V)
    D = drinfeld_matrices(VV, 2)
    return la.is_zero(genrel_square_operator(D, spec, middle).dot(top_vector(VV)))


def weyl_quotient_dims(spec, a=None, q=None, middle=None) -> tuple[int, int]:
    """``(dim W(pi(m,a)^2), dim of W modulo the quadratic relation)``."""
    spec = _spec(spec, a, q)
    if spec.m < 1:
        raise ValueError("needs m >= 1")
    from .dpoly import qstring
    from .repcore.analysis import spin
    from .repcore.drinfeld import drinfeld_matrices
    from .weylalg import local_weyl

    W = local_weyl(qstring(spec.m, spec.a, spec.q) ** 2, spec.q)
    D = drinfeld_matrices(W, 2)
    v = genrel_square_operator(D, spec, middle).dot(top_vector(W))
    if la.is_zero(v):
        return W.dim, W.dim
    return W.dim, W.dim - len(spin(W, v))
