"""Recover Drinfeld generators from the Chevalley action.

Convention: ``x_0^+ = e1``, ``x_0^- = f1``, ``x_1^- = e0 k`` and
``x_{-1}^+ = k^-1 f0``.  Everything else follows from the Drinfeld relations
``[h_{+-1}, x^+-_r] = +-[2] x^+-_{r+-1}`` and the series defining ``phi^+-``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .. import linalg as la
from ..qnum import q_int, series_exp, series_log
from .module import Module

# scalar in front of e0 k in x_1^- (and of k^-1 f0 in x_{-1}^+); kept as a
# single switch in case a different normalisation of the loop generator is wanted
CONVENTION_SCALE = Fraction(1)


class DrinfeldRelationError(ArithmeticError):
    """A Drinfeld relation failed on the window: wrong convention or corrupt module."""


@dataclass
class DrinfeldMatrices:
    window: int
    xplus: dict[int, np.ndarray] = field(default_factory=dict)
    xminus: dict[int, np.ndarray] = field(default_factory=dict)
    h: dict[int, np.ndarray] = field(default_factory=dict)
    phi_plus: dict[int, np.ndarray] = field(default_factory=dict)
    phi_minus: dict[int, np.ndarray] = field(default_factory=dict)


def drinfeld_matrices(V: Module, R: int = 3, check: bool = True) -> DrinfeldMatrices:
    if R < 1:
        raise ValueError("window must be at least 1")
    q = V.q
    qq = q.q
    dq = qq - 1 / qq
    two = q_int(2, q)
    k, kinv = V.k, V.kinv

    xp = {0: V.e1, -1: CONVENTION_SCALE * la.mm(kinv, V.f0)}
    xm = {0: V.f1, 1: CONVENTION_SCALE * la.mm(V.e0, k)}
    h1 = la.mm(kinv, la.comm(xp[0], xm[1]))
    hm1 = la.mm(k, la.comm(xp[-1], xm[0]))

    for r in range(0, R):
        xp[r + 1] = la.comm(h1, xp[r]) * (1 / two)
    for r in range(-1, -R, -1):
        xp[r - 1] = la.comm(hm1, xp[r]) * (1 / two)
    for r in range(1, R):
        xm[r + 1] = -la.comm(h1, xm[r]) * (1 / two)
    for r in range(0, -R, -1):
        xm[r - 1] = -la.comm(hm1, xm[r]) * (1 / two)

    n = V.dim
    zero = la.zeros(n)
    # phi^+_m = (q - q^-1)[x^+_m, x^-_0] for m > 0; phi^-_{-m} likewise with a sign
    plus = [la.eye(n)] + [la.mm(kinv, la.comm(xp[m], xm[0])) * dq for m in range(1, R + 1)]
    minus = [la.eye(n)] + [la.mm(k, la.comm(xp[-m], xm[0])) * (-dq) for m in range(1, R + 1)]
    mul = la.mm
    log_plus = series_log(plus, R, zero=zero, mul=mul)
    log_minus = series_log(minus, R, zero=zero, mul=mul)
    h = {}
    for s in range(1, R + 1):
        h[s] = log_plus[s] * (1 / dq)
        h[-s] = log_minus[s] * (-1 / dq)

    out = DrinfeldMatrices(R, xp, xm, h)
    _fill_phi(out, V)
    if check:
        bad = drinfeld_residuals(out, V)
        if bad:
            raise DrinfeldRelationError(f"Drinfeld relations fail on {V.label or 'module'}: {bad[:5]}")
    return out


def _fill_phi(D: DrinfeldMatrices, V: Module) -> None:
    """phi^+-(u) = k^+-1 exp(+-(q - q^-1) sum h_{+-s} u^s), rebuilt from h."""
    R = D.window
    dq = V.q.q - 1 / V.q.q
    zero = la.zeros(V.dim)
    mul = la.mm
    ser_p = series_exp([zero] + [D.h[s] * dq for s in range(1, R + 1)], R,
                       one=la.eye(V.dim), zero=zero, mul=mul)
    ser_m = series_exp([zero] + [D.h[-s] * (-dq) for s in range(1, R + 1)], R,
                       one=la.eye(V.dim), zero=zero, mul=mul)
    for m in range(R + 1):
        D.phi_plus[m] = la.mm(V.k, ser_p[m])
        D.phi_minus[-m] = la.mm(V.kinv, ser_m[m])
    for m in range(1, R + 1):
        D.phi_plus[-m] = zero
        D.phi_minus[m] = zero


def drinfeld_residuals(D: DrinfeldMatrices, V: Module) -> list[str]:
    """Names of the Drinfeld relations that fail on the window."""
    R = D.window
    q = V.q
    dq = q.q - 1 / q.q
    bad = []
    hs = sorted(D.h)
    for a in hs:
        for b in hs:
            if a < b and not la.is_zero(la.comm(D.h[a], D.h[b])):
                bad.append(f"[h{a},h{b}]")
        if not la.is_zero(la.comm(D.h[a], V.k)):
            bad.append(f"[h{a},k]")
    for s in hs:
        c = q_int(2 * s, q) / s
        for r in range(-R, R + 1):
            if abs(r + s) > R:
                continue
            if not la.is_zero(la.comm(D.h[s], D.xplus[r]) - c * D.xplus[r + s]):
                bad.append(f"[h{s},x+{r}]")
            if not la.is_zero(la.comm(D.h[s], D.xminus[r]) + c * D.xminus[r + s]):
                bad.append(f"[h{s},x-{r}]")
    for r in range(-R, R + 1):
        for s in range(-R, R + 1):
            t = r + s
            if abs(t) > R:
                continue
            rhs = (D.phi_plus[t] - D.phi_minus[t]) * (1 / dq)
            if not la.is_zero(la.comm(D.xplus[r], D.xminus[s]) - rhs):
                bad.append(f"[x+{r},x-{s}]")
    # x^+-_r x^+-_l - q^{+-2} x^+-_l x^+-_r = q^{+-2} x^+-_{r-1} x^+-_{l+1} - x^+-_{l+1} x^+-_{r-1}
    for sign, X in (("+", D.xplus), ("-", D.xminus)):
        qa = q.q ** (2 if sign == "+" else -2)
        for r in range(-R + 1, R + 1):
            for l in range(-R, R):
                lhs = la.mm(X[r], X[l]) - qa * la.mm(X[l], X[r])
                rhs = qa * la.mm(X[r - 1], X[l + 1]) - la.mm(X[l + 1], X[r - 1])
                if not la.is_zero(lhs - rhs):
                    bad.append(f"x{sign}{r}x{sign}{l}")
    return bad
