"""Drinfeld polynomials for sl2 and the eigenvalue data they determine."""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

from .qnum import (
    as_qparam,
    as_scalar,
    poly_compose_scale,
    poly_mul,
    poly_trim,
    q_int,
    truncated_exp_series,
)


@dataclass(frozen=True)
class DrinfeldPoly:
    """``pi(u) = prod (1 - a u)^p`` stored as a sorted tuple of ``(a, p)``.

    Spectral parameters are nonzero rationals.  The empty tuple is the
    trivial element of the monoid.
    """

    roots: tuple[tuple[Fraction, int], ...] = ()

    def __post_init__(self):
        merged: dict[Fraction, int] = {}
        for a, p in self.roots:
            a = as_scalar(a)
            if a == 0:
                raise ValueError("spectral parameters must be nonzero")
            if not isinstance(p, int) or p <= 0:
                raise ValueError(f"multiplicity must be a positive integer, got {p!r}")
            merged[a] = merged.get(a, 0) + p
        object.__setattr__(self, "roots", tuple(sorted(merged.items())))

    @classmethod
    def from_roots(cls, roots: Iterable[tuple]) -> "DrinfeldPoly":
        return cls(tuple((as_scalar(a), int(p)) for a, p in roots))

    @classmethod
    def trivial(cls) -> "DrinfeldPoly":
        return cls(())

    @property
    def degree(self) -> int:
        return sum(p for _, p in self.roots)

    @property
    def is_trivial(self) -> bool:
        return not self.roots

    def root_list(self) -> list[Fraction]:
        """Spectral parameters repeated by multiplicity."""
        return [a for a, p in self.roots for _ in range(p)]

    def coefficients(self) -> list[Fraction]:
        """Dense coefficients of ``pi(u)``; entry 0 is 1."""
        out = [Fraction(1)]
        for a in self.root_list():
            out = poly_mul(out, [Fraction(1), -a])
        return out + [Fraction(0)] * (self.degree + 1 - len(out))

    def __mul__(self, other: "DrinfeldPoly") -> "DrinfeldPoly":
        return multiply(self, other)

    def __pow__(self, s: int) -> "DrinfeldPoly":
        if s < 0:
            raise ValueError("negative powers are not in the monoid")
        return DrinfeldPoly(tuple((a, p * s) for a, p in self.roots)) if s else DrinfeldPoly()

    def to_json(self) -> list[dict]:
        return [{"a": str(a), "p": p} for a, p in self.roots]

    @classmethod
    def from_json(cls, data) -> "DrinfeldPoly":
        if isinstance(data, str):
            data = json.loads(data)
        return cls.from_roots((entry["a"], entry["p"]) for entry in data)

    def __str__(self):
        if self.is_trivial:
            return "1"
        return "*".join(f"root({a},{p})" for a, p in self.roots)


def qstring(m: int, a, q) -> DrinfeldPoly:
    """The q-string with roots ``a q^(m-1), a q^(m-3), ..., a q^(1-m)``."""
    a = as_scalar(a)
    if a == 0:
        raise ValueError("q-string centre must be nonzero")
    if m < 0:
        raise ValueError("q-string length must be nonnegative")
    q = as_qparam(q)
    return DrinfeldPoly(tuple((a * q ** (m - 1 - 2 * k), 1) for k in range(m)))


def multiply(p1: DrinfeldPoly, p2: DrinfeldPoly) -> DrinfeldPoly:
    return DrinfeldPoly(p1.roots + p2.roots)


@dataclass(frozen=True)
class LWeightData:
    """Eigenvalues of ``h_r``, ``Lambda_r`` and ``phi^+-_m`` on a top vector.

    All maps are truncated to ``|index| <= window``.
    """

    window: int
    degree: int
    h: Mapping[int, Fraction] = field(default_factory=dict)
    lam: Mapping[int, Fraction] = field(default_factory=dict)
    phi_plus: Mapping[int, Fraction] = field(default_factory=dict)
    phi_minus: Mapping[int, Fraction] = field(default_factory=dict)


def default_window(pi: DrinfeldPoly) -> int:
    return 2 * pi.degree + 2


def lweight_data(pi: DrinfeldPoly, q, window: int | None = None) -> LWeightData:
    """Three independent derivations of the l-weight attached to ``pi``.

    ``h`` comes from Newton power sums of the roots, ``lam`` from the
    coefficients of ``pi`` and of its normalised reversal, ``phi_plus`` /
    ``phi_minus`` from the expansions of ``q^deg pi(u/q) / pi(qu)`` at 0 and
    at infinity.  :func:`check_lweight_consistency` ties them together.
    """
    q = as_qparam(q)
    R = default_window(pi) if window is None else window
    if R < pi.degree:
        raise ValueError(f"window {R} is smaller than deg pi = {pi.degree}")
    roots = pi.roots
    h = {}
    for r in range(1, R + 1):
        scale = q_int(r, q) / r
        h[r] = scale * sum(p * a ** r for a, p in roots)
        h[-r] = scale * sum(p * a ** (-r) for a, p in roots)

    coeffs = pi.coefficients()
    lam = {0: Fraction(1)}
    for r in range(1, R + 1):
        lam[r] = coeffs[r] if r <= pi.degree else Fraction(0)
    # pi^-(u) = u^deg pi(1/u), normalised to constant term 1
    top = coeffs[pi.degree]
    rev = [c / top for c in reversed(coeffs)]
    for r in range(1, R + 1):
        lam[-r] = rev[r] if r <= pi.degree else Fraction(0)

    d = pi.degree
    qq = q.q
    # expansion at 0 of q^d pi(u/q) / pi(qu)
    num = [c * qq ** d for c in poly_compose_scale(coeffs, 1 / qq)]
    den = poly_compose_scale(coeffs, qq)
    plus = _series_quotient(num, den, R)
    # expansion at infinity: substitute u = 1/v and clear u^d
    num_inf = [c * qq ** d for c in reversed(_pad(poly_compose_scale(coeffs, 1 / qq), d))]
    den_inf = list(reversed(_pad(den, d)))
    minus = _series_quotient(num_inf, den_inf, R)
    phi_plus = {m: Fraction(0) for m in range(-R, 0)}
    phi_minus = {m: Fraction(0) for m in range(1, R + 1)}
    phi_plus.update({m: plus[m] for m in range(R + 1)})
    phi_minus.update({-m: minus[m] for m in range(R + 1)})
    return LWeightData(R, d, h, lam, phi_plus, phi_minus)


def _pad(p: list, d: int) -> list:
    return list(p) + [Fraction(0)] * (d + 1 - len(p))


def _series_quotient(num: list, den: list, order: int) -> list[Fraction]:
    if den[0] == 0:
        raise ZeroDivisionError("series denominator vanishes at the origin")
    out = []
    for n in range(order + 1):
        acc = num[n] if n < len(num) else Fraction(0)
        for k in range(1, min(n, len(den) - 1) + 1):
            acc -= den[k] * out[n - k]
        out.append(acc / den[0])
    return out


def check_lweight_consistency(pi: DrinfeldPoly, q, window: int | None = None) -> bool:
    """Exact agreement of the three derivations inside :func:`lweight_data`."""
    q = as_qparam(q)
    data = lweight_data(pi, q, window)
    R = data.window
    for sign in (1, -1):
        expo = {s: -data.h[sign * s] / q_int(s, q) for s in range(1, R + 1)}
        lam = truncated_exp_series(expo, R)
        if any(lam[r] != data.lam[sign * r] for r in range(R + 1)):
            return False
        # phi^{+-}(u) = q^{+-deg} exp(+-(q - 1/q) sum h_{+-s} u^s)
        qq = q.q
        expo = {s: sign * (qq - 1 / qq) * data.h[sign * s] for s in range(1, R + 1)}
        series = truncated_exp_series(expo, R)
        k = qq ** (sign * pi.degree)
        phi = data.phi_plus if sign > 0 else data.phi_minus
        if any(k * series[m] != phi[sign * m] for m in range(R + 1)):
            return False
    return True


def primitive_root(pi: DrinfeldPoly) -> tuple[DrinfeldPoly, int]:
    """Largest ``s`` with ``pi = pi0^s`` together with ``pi0``."""
    if pi.is_trivial:
        raise ValueError("the trivial element has no primitive root")
    s = 0
    for _, p in pi.roots:
        s = math.gcd(s, p)
    return DrinfeldPoly(tuple((a, p // s) for a, p in pi.roots)), s


def proportional_h(pi1: DrinfeldPoly, pi2: DrinfeldPoly, q=None) -> Fraction | None:
    """The constant ``c`` with ``h_r(pi1) = c h_r(pi2)`` for all ``r``, if any.

    Power sums of distinct roots are independent (Vandermonde), so such a
    ``c`` exists iff both polynomials have the same roots with proportional
    multiplicities.  Decided on the root multisets, never numerically.
    """
    if pi1.is_trivial or pi2.is_trivial:
        raise ValueError("proportional_h needs nontrivial polynomials")
    r1, r2 = dict(pi1.roots), dict(pi2.roots)
    if set(r1) != set(r2):
        return None
    ratios = {Fraction(r1[a], r2[a]) for a in r1}
    return ratios.pop() if len(ratios) == 1 else None


def power_relation(pi1: DrinfeldPoly, pi2: DrinfeldPoly) -> tuple[int, int] | None:
    """``(d, d')`` in lowest terms with ``pi1^d' = pi2^d``, when proportional."""
    c = proportional_h(pi1, pi2)
    if c is None:
        return None
    return c.numerator, c.denominator


def h_vandermonde_rank(pi1: DrinfeldPoly, pi2: DrinfeldPoly, q, window: int | None = None) -> int:
    """Rank of the 2 x window matrix of ``h_r`` values of both polynomials.

    Rank 1 on a long enough window means the two h-sequences are
    proportional; used as a numeric cross-check of :func:`proportional_h`.
    """
    from .linalg import mat, rank

    R = window or max(default_window(pi1), default_window(pi2))
    d1, d2 = lweight_data(pi1, q, R), lweight_data(pi2, q, R)
    return rank(mat([[d1.h[r] for r in range(1, R + 1)], [d2.h[r] for r in range(1, R + 1)]]))


def coefficient_vector(pi: DrinfeldPoly) -> list[Fraction]:
    return poly_trim(pi.coefficients()) or [Fraction(1)]
