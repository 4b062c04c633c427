"""The algebra A_lambda, the codimension-two ideal I, and local Weyl modules."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from typing import Iterable

import numpy as np

from . import linalg as la
from .dpoly import DrinfeldPoly, lweight_data, qstring
from .qnum import (
    as_qparam,
    as_scalar,
    poly_add,
    poly_divmod,
    poly_gcd,
    poly_mul,
    poly_scale,
    poly_trim,
    q_int,
)
from .repcore.module import Module, tensor


class ALambdaAlgebra:
    """``C[L_1, ..., L_lam, L_lam^-1]`` with ``L_{-s} = L_{lam-s} L_lam^-1``.

    Elements are dicts from exponent tuples ``(e_1, ..., e_lam)`` to
    Fractions; only ``e_lam`` may be negative.
    """

    def __init__(self, lam: int):
        if lam < 0:
            raise ValueError("lambda must be nonnegative")
        self.lam = lam

    def one(self) -> dict:
        return {(0,) * self.lam: Fraction(1)}

    def generator(self, r: int) -> dict:
        """Normal form of the image of ``Lambda_r``."""
        lam = self.lam
        if r == 0:
            return self.one()
        if abs(r) > lam:
            return {}
        if r > 0:
            e = [0] * lam
            e[r - 1] = 1
            return {tuple(e): Fraction(1)}
        # Lambda_{-s} = Lambda_{lam-s} Lambda_lam^-1
        s = -r
        e = [0] * lam
        if lam - s > 0:
            e[lam - s - 1] += 1
        e[lam - 1] -= 1
        return {tuple(e): Fraction(1)}

    def mul(self, x: dict, y: dict) -> dict:
        out: dict = {}
        for ex, cx in x.items():
            for ey, cy in y.items():
                e = tuple(a + b for a, b in zip(ex, ey))
                c = out.get(e, 0) + cx * cy
                if c:
                    out[e] = c
                else:
                    out.pop(e, None)
        return out

    def word(self, indices: Iterable[int]) -> dict:
        out = self.one()
        for r in indices:
            out = self.mul(out, self.generator(r))
        return out

    def evaluate(self, x: dict, values: dict[int, Fraction]) -> Fraction:
        """Evaluate at ``L_r = values[r]`` for ``1 <= r <= lam`` (``values[lam] != 0``)."""
        total = Fraction(0)
        for e, c in x.items():
            term = c
            for r, k in enumerate(e, start=1):
                term *= values[r] ** k
            total += term
        return total


@dataclass
class ALambdaModule:
    """Commuting matrices for ``L_1, ..., L_lam`` with ``L_lam`` invertible."""

    lam: int
    matrices: dict[int, np.ndarray]
    label: str = ""
    dim: int = field(init=False)

    def __post_init__(self):
        dims = {m.shape[0] for m in self.matrices.values()}
        self.dim = dims.pop() if dims else 1
        for a in self.matrices.values():
            for b in self.matrices.values():
                if not la.is_zero(la.comm(a, b)):
                    raise ValueError("A_lambda action matrices must commute")
        if self.lam and la.rank(self.matrices[self.lam]) < self.dim:
            raise ValueError("Lambda_lam must act invertibly")

    def act(self, r: int) -> np.ndarray:
        """Matrix of ``Lambda_r`` for any integer ``r``."""
        if r == 0:
            return la.eye(self.dim)
        if abs(r) > self.lam:
            return la.zeros(self.dim)
        if r > 0:
            return self.matrices[r]
        inv = la.inverse(self.matrices[self.lam])
        return la.mm(self.act(self.lam + r), inv)

    def is_semisimple_action(self) -> bool:
        """True when every ``L_r`` is diagonalizable over C (no nilpotent part)."""
        from .repcore.analysis import rational_eigenvalues

        for m in self.matrices.values():
            eigs, _ = rational_eigenvalues(m)
            if not eigs:
                return False
            # diagonalizable iff the product over distinct eigenvalues kills m
            p = la.eye(self.dim)
            for lam in eigs:
                p = la.mm(p, m - lam * la.eye(self.dim))
            if not la.is_zero(p):
                return False
        return True


def evaluation_character(pi: DrinfeldPoly, lam: int) -> ALambdaModule:
    if pi.degree != lam:
        raise ValueError(f"deg pi = {pi.degree} differs from lambda = {lam}")
    coeffs = pi.coefficients()
    return ALambdaModule(lam, {r: la.mat([[coeffs[r]]]) for r in range(1, lam + 1)}, f"C_{pi}")


def ideal_generators(m: int, a, q) -> list:
    """The generators of I as callables of a coefficient vector ``L[0..2m]``.

    ``[r+2] L_{r+2} - (q^{r+1} L_1 + 2 a q^m [r+1]) L_{r+1} - a^2 [2m-r] L_r`` for
    ``0 <= r <= 2m`` (entries beyond ``2m`` are zero), plus ``(L_1 + 2a[m])^2``.
    """
    q = as_qparam(q)
    a = as_scalar(a)
    qq = q.q
    lam = 2 * m

    def get(L, r):
        return L[r] if 0 <= r <= lam else 0

    gens = []
    for r in range(lam + 1):
        def g(L, r=r):
            return (q_int(r + 2, q) * get(L, r + 2)
                    - (qq ** (r + 1) * L[1] + 2 * a * qq ** m * q_int(r + 1, q)) * get(L, r + 1)
                    - a ** 2 * q_int(lam - r, q) * get(L, r))
        gens.append(g)
    gens.append(lambda L: (L[1] + 2 * a * q_int(m, q)) ** 2)
    return gens


@dataclass
class IdealQuotient:
    """``A_{2m}/I`` together with what was learned while building it.

    ``module`` is the quotient by the square and the generators with
    ``r <= 2m - 2``, which solve for ``L_2, ..., L_{2m}``.  The generator with
    ``r = 2m - 1`` is handled separately: ``top_residual`` is its image in that
    quotient and ``literal_codimension`` is the codimension once it is added.
    """

    m: int
    a: Fraction
    q: object
    module: ALambdaModule
    modulus: list[Fraction]
    lambda_polys: dict[int, list[Fraction]]
    membership: bool
    non_split: bool
    top_residual: np.ndarray
    literal_codimension: int

    @property
    def codimension(self) -> int:
        return self.module.dim


def _localised_modulus(modulus: list, unit: list) -> list:
    # drop any factor shared with the element that must stay invertible
    while True:
        common = poly_gcd(modulus, unit)
        if len(common) <= 1:
            return modulus
        modulus = poly_divmod(modulus, common)[0]


def _mult_matrix(p: list, modulus: list) -> np.ndarray:
    """Multiplication by ``p`` on ``Q[X]/modulus`` in the basis ``1, X, ...``."""
    d = len(modulus) - 1
    out = la.zeros(d)
    for j in range(d):
        prod = poly_mul(p, [Fraction(0)] * j + [Fraction(1)])
        rem = poly_divmod(prod, modulus)[1] if prod else []
        for i, x in enumerate(rem):
            out[i, j] = x
    return out


def ideal_I_quotient(m: int, a=1, q=2) -> IdealQuotient:
    """``A_{2m} / I`` as an explicit two-dimensional module over ``A_{2m}``.

    The generators with ``r <= 2m - 2`` express ``L_2, ..., L_{2m}`` as
    polynomials in ``X = L_1``, so the quotient is ``Q[X]/(X + 2a[m])^2``
    localised at ``L_{2m}(X)``.
    """
    if m < 1:
        raise ValueError("needs m >= 1")
    q = as_qparam(q)
    a = as_scalar(a)
    qq = q.q
    lam = 2 * m

    def step(r):
        return poly_add(poly_scale(X, qq ** (r + 1)), [2 * a * qq ** m * q_int(r + 1, q)])

    X = [Fraction(0), Fraction(1)]
    L = {0: [Fraction(1)], 1: X}
    for r in range(lam - 1):
        rhs = poly_add(poly_mul(step(r), L[r + 1]), poly_scale(L[r], a ** 2 * q_int(lam - r, q)))
        L[r + 2] = poly_scale(rhs, 1 / q_int(r + 2, q))
    # r = 2m - 1 (r = 2m vanishes identically since [0] = 0 and L_{2m+1} = L_{2m+2} = 0)
    top = poly_add(poly_scale(poly_mul(step(lam - 1), L[lam]), -1),
                   poly_scale(L[lam - 1], -(a ** 2)))

    c = 2 * a * q_int(m, q)
    square = poly_mul([c, Fraction(1)], [c, Fraction(1)])
    modulus = _localised_modulus(square, L[lam])
    if len(modulus) - 1 != 2:
        raise ArithmeticError(f"A_{lam}/I has codimension {len(modulus) - 1}, expected 2")
    literal = _localised_modulus(poly_gcd(square, top) if poly_trim(top) else square, L[lam])

    module = ALambdaModule(lam, {r: _mult_matrix(L[r], modulus) for r in range(1, lam + 1)},
                           f"A_{lam}/I(m={m},a={a})")
    top_residual = la.vec([0, 0])
    for i, x in enumerate(poly_divmod(top, modulus)[1] if poly_trim(top) else []):
        top_residual[i] = x
    coeffs = (qstring(m, a, q) ** 2).coefficients()
    membership = all(g(coeffs) == 0 for g in ideal_generators(m, a, q))
    return IdealQuotient(m, a, q, module, modulus, L, membership,
                         not module.is_semisimple_action(), top_residual, len(literal) - 1)


# --- local Weyl modules ---------------------------------------------------------------

class CyclicityError(RuntimeError):
    pass


def _fundamental_orders(roots: list[Fraction], q) -> Iterable[tuple[Fraction, ...]]:
    q = as_qparam(q)

    def key(a):
        # exponent of q in a relative to the smallest root of the same q-class
        k, b = 0, a
        while b != 0 and abs(b.numerator) % abs(q.q.numerator or 1) == 0 and b / q.q in roots:
            b /= q.q
            k += 1
        return k

    first = tuple(sorted(roots, key=lambda a: (-key(a), a)))
    yield first
    seen = {first}
    for perm in permutations(roots):
        if perm not in seen:
            seen.add(perm)
            yield perm


def local_weyl(pi: DrinfeldPoly, q=2) -> Module:
    """``W(pi)`` as a tensor product of fundamental modules, cyclic on its top vector."""
    from .repcore.analysis import spin
    from .sl2eval import eval_module, top_vector

    q = as_qparam(q)
    if pi.is_trivial:
        raise ValueError("needs a nontrivial Drinfeld polynomial")
    roots = pi.root_list()
    tried = []
    for order in _fundamental_orders(roots, q):
        W = eval_module(1, order[0], q)
        for a in order[1:]:
            W = tensor(W, eval_module(1, a, q))
        tried.append(order)
        if len(spin(W, top_vector(W))) == W.dim:
            return W.relabel(f"weyl({pi})")
    raise CyclicityError(f"no ordering of fundamental factors is cyclic; tried {tried}")


def weyl_top_h_matches(pi: DrinfeldPoly, q=2, R: int = 3) -> bool:
    """Top vector of ``local_weyl(pi)`` carries ``h_r(pi)`` for ``0 < |r| <= R``."""
    from .repcore.drinfeld import drinfeld_matrices
    from .sl2eval import top_vector

    W = local_weyl(pi, q)
    D = drinfeld_matrices(W, R)
    data = lweight_data(pi, q, max(R, pi.degree))
    v = top_vector(W)
    return all(np.array_equal(D.h[r].dot(v), data.h[r] * v) for r in D.h)


def ext_weyl_dimension_check(pi: DrinfeldPoly, q=2) -> tuple[int, int]:
    """``(dim Ext^1(W(pi), W(pi)), deg pi)``."""
    from .selfext import ext1

    W = local_weyl(pi, q)
    return ext1(W).dim, pi.degree
