"""Highest-l-weight vectors, submodule spinning and simplicity."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np
import sympy

from .. import linalg as la
from .drinfeld import DrinfeldMatrices, drinfeld_matrices
from .module import GENERATORS, Module


def default_window(V: Module) -> int:
    return max(3, max(V.weights) + 1)


@dataclass
class LWeightSpace:
    """A joint eigenspace of the h_s inside ``V^+`` of one weight.

    ``eigen`` is False for the leftover part of a weight space on which some
    ``h_s`` is not semisimple or has eigenvalues outside Q; ``eigenvalues`` is
    then empty and ``reason`` says which.
    """

    weight: int
    basis: list[np.ndarray]
    eigenvalues: dict[int, Fraction] = field(default_factory=dict)
    eigen: bool = True
    reason: str = ""

    @property
    def dim(self) -> int:
        return len(self.basis)


def rational_eigenvalues(m: np.ndarray) -> tuple[list[Fraction], bool]:
    """Distinct rational eigenvalues and whether the characteristic polynomial splits."""
    n = m.shape[0]
    if n == 0:
        return [], True
    x = sympy.Symbol("x")
    cp = sympy.Matrix(n, n, [sympy.Rational(v.numerator, v.denominator) for v in m.flat]).charpoly(x)
    _, factors = sympy.Poly(cp.as_expr(), x, domain=sympy.QQ).factor_list()
    roots, splits = [], True
    for f, _mult in factors:
        if f.degree() == 1:
            a, b = f.all_coeffs()
            r = -sympy.Rational(b) / sympy.Rational(a)
            roots.append(Fraction(int(r.p), int(r.q)))
        else:
            splits = False
    return sorted(set(roots)), splits


def plus_space(V: Module, D: DrinfeldMatrices, weight: int) -> list[np.ndarray]:
    """Basis of ``V^+ cap V_weight`` (joint kernel of ``x^+_r``, ``|r| <= window``)."""
    idx = [j for j, w in enumerate(V.weights) if w == weight]
    if not idx:
        return []
    stacked = np.vstack([D.xplus[r][:, idx] for r in sorted(D.xplus)])
    out = []
    for sol in la.nullspace(stacked):
        v = la.vec([0] * V.dim)
        v[idx] = sol
        out.append(v)
    return out


def highest_lweight_vectors(V: Module, R: int | None = None,
                            D: DrinfeldMatrices | None = None) -> list[LWeightSpace]:
    R = default_window(V) if R is None else R
    D = drinfeld_matrices(V, R) if D is None else D
    s_order = [s for r in range(1, R + 1) for s in (r, -r)]
    out: list[LWeightSpace] = []
    for mu in sorted(set(V.weights), reverse=True):
        basis = plus_space(V, D, mu)
        if not basis:
            continue
        pending = [(basis, {})]
        for s in s_order:
            nxt = []
            for sub, vals in pending:
                H = la.restrict(D.h[s], sub)
                if H is None:
                    raise ArithmeticError(f"V^+ of weight {mu} is not h_{s}-stable on window {R}")
                eigs, splits = rational_eigenvalues(H)
                B = np.array(sub, dtype=object).T
                found = []
                for lam in eigs:
                    kern = la.nullspace(H - lam * la.eye(len(sub)))
                    found.append(([B.dot(c) for c in kern], {**vals, s: lam}))
                nxt.extend(found)
                eigvecs = [v for vs, _ in found for v in vs]
                if len(eigvecs) < len(sub):
                    reason = "non-semisimple" if splits else "spectrum does not split over Q"
                    out.append(LWeightSpace(mu, _complement(sub, eigvecs), {}, False, f"h_{s}: {reason}"))
            pending = nxt
        for sub, vals in pending:
            out.append(LWeightSpace(mu, sub, vals))
    return out


def _complement(space: list[np.ndarray], sub: list[np.ndarray]) -> list[np.ndarray]:
    eb = la.EchelonBasis(len(space[0]))
    for v in sub:
        eb.add(v)
    rest = []
    for v in space:
        if eb.add(v):
            rest.append(v)
    return rest


def spin(V: Module, v, extra: tuple = ()) -> list[np.ndarray]:
    """Echelon basis of the submodule generated by ``v`` (closure under e, f, k)."""
    v = la.vec(v)
    if la.is_zero(v):
        raise ValueError("cannot spin the zero vector")
    gens = [getattr(V, g) for g in GENERATORS] + [V.k] + list(extra)
    eb = la.EchelonBasis(V.dim)
    eb.add(v)
    queue = [v]
    while queue:
        w = queue.pop()
        for g in gens:
            u = g.dot(w)
            if eb.add(u):
                queue.append(u)
    return eb.basis()


def algebra_dimension(V: Module) -> int:
    """Dimension of the image of the algebra in ``End(V)``."""
    n = V.dim
    gens = [getattr(V, g) for g in GENERATORS] + [V.k, V.kinv]
    eb = la.EchelonBasis(n * n)
    ident = la.eye(n)
    eb.add(ident.flat)
    queue = [ident]
    while queue and len(eb) < n * n:
        a = queue.pop()
        for g in gens:
            b = la.mm(g, a)
            if eb.add(b.flat):
                queue.append(b)
    return len(eb)


@dataclass
class SimplicityResult:
    simple: bool | None
    certificate: np.ndarray | None = None
    reason: str = ""
    algebra_dim: int = 0

    def __bool__(self):
        return bool(self.simple)


def is_simple(V: Module, R: int | None = None) -> SimplicityResult:
    """Decide simplicity exactly.

    The boolean comes from Burnside's theorem (simple over C iff the image of
    the algebra is all of ``End(V)``; the image is spanned by rational
    matrices so its dimension is field independent).  When V is not simple a
    non-generating highest-l-weight vector is searched for as certificate.
    """
    n = V.dim
    adim = algebra_dimension(V)
    if adim == n * n:
        return SimplicityResult(True, None, "algebra image is End(V)", adim)
    for space in highest_lweight_vectors(V, R):
        if not space.eigen:
            continue
        for v in space.basis:
            if len(spin(V, v)) < n:
                return SimplicityResult(False, v, f"highest-l-weight vector of weight {space.weight} "
                                        "generates a proper submodule", adim)
        if space.dim == 2:
            b1, b2 = space.basis
            for t in (1, -1, 2, Fraction(1, 2), -2, Fraction(-1, 2)):
                v = b1 + t * b2
                if len(spin(V, v)) < n:
                    return SimplicityResult(False, v, "pencil vector generates a proper submodule", adim)
    for j in range(n):
        e = la.vec([0] * n)
        e[j] = Fraction(1)
        if len(spin(V, e)) < n:
            return SimplicityResult(False, e, "basis vector generates a proper submodule", adim)
    return SimplicityResult(False, None, "not simple; no rational certificate found", adim)
