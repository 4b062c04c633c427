"""Finite-dimensional type-1 modules given by exact Chevalley generator matrices."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Iterator

import numpy as np

from .. import linalg as la
from ..qnum import QParam, as_qparam, q_binom

GENERATORS = ("e1", "f1", "e0", "f0")

# weight shift of each generator and its degree in the Z-grading (gr x_0^+- = +-1)
WEIGHT_SHIFT = {"e1": 2, "f1": -2, "e0": -2, "f0": 2}
DEGREE = {"e1": 0, "f1": 0, "e0": 1, "f0": -1}


@dataclass(frozen=True, eq=False)
class Module:
    """A representation of the quantum loop algebra of sl2.

    ``weights[j]`` is the sl2 weight of basis vector ``j``; ``k = k_1`` acts
    diagonally by ``q^weight`` and ``k_0`` by its inverse.  The four matrices
    are the actions of ``x_1^+, x_1^-, x_0^+, x_0^-``.
    """

    weights: tuple[int, ...]
    e1: np.ndarray
    f1: np.ndarray
    e0: np.ndarray
    f0: np.ndarray
    q: QParam
    label: str = ""
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "q", as_qparam(self.q))
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))
        n = len(self.weights)
        for name in GENERATORS:
            m = np.asarray(getattr(self, name), dtype=object)
            if m.shape != (n, n):
                raise ValueError(f"{name} has shape {m.shape}, expected {(n, n)}")
            m = m.copy()
            for idx, x in np.ndenumerate(m):
                if not isinstance(x, Fraction):
                    m[idx] = Fraction(x)
            m.setflags(write=False)
            object.__setattr__(self, name, m)
        self._check_weights()

    def _check_weights(self):
        for name in GENERATORS:
            shift = WEIGHT_SHIFT[name]
            m = getattr(self, name)
            for (i, j), x in np.ndenumerate(m):
                if x != 0 and self.weights[i] != self.weights[j] + shift:
                    raise ValueError(
                        f"{name}[{i},{j}] = {x} breaks weight homogeneity "
                        f"({self.weights[j]} -> {self.weights[i]})")

    @property
    def dim(self) -> int:
        return len(self.weights)

    def gen(self, name: str) -> np.ndarray:
        if name in GENERATORS:
            return getattr(self, name)
        if name in ("k", "k1"):
            return self.k
        if name in ("kinv", "k0"):
            return self.kinv
        raise KeyError(name)

    @property
    def k(self) -> np.ndarray:
        if "k" not in self._cache:
            self._cache["k"] = la.diag([self.q.q ** w for w in self.weights])
        return self._cache["k"]

    @property
    def kinv(self) -> np.ndarray:
        if "kinv" not in self._cache:
            self._cache["kinv"] = la.diag([self.q.q ** (-w) for w in self.weights])
        return self._cache["kinv"]

    def weight_spaces(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {}
        for j, w in enumerate(self.weights):
            out.setdefault(w, []).append(j)
        return dict(sorted(out.items(), reverse=True))

    def matrices(self) -> dict[str, np.ndarray]:
        return {name: getattr(self, name) for name in GENERATORS}

    def relabel(self, label: str) -> "Module":
        return Module(self.weights, self.e1, self.f1, self.e0, self.f0, self.q, label)

    def permuted(self, perm) -> "Module":
        """Same module in the basis ``new[i] = old[perm[i]]``."""
        perm = list(perm)
        mats = {name: getattr(self, name)[np.ix_(perm, perm)] for name in GENERATORS}
        return Module(tuple(self.weights[p] for p in perm), q=self.q, label=self.label, **mats)

    def same_matrices(self, other: "Module") -> bool:
        return (self.weights == other.weights and self.q == other.q
                and all(np.array_equal(getattr(self, g), getattr(other, g)) for g in GENERATORS))

    def __repr__(self):
        return f"Module(dim={self.dim}, q={self.q}, label={self.label!r})"


def trivial_module(q=2) -> Module:
    z = la.zeros(1)
    return Module((0,), z, z, z, z, q, "trivial")


def direct_sum(V: Module, W: Module) -> Module:
    if V.q != W.q:
        raise ValueError("direct sum of modules with different q")
    mats = {}
    for g in GENERATORS:
        m = la.zeros(V.dim + W.dim)
        m[: V.dim, : V.dim] = getattr(V, g)
        m[V.dim:, V.dim:] = getattr(W, g)
        mats[g] = m
    return Module(V.weights + W.weights, q=V.q, label=f"({V.label}+{W.label})", **mats)


# --- defining relations --------------------------------------------------------

# k_i x_j^+ k_i^-1 = q^{+-a_ij} x_j^+ holds automatically once matrices are
# weight homogeneous; it is still recomputed as a residual below.

def _k_of(V: Module, i: int) -> tuple[np.ndarray, np.ndarray]:
    return (V.k, V.kinv) if i == 1 else (V.kinv, V.k)


def relation_words():
    """The Chevalley relations as ``(name, [(coeff, word)], rhs)``.

    Words are tuples of generator names applied right-to-left as matrix
    products (leftmost acts last).  ``rhs`` names a k-expression or None.
    """
    out = []
    for i, j in product((1, 0), repeat=2):
        e, f = f"e{i}", f"f{j}"
        out.append((f"[{e},{f}]", [(Fraction(1), (e, f)), (Fraction(-1), (f, e))],
                    f"cartan{i}" if i == j else None))
    return out


def serre_words(i: int, j: int, sign: str, q) -> list[tuple[Fraction, tuple[str, ...]]]:
    """``sum_m (-1)^m [3 m] x_i^(3-m) x_j x_i^m`` with ``1 - a_ij = 3``."""
    letter = "e" if sign == "+" else "f"
    xi, xj = f"{letter}{i}", f"{letter}{j}"
    return [((-1) ** m * q_binom(3, m, q), (xi,) * (3 - m) + (xj,) + (xi,) * m) for m in range(4)]


def word_matrix(V: Module, word: tuple[str, ...]) -> np.ndarray:
    out = la.eye(V.dim)
    for g in word:
        out = la.mm(out, V.gen(g))
    return out


@dataclass
class PresentationReport:
    residuals: dict[str, int]

    @property
    def passed(self) -> bool:
        return not any(self.residuals.values())

    @property
    def failures(self) -> list[str]:
        return [name for name, n in self.residuals.items() if n]

    def __bool__(self):
        return self.passed


def iter_relation_residuals(V: Module) -> Iterator[tuple[str, np.ndarray]]:
    q = V.q.q
    for i in (1, 0):
        k, kinv = _k_of(V, i)
        yield f"k{i}k{i}^-1", la.mm(k, kinv) - la.eye(V.dim)
        for j in (1, 0):
            a_ij = 2 if i == j else -2
            yield f"k{i}e{j}k{i}^-1", la.mm(la.mm(k, V.gen(f"e{j}")), kinv) - q ** a_ij * V.gen(f"e{j}")
            yield f"k{i}f{j}k{i}^-1", la.mm(la.mm(k, V.gen(f"f{j}")), kinv) - q ** (-a_ij) * V.gen(f"f{j}")
    yield "k1k0", la.mm(V.k, V.kinv) - la.eye(V.dim)
    for name, terms, rhs in relation_words():
        lhs = sum((c * word_matrix(V, w) for c, w in terms), la.zeros(V.dim))
        if rhs is not None:
            k, kinv = _k_of(V, int(rhs[-1]))
            lhs = lhs - (k - kinv) * (1 / (q - 1 / q))
        yield name, lhs
    for (i, j), sign in product(((1, 0), (0, 1)), "+-"):
        terms = serre_words(i, j, sign, V.q)
        yield f"serre{sign}({i},{j})", sum((c * word_matrix(V, w) for c, w in terms), la.zeros(V.dim))


def verify_presentation(V: Module) -> PresentationReport:
    """Every defining relation evaluated exactly; counts of nonzero entries."""
    return PresentationReport({name: la.nonzero_count(r) for name, r in iter_relation_residuals(V)})


# --- Hopf structure -------------------------------------------------------------

def tensor(V: Module, W: Module) -> Module:
    """``V (x) W`` via ``D(e_i) = e_i(x)1 + k_i(x)e_i``, ``D(f_i) = f_i(x)k_i^-1 + 1(x)f_i``."""
    if V.q != W.q:
        raise ValueError(f"cannot tensor modules with q = {V.q} and q = {W.q}")
    Iv, Iw = la.eye(V.dim), la.eye(W.dim)
    mats = {}
    for i in (1, 0):
        kV, kVinv = _k_of(V, i)
        kW, kWinv = _k_of(W, i)
        mats[f"e{i}"] = np.kron(V.gen(f"e{i}"), Iw) + np.kron(kV, W.gen(f"e{i}"))
        mats[f"f{i}"] = np.kron(V.gen(f"f{i}"), kWinv) + np.kron(Iv, W.gen(f"f{i}"))
    weights = tuple(a + b for a in V.weights for b in W.weights)
    return Module(weights, q=V.q, label=f"tensor({V.label},{W.label})", **mats)


def tensor_power(V: Module, n: int) -> Module:
    if n < 1:
        raise ValueError("tensor power needs n >= 1")
    out = V
    for _ in range(n - 1):
        out = tensor(out, V)
    return out.relabel(f"{V.label}^{n}" if n > 1 else V.label)


def dual(V: Module) -> Module:
    """Left dual: ``(x f)(v) = f(S(x) v)`` with ``S(e_i) = -k_i^-1 e_i``, ``S(f_i) = -f_i k_i``."""
    mats = {}
    for i in (1, 0):
        k, kinv = _k_of(V, i)
        mats[f"e{i}"] = (-la.mm(kinv, V.gen(f"e{i}"))).T.copy()
        mats[f"f{i}"] = (-la.mm(V.gen(f"f{i}"), k)).T.copy()
    return Module(tuple(-w for w in V.weights), q=V.q, label=f"dual({V.label})", **mats)
