"""Self-extensions and an exact Ext^1 engine for type-1 modules.

An extension ``0 -> W -> E -> V -> 0`` in the type-1 category can be put in
the normal form ``E = W (+) V`` (weight basis, ``k`` block diagonal) with each
Chevalley generator acting by ``[[rho_W(g), delta_g], [0, rho_V(g)]]``.  The
``delta_g`` are weight-homogeneous maps ``V -> W``.  Plugging this into the
defining relations and keeping the off-diagonal block gives linear equations
on the four ``delta_g``; weight-preserving changes of splitting
``N : V -> W`` change ``delta_g`` by ``rho_W(g) N - N rho_V(g)``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import linalg as la
from .dpoly import DrinfeldPoly, primitive_root, qstring
from .qnum import as_qparam, q_int
from .repcore.module import (
    DEGREE,
    GENERATORS,
    WEIGHT_SHIFT,
    Module,
    relation_words,
    serre_words,
    tensor,
    trivial_module,
)


def graded_twist(V: Module) -> Module:
    """``E(V)`` on ``V (+) V``: a degree-d generator acts by ``[[g, 0], [d g, g]]``.

    Basis order is (first copy, second copy); the second copy is the
    submodule, the first copy maps onto the quotient.
    """
    mats = {}
    n = V.dim
    for g in GENERATORS:
        G = getattr(V, g)
        m = la.zeros(2 * n)
        m[:n, :n] = G
        m[n:, n:] = G
        m[n:, :n] = DEGREE[g] * G
        mats[g] = m
    return Module(V.weights + V.weights, q=V.q, label=f"eself({V.label})", **mats)


def _relations(q):
    rels = [(name, terms) for name, terms, _ in relation_words()]
    for (i, j) in ((1, 0), (0, 1)):
        for sign in "+-":
            rels.append((f"serre{sign}({i},{j})", serre_words(i, j, sign, q)))
    return rels


@dataclass
class ExtSpace:
    """Ext^1(V, W) as cocycles modulo inner coboundaries.

    ``cocycle_basis`` holds representatives of a basis of the quotient, each
    a dict generator -> ``W.dim x V.dim`` matrix.
    """

    V: Module
    W: Module
    window: int | None
    cocycle_basis: list[dict[str, np.ndarray]]
    dim_cocycles: int
    dim_coboundaries: int
    positions: list[tuple[str, int, int]] = field(repr=False, default_factory=list)
    _coboundary_vectors: list = field(repr=False, default_factory=list)

    @property
    def dim(self) -> int:
        return len(self.cocycle_basis)

    def to_vector(self, cocycle: dict[str, np.ndarray]) -> np.ndarray:
        out = la.vec([0] * len(self.positions))
        allowed = set(self.positions)
        for g in GENERATORS:
            m = cocycle.get(g)
            if m is None:
                continue
            for (i, j), x in np.ndenumerate(m):
                if x != 0 and (g, i, j) not in allowed:
                    raise ValueError(f"delta_{g}[{i},{j}] is not weight homogeneous")
        for t, (g, i, j) in enumerate(self.positions):
            if g in cocycle:
                out[t] = Fraction(cocycle[g][i, j])
        return out

    def to_cocycle(self, v) -> dict[str, np.ndarray]:
        out = {g: la.zeros(self.W.dim, self.V.dim) for g in GENERATORS}
        for t, (g, i, j) in enumerate(self.positions):
            out[g][i, j] = Fraction(v[t])
        return out

    def coordinates(self, cocycle: dict[str, np.ndarray]) -> list[Fraction]:
        """Coordinates of the class of ``cocycle`` on ``cocycle_basis``."""
        target = self.to_vector(cocycle)
        if not is_cocycle(cocycle, self.V, self.W):
            raise ValueError("not a cocycle")
        cols = [self.to_vector(c) for c in self.cocycle_basis] + list(self._coboundary_vectors)
        if not cols:
            return []
        A = np.array(cols, dtype=object).T
        x = la.solve(A, target)
        if x is None:
            raise ArithmeticError("cocycle does not lie in the computed cocycle space")
        return [Fraction(c) for c in x[: self.dim]]


def _positions(V: Module, W: Module) -> list[tuple[str, int, int]]:
    out = []
    for g in GENERATORS:
        shift = WEIGHT_SHIFT[g]
        for i, wi in enumerate(W.weights):
            for j, vj in enumerate(V.weights):
                if wi == vj + shift:
                    out.append((g, i, j))
    return out


def _prefix_suffix_terms(V: Module, W: Module, terms):
    """For ``sum c word``: list of ``(c, A, g, B)`` with the off-diagonal block
    of ``c word`` equal to ``sum c A delta_g B``."""
    out = []
    for c, word in terms:
        for t, g in enumerate(word):
            A = la.eye(W.dim)
            for h in word[:t]:
                A = la.mm(A, W.gen(h))
            B = la.eye(V.dim)
            for h in word[t + 1:]:
                B = la.mm(B, V.gen(h))
            out.append((c, A, g, B))
    return out


def cocycle_equations(V: Module, W: Module, positions=None) -> list[dict]:
    """Sparse rows (unknown index -> coefficient) of the linearised relations."""
    positions = _positions(V, W) if positions is None else positions
    by_gen: dict[str, list[tuple[int, int, int]]] = {g: [] for g in GENERATORS}
    for t, (g, i, j) in enumerate(positions):
        by_gen[g].append((t, i, j))
    rows = []
    for _name, terms in _relations(V.q):
        eqs: dict[tuple[int, int], dict[int, Fraction]] = {}
        for c, A, g, B in _prefix_suffix_terms(V, W, terms):
            for t, i, j in by_gen[g]:
                col = A[:, i]
                row = B[j, :]
                nz_a = [a for a in range(W.dim) if col[a] != 0]
                if not nz_a:
                    continue
                nz_b = [b for b in range(V.dim) if row[b] != 0]
                for a in nz_a:
                    ca = c * col[a]
                    for b in nz_b:
                        eq = eqs.setdefault((a, b), {})
                        eq[t] = eq.get(t, 0) + ca * row[b]
        rows.extend({t: x for t, x in eq.items() if x != 0} for eq in eqs.values())
    return [r for r in rows if r]


def coboundary_vectors(V: Module, W: Module, positions=None) -> list[np.ndarray]:
    """Images of the weight-preserving maps ``N`` under ``N -> rho_W N - N rho_V``."""
    positions = _positions(V, W) if positions is None else positions
    index = {p: t for t, p in enumerate(positions)}
    out = []
    for i, wi in enumerate(W.weights):
        for j, vj in enumerate(V.weights):
            if wi != vj:
                continue
            v = la.vec([0] * len(positions))
            for g in GENERATORS:
                # (rho_W(g) E_ij - E_ij rho_V(g))[a, b] = W_g[a, i] d_{j b} - d_{a i} V_g[j, b]
                Wg, Vg = W.gen(g), V.gen(g)
                for a in range(W.dim):
                    if Wg[a, i] != 0:
                        v[index[(g, a, j)]] += Wg[a, i]
                for b in range(V.dim):
                    if Vg[j, b] != 0:
                        v[index[(g, i, b)]] -= Vg[j, b]
            out.append(v)
    return out


def ext1(V: Module, W: Module | None = None, R: int | None = None) -> ExtSpace:
    """Ext^1(V, W) in the category of type-1 modules (``W`` defaults to ``V``).

    Only the finite Chevalley presentation enters, so ``R`` is recorded but
    does not affect the answer.
    """
    W = V if W is None else W
    if V.q != W.q:
        raise ValueError("ext1 needs modules over the same q")
    positions = _positions(V, W)
    n = len(positions)
    Z = la.nullspace_sparse(cocycle_equations(V, W, positions), n)
    B = coboundary_vectors(V, W, positions)
    eb = la.EchelonBasis(n)
    for b in B:
        eb.add(b)
    dim_B = len(eb)
    zspace = la.EchelonBasis(n)
    for z in Z:
        zspace.add(z)
    if any(not zspace.contains(b) for b in B):
        raise ArithmeticError("a coboundary failed the cocycle equations")
    b_basis = eb.basis()
    reps = [z for z in Z if eb.add(z)]
    space = ExtSpace(V, W, R, [], len(Z), dim_B, positions, b_basis)
    space.cocycle_basis = [space.to_cocycle(z) for z in reps]
    return space


def extension_module(V: Module, W: Module, cocycle: dict[str, np.ndarray], label: str = "") -> Module:
    """The module on ``W (+) V`` (W first) defined by ``cocycle``."""
    mats = {}
    for g in GENERATORS:
        m = la.zeros(W.dim + V.dim)
        m[: W.dim, : W.dim] = W.gen(g)
        m[W.dim:, W.dim:] = V.gen(g)
        m[: W.dim, W.dim:] = cocycle.get(g, la.zeros(W.dim, V.dim))
        mats[g] = m
    return Module(W.weights + V.weights, q=V.q, label=label or f"ext({V.label},{W.label})", **mats)


def is_cocycle(cocycle: dict[str, np.ndarray], V: Module, W: Module) -> bool:
    try:
        E = extension_module(V, W, cocycle)
    except ValueError:
        return False
    from .repcore.module import verify_presentation

    return verify_presentation(E).passed


def extract_cocycle(V_ext: Module, V: Module) -> dict[str, np.ndarray]:
    """Off-diagonal blocks of a self-extension of ``V`` laid out on ``V (+) V``.

    Accepts the submodule-first layout (upper-right block) and the
    quotient-first layout used by :func:`graded_twist` (lower-left block).
    """
    n = V.dim
    if V_ext.dim != 2 * n or V_ext.weights != V.weights + V.weights:
        raise ValueError("extension must live on V (+) V with matching weights")
    upper, lower = {}, {}
    for g in GENERATORS:
        M, G = V_ext.gen(g), V.gen(g)
        if not (np.array_equal(M[:n, :n], G) and np.array_equal(M[n:, n:], G)):
            raise ValueError(f"diagonal blocks of {g} differ from V")
        upper[g] = M[:n, n:].copy()
        lower[g] = M[n:, :n].copy()
    has_upper = any(not la.is_zero(m) for m in upper.values())
    has_lower = any(not la.is_zero(m) for m in lower.values())
    if has_upper and has_lower:
        raise ValueError("extension is not block triangular")
    return lower if has_lower else upper


def class_of(V_ext: Module, V: Module, space: ExtSpace | None = None) -> list[Fraction]:
    """Coordinates of ``[V_ext]`` in ``Ext^1(V, V)``."""
    space = ext1(V) if space is None else space
    return space.coordinates(extract_cocycle(V_ext, V))


# --- prime factorisation bookkeeping -------------------------------------------

def qstring_decomposition(pi: DrinfeldPoly, q) -> list[tuple[int, Fraction]]:
    """Split ``pi`` into q-strings in general position, longest first.

    Repeatedly removing a longest string contained in the root multiset
    leaves strings whose pairwise unions are never strictly longer strings.
    """
    q = as_qparam(q)
    q2 = q.q ** 2
    counts = {a: p for a, p in pi.roots}
    out = []
    while counts:
        best = None
        for a in counts:
            if a / q2 in counts:
                continue
            length, b = 0, a
            while b in counts:
                length += 1
                b *= q2
            if best is None or length > best[0] or (length == best[0] and a < best[1]):
                best = (length, a)
        length, bottom = best
        centre = bottom * q.q ** (length - 1)
        out.append((length, centre))
        b = bottom
        for _ in range(length):
            counts[b] -= 1
            if not counts[b]:
                del counts[b]
            b *= q2
    return out


def simple_module_of(pi: DrinfeldPoly, q) -> Module:
    """``V(pi)`` as the tensor product of evaluation modules of its q-strings."""
    from .sl2eval import eval_module

    q = as_qparam(q)
    if pi.is_trivial:
        return trivial_module(q)
    strings = qstring_decomposition(pi, q)
    mods = [eval_module(m, c, q) for m, c in strings]
    out = mods[0]
    for M in mods[1:]:
        out = tensor(out, M)
    return out.relabel(f"V({pi})")


@dataclass
class Theorem1Part2Report:
    pi: DrinfeldPoly
    strings: list[tuple[int, Fraction]]
    simple: bool
    ext_dim: int | None
    applicable: bool
    pi0: DrinfeldPoly | None = None
    s: int | None = None
    pi0_is_qstring: bool | None = None
    consistent: bool | None = None
    note: str = ""

    def as_dict(self) -> dict:
        return {
            "pi": str(self.pi),
            "strings": [[m, str(c)] for m, c in self.strings],
            "simple": self.simple,
            "ext_dim": self.ext_dim,
            "applicable": self.applicable,
            "pi0": None if self.pi0 is None else str(self.pi0),
            "s": self.s,
            "pi0_is_qstring": self.pi0_is_qstring,
            "consistent": self.consistent,
            "note": self.note,
        }


def theorem1_part2_analysis(pi: DrinfeldPoly, q) -> Theorem1Part2Report:
    """Check that ``dim Ext^1(V(pi), V(pi)) = 1`` forces ``pi = pi0^s`` with ``V(pi0)`` prime."""
    from .repcore.analysis import is_simple

    q = as_qparam(q)
    if pi.is_trivial:
        raise ValueError("needs a nontrivial Drinfeld polynomial")
    strings = qstring_decomposition(pi, q)
    V = simple_module_of(pi, q)
    if not is_simple(V).simple:
        return Theorem1Part2Report(pi, strings, False, None, False, note="input module is not simple")
    dim = ext1(V).dim
    pi0, s = primitive_root(pi)
    pi0_strings = qstring_decomposition(pi0, q)
    pi0_is_qstring = len(pi0_strings) == 1
    if dim != 1:
        note = "not applicable: dim Ext^1 = %d" % dim
        if s == 1:
            note += "; pi is not a proper power"
        return Theorem1Part2Report(pi, strings, True, dim, False, pi0, s, pi0_is_qstring, None, note)
    rebuilt = pi0 ** s
    consistent = rebuilt == pi and pi0_is_qstring
    return Theorem1Part2Report(pi, strings, True, dim, True, pi0, s, pi0_is_qstring, consistent,
                               "pi = pi0^s with V(pi0) an evaluation module" if consistent else
                               "dim Ext^1 = 1 but factorisation check failed")


# --- a small forcing identity ------------------------------------------------------

def walkprop_system(m: int, a_cart: int, q, rs=(1, 2, 3)) -> np.ndarray:
    """Rows ``(-[ra] q^{r(a-m)}, [rm], -q^{ra}[r(m-a)])`` in unknowns ``(z1, zn, z')``."""
    q = as_qparam(q)
    qq = q.q
    rows = []
    for r in rs:
        rows.append([-q_int(r * a_cart, q) * qq ** (r * (a_cart - m)),
                     q_int(r * m, q),
                     -(qq ** (r * a_cart)) * q_int(r * (m - a_cart), q)])
    return la.mat(rows)


def walkprop_forcing_check(m: int, a_cart: int, q=2) -> bool:
    """True iff the solutions ``(z1, zn, z')`` form exactly the line ``z1 = zn = z'``."""
    sols = la.nullspace(walkprop_system(m, a_cart, q))
    if len(sols) != 1:
        return False
    v = sols[0]
    return v[0] != 0 and v[0] == v[1] == v[2]
