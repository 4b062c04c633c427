"""Exact linear algebra over Q.

Matrices handed around the package are numpy ``object`` arrays of
:class:`~fractions.Fraction`.  Elimination runs on sparse dict rows; when
gmpy2 is importable its ``mpq`` type carries the arithmetic (results are
converted back to Fractions on the way out).
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

try:
    from gmpy2 import mpq as _Q
except ImportError:  # pragma: no cover
    _Q = Fraction


def _to_q(x):
    if isinstance(x, Fraction):
        return _Q(x.numerator, x.denominator)
    return _Q(x)


def _to_fraction(x) -> Fraction:
    return Fraction(int(x.numerator), int(x.denominator))


# --- dense helpers ------------------------------------------------------------

def zeros(rows: int, cols: int | None = None) -> np.ndarray:
    cols = rows if cols is None else cols
    out = np.empty((rows, cols), dtype=object)
    out.fill(Fraction(0))
    return out


def eye(n: int) -> np.ndarray:
    out = zeros(n)
    for i in range(n):
        out[i, i] = Fraction(1)
    return out


def diag(entries: Sequence) -> np.ndarray:
    out = zeros(len(entries))
    for i, x in enumerate(entries):
        out[i, i] = Fraction(x)
    return out


def mat(rows: Iterable[Iterable]) -> np.ndarray:
    rows = [[Fraction(x) for x in r] for r in rows]
    if not rows:
        return zeros(0, 0)
    out = zeros(len(rows), len(rows[0]))
    for i, r in enumerate(rows):
        if len(r) != out.shape[1]:
            raise ValueError("ragged matrix")
        out[i, :] = r
    return out


def vec(entries: Iterable) -> np.ndarray:
    e = [Fraction(x) for x in entries]
    out = np.empty(len(e), dtype=object)
    out[:] = e
    return out


def is_zero(m) -> bool:
    return all(x == 0 for x in np.asarray(m).flat)


def nonzero_count(m) -> int:
    return sum(1 for x in np.asarray(m).flat if x != 0)


def mm(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Matrix product that skips zero entries.

    Action matrices of tensor products are mostly zeros, where this beats the
    dense ``ndarray.dot`` on Fractions by a wide margin.
    """
    n, k = a.shape
    k2, p = b.shape
    if k != k2:
        raise ValueError(f"shape mismatch {a.shape} x {b.shape}")
    b_rows = [[(j, x) for j, x in enumerate(b[i]) if x] for i in range(k)]
    out = zeros(n, p)
    for i in range(n):
        acc: dict[int, Fraction] = {}
        for t, x in enumerate(a[i]):
            if x:
                for j, y in b_rows[t]:
                    acc[j] = acc.get(j, 0) + x * y
        for j, v in acc.items():
            out[i, j] = Fraction(v)
    return out


def comm(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return mm(a, b) - mm(b, a)


def mpow(a: np.ndarray, n: int) -> np.ndarray:
    out = eye(a.shape[0])
    for _ in range(n):
        out = mm(out, a)
    return out


# --- sparse echelon engine ---------------------------------------------------

class EchelonBasis:
    """Incrementally maintained reduced row echelon basis of a subspace of Q^n.

    Rows are sparse dicts ``{column: value}`` with pivot entry 1; the basis is
    kept fully reduced, so reducing a vector never needs a particular order.
    """

    def __init__(self, n: int):
        self.n = n
        self.rows: dict[int, dict] = {}

    def __len__(self):
        return len(self.rows)

    @staticmethod
    def _sparse(v) -> dict:
        if isinstance(v, dict):
            return {j: _to_q(x) for j, x in v.items() if x != 0}
        return {j: _to_q(x) for j, x in enumerate(v) if x != 0}

    def reduce(self, v) -> dict:
        w = self._sparse(v)
        for p in [p for p in w if p in self.rows]:
            c = w.get(p)
            if not c:
                continue
            for j, x in self.rows[p].items():
                y = w.get(j, 0) - c * x
                if y:
                    w[j] = y
                else:
                    w.pop(j, None)
        return w

    def add(self, v) -> bool:
        """Insert ``v``; return False when it already lies in the span."""
        w = self.reduce(v)
        if not w:
            return False
        p = min(w)
        inv = 1 / w[p]
        w = {j: x * inv for j, x in w.items()}
        for row in self.rows.values():
            c = row.get(p)
            if c:
                for j, x in w.items():
                    y = row.get(j, 0) - c * x
                    if y:
                        row[j] = y
                    else:
                        row.pop(j, None)
        self.rows[p] = w
        return True

    def contains(self, v) -> bool:
        return not self.reduce(v)

    def pivots(self) -> list[int]:
        return sorted(self.rows)

    def basis(self) -> list[np.ndarray]:
        out = []
        for p in self.pivots():
            v = np.empty(self.n, dtype=object)
            v.fill(Fraction(0))
            for j, x in self.rows[p].items():
                v[j] = _to_fraction(x)
            out.append(v)
        return out

    def coordinates(self, v) -> dict[int, Fraction] | None:
        """Coefficients of ``v`` on the echelon rows (keyed by pivot), or None."""
        w = self._sparse(v)
        coords = {p: w.get(p, 0) for p in self.rows}
        if self.reduce(w):
            return None
        return {p: _to_fraction(c) for p, c in coords.items() if c}


def _rows_of(m) -> list[dict]:
    m = np.asarray(m, dtype=object)
    if m.ndim != 2:
        raise ValueError("expected a matrix")
    return [{j: _to_q(x) for j, x in enumerate(row) if x != 0} for row in m]


def rref_sparse(rows: Iterable[dict], ncols: int) -> EchelonBasis:
    eb = EchelonBasis(ncols)
    for r in rows:
        eb.add(r)
    return eb


def rank(m) -> int:
    m = np.asarray(m, dtype=object)
    if m.size == 0:
        return 0
    return len(rref_sparse(_rows_of(m), m.shape[1]))


def row_space(m) -> list[np.ndarray]:
    m = np.asarray(m, dtype=object)
    if m.size == 0:
        return []
    return rref_sparse(_rows_of(m), m.shape[1]).basis()


def column_space(m) -> list[np.ndarray]:
    return row_space(np.asarray(m, dtype=object).T)


def nullspace_sparse(rows: Iterable[dict], ncols: int) -> list[np.ndarray]:
    eb = rref_sparse(rows, ncols)
    pivots = set(eb.rows)
    out = []
    for free in range(ncols):
        if free in pivots:
            continue
        v = np.empty(ncols, dtype=object)
        v.fill(Fraction(0))
        v[free] = Fraction(1)
        for p, row in eb.rows.items():
            c = row.get(free)
            if c:
                v[p] = -_to_fraction(c)
        out.append(v)
    return out


def nullspace(m) -> list[np.ndarray]:
    """Basis of ``{x : m x = 0}``."""
    m = np.asarray(m, dtype=object)
    return nullspace_sparse(_rows_of(m), m.shape[1])


def solve(a, b) -> np.ndarray | None:
    """One solution of ``a x = b`` (``b`` a vector), or None when inconsistent."""
    a = np.asarray(a, dtype=object)
    n = a.shape[1]
    rows = []
    for i, row in enumerate(a):
        d = {j: _to_q(x) for j, x in enumerate(row) if x != 0}
        if b[i] != 0:
            d[n] = _to_q(b[i])
        rows.append(d)
    eb = rref_sparse(rows, n + 1)
    if n in eb.rows:
        return None
    x = np.empty(n, dtype=object)
    x.fill(Fraction(0))
    for p, row in eb.rows.items():
        c = row.get(n)
        if c:
            x[p] = _to_fraction(c)
    return x


def inverse(a) -> np.ndarray:
    a = np.asarray(a, dtype=object)
    n = a.shape[0]
    cols = []
    for j in range(n):
        e = [Fraction(0)] * n
        e[j] = Fraction(1)
        x = solve(a, e)
        if x is None:
            raise ZeroDivisionError("matrix is singular")
        cols.append(x)
    return np.array(cols, dtype=object).T.copy()


def restrict(op: np.ndarray, basis: Sequence[np.ndarray]) -> np.ndarray | None:
    """Matrix of ``op`` on the span of ``basis`` if that span is invariant."""
    if not basis:
        return zeros(0, 0)
    b = np.array(basis, dtype=object).T
    cols = []
    for v in basis:
        x = solve(b, op.dot(v))
        if x is None:
            return None
        cols.append(x)
    return np.array(cols, dtype=object).T.copy()
