"""Exact scalars, quantum integers and truncated power series.

Every scalar in the package is a :class:`fractions.Fraction`.  Series and
polynomials are dense coefficient lists indexed from degree 0.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Mapping, Sequence, TypeVar, Union

Scalar = Fraction
ScalarLike = Union[int, Fraction, str]

T = TypeVar("T")


def as_scalar(x: ScalarLike) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction.

    Floats are rejected: nothing in this package is allowed to round.
    """
    if isinstance(x, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    if hasattr(x, "numerator") and hasattr(x, "denominator") and not isinstance(x, float):
        return Fraction(int(x.numerator), int(x.denominator))
    raise TypeError(f"cannot use {type(x).__name__} as an exact scalar")


def scalar_str(x: Fraction) -> str:
    return str(as_scalar(x))


class QParam:
    """The deformation parameter: a rational different from 0, 1 and -1.

    Such a rational is never a root of unity.
    """

    __slots__ = ("_q",)

    def __init__(self, q: ScalarLike = 2):
        q = as_scalar(q.q if isinstance(q, QParam) else q)
        if q in (0, 1, -1):
            raise ValueError(f"q must avoid 0 and +-1, got {q}")
        self._q = q

    @property
    def q(self) -> Fraction:
        return self._q

    def __pow__(self, n: int) -> Fraction:
        return self._q ** n

    def __eq__(self, other):
        if isinstance(other, QParam):
            return self._q == other._q
        return NotImplemented

    def __hash__(self):
        return hash(("QParam", self._q))

    def __repr__(self):
        return f"QParam({self._q})"

    def __str__(self):
        return str(self._q)


def as_qparam(q) -> QParam:
    return q if isinstance(q, QParam) else QParam(q)


def q_int(m: int, q) -> Fraction:
    """Quantum integer ``(q^m - q^-m) / (q - q^-1)``; odd in ``m``."""
    q = as_qparam(q).q
    return (q ** m - q ** (-m)) / (q - 1 / q)


def q_factorial(ell: int, q) -> Fraction:
    if ell < 0:
        raise ValueError("q_factorial needs a nonnegative argument")
    out = Fraction(1)
    for k in range(1, ell + 1):
        out *= q_int(k, q)
    return out


def q_binom(ell: int, r: int, q) -> Fraction:
    if ell < 0 or r < 0:
        raise ValueError("q_binom needs nonnegative arguments")
    if r > ell:
        raise ValueError(f"q_binom({ell}, {r}): r exceeds ell")
    return q_factorial(ell, q) / (q_factorial(ell - r, q) * q_factorial(r, q))


# --- truncated power series -------------------------------------------------

def _dense(coeffs: Union[Mapping[int, ScalarLike], Sequence[ScalarLike]], order: int) -> list:
    if isinstance(coeffs, Mapping):
        out = [Fraction(0)] * (order + 1)
        for d, c in coeffs.items():
            if d < 0:
                raise ValueError("series degrees must be nonnegative")
            if d <= order:
                out[d] = as_scalar(c)
        return out
    out = [as_scalar(c) for c in list(coeffs)[: order + 1]]
    return out + [Fraction(0)] * (order + 1 - len(out))


def series_exp(g: Sequence[T], order: int, *, one: T, zero: T,
               mul: Callable[[T, T], T] = lambda a, b: a * b) -> list:
    """``exp(g)`` through degree ``order`` for ``g`` with zero constant term.

    Works over any commutative ring whose elements support ``+``, scaling by
    Fractions and ``mul``; used for scalars and for commuting matrices alike.
    Uses ``n f_n = sum_k k g_k f_{n-k}`` (from ``f' = g' f``).
    """
    g = list(g) + [zero] * max(0, order + 1 - len(g))
    f = [one]
    for n in range(1, order + 1):
        acc = zero
        for k in range(1, n + 1):
            acc = acc + mul(g[k], f[n - k]) * k
        f.append(acc * Fraction(1, n))
    return f


def series_log(f: Sequence[T], order: int, *, zero: T,
               mul: Callable[[T, T], T] = lambda a, b: a * b) -> list:
    """Inverse of :func:`series_exp`: ``f`` must have constant term one."""
    f = list(f) + [zero] * max(0, order + 1 - len(f))
    g = [zero]
    for n in range(1, order + 1):
        acc = f[n] * n
        for k in range(1, n):
            acc = acc - mul(g[k], f[n - k]) * k
        g.append(acc * Fraction(1, n))
    return g


def truncated_exp_series(coeffs: Union[Mapping[int, ScalarLike], Sequence[ScalarLike]],
                         order: int) -> list[Fraction]:
    """Coefficients of ``exp(sum c_s u^s)`` through ``u^order``."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    if isinstance(coeffs, Mapping):
        if as_scalar(coeffs.get(0, 0)) != 0 or any(d == 0 for d in coeffs):
            raise ValueError("exponent series must not have a degree-0 term")
    elif len(coeffs) and as_scalar(coeffs[0]) != 0:
        raise ValueError("exponent series must not have a degree-0 term")
    g = _dense(coeffs, order)
    return series_exp(g, order, one=Fraction(1), zero=Fraction(0))


def truncated_log_series(coeffs: Union[Mapping[int, ScalarLike], Sequence[ScalarLike]],
                         order: int) -> list[Fraction]:
    f = _dense(coeffs, order)
    if f[0] != 1:
        raise ValueError("log needs constant term 1")
    return series_log(f, order, zero=Fraction(0))


# --- dense polynomials over Q -----------------------------------------------

def poly_trim(p: Iterable[Fraction]) -> list[Fraction]:
    p = [as_scalar(c) for c in p]
    while p and p[-1] == 0:
        p.pop()
    return p


def poly_mul(a: Sequence[Fraction], b: Sequence[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return poly_trim(out)


def poly_add(a: Sequence[Fraction], b: Sequence[Fraction]) -> list[Fraction]:
    n = max(len(a), len(b))
    return poly_trim((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n))


def poly_scale(a: Sequence[Fraction], c) -> list[Fraction]:
    return poly_trim(x * c for x in a)


def poly_divmod(a: Sequence[Fraction], b: Sequence[Fraction]) -> tuple[list, list]:
    a, b = poly_trim(a), poly_trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    quot = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    rem = list(a)
    while len(rem) >= len(b):
        c = rem[-1] / b[-1]
        shift = len(rem) - len(b)
        quot[shift] = c
        for i, y in enumerate(b):
            rem[shift + i] -= c * y
        rem = poly_trim(rem)
    return poly_trim(quot), rem


def poly_gcd(a: Sequence[Fraction], b: Sequence[Fraction]) -> list[Fraction]:
    """Monic gcd over Q (the empty list stands for the zero polynomial)."""
    a, b = poly_trim(a), poly_trim(b)
    while b:
        a, b = b, poly_divmod(a, b)[1]
    if not a:
        return []
    return [c / a[-1] for c in a]


def poly_eval(p: Sequence[Fraction], x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def poly_compose_scale(p: Sequence[Fraction], c) -> list[Fraction]:
    """``p(c u)``."""
    c = as_scalar(c)
    return poly_trim(x * c ** i for i, x in enumerate(p))
