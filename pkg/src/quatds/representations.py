"""Symmetric powers of the standard representation and the M_2(H) matrices.

Binary forms of degree n are stored as coefficient vectors ``c`` of the
monomials ``X^(n-i) Y^i``.  ``R_n(g)`` is defined by
``L(aX+bY, cX+dY) = R_n(g) L(X, Y)`` with ``L = (X^n, ..., Y^n)^t``, so the
action ``(g.f)(X, Y) = f(aX+bY, cX+dY)`` on coefficients is ``R_n(g)^t``.

Stacked W/Z matrices use the left complex structure on H: a quaternion is
written ``z + j*w`` and sent to the row ``(z, conj(w))``.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb

import numpy as np

from .errors import SolverDegenerateError
from .quaternion import J, Quaternion, iota_embed, random_unit
from .scalars import GaussianRational, cconj, is_exact

MONOMIAL = "monomial_Xfirst"
STACKED = "stacked"


@dataclass(frozen=True)
class RepMatrix:
    data: np.ndarray
    basis_tag: str = MONOMIAL

    @property
    def shape(self):
        return self.data.shape

    def to_json(self) -> dict:
        from .quaternion import matrix_to_json

        return {"basis_tag": self.basis_tag, "rows": self.data.shape[0],
                "cols": self.data.shape[1], "entries": matrix_to_json(self.data)}


def _is_exact_array(m) -> bool:
    m = np.asarray(m)
    return m.dtype == object and all(is_exact(v) for v in m.flat)


def _zero_like(exact: bool):
    return GaussianRational(0) if exact else 0j


def _as_matrix2(g) -> np.ndarray:
    if isinstance(g, Quaternion):
        return iota_embed(g)
    m = np.asarray(g)
    if m.dtype != object:
        m = m.astype(complex)
    return m


def _polymul(p, q, exact):
    out = [_zero_like(exact)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] = out[i + j] + a * b
    return out


def _power(lin, k, exact):
    out = [GaussianRational(1) if exact else 1 + 0j]
    for _ in range(k):
        out = _polymul(out, lin, exact)
    return out


def rn_rows(g, n: int) -> np.ndarray:
    m = _as_matrix2(g)
    exact = _is_exact_array(m)
    a, b, c, d = m[0, 0], m[0, 1], m[1, 0], m[1, 1]
    rows = []
    for i in range(n + 1):
        rows.append(_polymul(_power([a, b], n - i, exact), _power([c, d], i, exact), exact))
    return np.array(rows, dtype=object if exact else complex).reshape(n + 1, n + 1)


def rn_matrix(g, n: int) -> RepMatrix:
    """R_n(g) for g in M_2(C) or, via iota, a quaternion."""
    return RepMatrix(rn_rows(g, n))


def rho(u, n: int) -> np.ndarray:
    """Matrix of u acting on coefficient vectors of V_n: R_n(u)^t."""
    return rn_rows(u, n).T


# binary forms
@dataclass(frozen=True)
class VPolynomial:
    coeffs: tuple

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def monomial(cls, n: int, i: int, c=1) -> "VPolynomial":
        return cls(tuple(c if j == i else 0 for j in range(n + 1)))

    def __add__(self, o):
        return VPolynomial(tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    def __sub__(self, o):
        return VPolynomial(tuple(a - b for a, b in zip(self.coeffs, o.coeffs)))

    def scale(self, s) -> "VPolynomial":
        return VPolynomial(tuple(s * a for a in self.coeffs))

    def as_array(self) -> np.ndarray:
        return np.array(self.coeffs, dtype=complex)

    def act(self, g) -> "VPolynomial":
        """(g.f)(X, Y) = f(aX+bY, cX+dY)."""
        r = rho(g, self.degree)
        c = np.array(self.coeffs, dtype=r.dtype)
        return VPolynomial(tuple(r.dot(c)))


def poly_diff(f: VPolynomial, var: str) -> VPolynomial:
    n = f.degree
    if n == 0:
        return VPolynomial((0,))
    c = f.coeffs
    if var == "X":
        return VPolynomial(tuple((n - i) * c[i] for i in range(n)))
    if var == "Y":
        return VPolynomial(tuple(i * c[i] for i in range(1, n + 1)))
    raise ValueError(f"unknown variable {var!r}")


def mul_linear(a, b, f: VPolynomial) -> VPolynomial:
    """(aX + bY) * f."""
    n = f.degree
    c = f.coeffs
    out = [0] * (n + 2)
    for i in range(n + 1):
        out[i] = out[i] + a * c[i]
        out[i + 1] = out[i + 1] + b * c[i]
    return VPolynomial(tuple(out))


def p_plus_minus(a, b, f: VPolynomial, sign: str) -> VPolynomial:
    """P+ : (a dX + b dY) (x) f -> (bX - aY) f;  P- : -> a f_X + b f_Y."""
    if sign == "+":
        return mul_linear(b, -a, f)
    if sign == "-":
        return poly_diff(f, "X").scale(a) + poly_diff(f, "Y").scale(b)
    raise ValueError(f"sign must be '+' or '-', got {sign!r}")


def dual_act(u, a, b):
    """u acting on a dX + b dY in V_1^*, i.e. tau -> tau o rho(u)^-1."""
    m = np.linalg.inv(rho(u, 1).astype(complex))
    tau = np.array([a, b], dtype=complex)
    new = tau.dot(m)
    return new[0], new[1]


def v1_to_h(a, b) -> Quaternion:
    """aX + bY -> a - b*j (complex a, b embedded via 1, i)."""
    return Quaternion.from_complex(a) - Quaternion.from_complex(b) * J


def v1_dual_to_v1(a, b) -> VPolynomial:
    """a X^* + b Y^* -> bX - aY."""
    return VPolynomial((b, -a))


def pm_coordinate_matrix(k: int) -> np.ndarray:
    """Matrix of P+ (+) P- on V_1^* (x) V_k in monomial coordinates."""
    cols = []
    for which in ((1, 0), (0, 1)):
        for i in range(k + 1):
            f = VPolynomial.monomial(k, i, 1)
            plus = p_plus_minus(*which, f, "+").coeffs
            minus = p_plus_minus(*which, f, "-").coeffs
            cols.append(list(plus) + list(minus))
    from fractions import Fraction

    return np.array([[Fraction(v) for v in col] for col in cols], dtype=object).T


def exact_rank(m) -> int:
    """Rank of a matrix over Q (Fractions) by elimination."""
    from fractions import Fraction

    rows = [[Fraction(v) for v in r] for r in np.asarray(m, dtype=object)]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        p = rows[rank][col]
        for r in range(len(rows)):
            if r != rank and rows[r][col] != 0:
                f = rows[r][col] / p
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[rank])]
        rank += 1
    return rank


# invariant hermitian form
def jn_solve(n: int, seed: int = 12345, tol: float = 1e-9) -> RepMatrix:
    """Hermitian J_n with R_n(u)^t J_n conj(R_n(u)) = J_n on the unit quaternions."""
    import random

    gens = [Quaternion(0.0, 1.0, 0.0, 0.0), Quaternion(0.0, 0.0, 1.0, 0.0), random_unit(random.Random(seed))]
    d = n + 1
    blocks = []
    for u in gens:
        r = rn_rows(u.to_float(), n).astype(complex)
        # row-major vec: vec(A X B) = kron(A, B^t) vec(X)
        blocks.append(np.kron(r.T, np.conj(r).T) - np.eye(d * d))
    a = np.vstack(blocks)
    _, s, vh = np.linalg.svd(a)
    null = int(np.sum(s < tol * max(1.0, s[0])))
    if null != 1:
        raise SolverDegenerateError(f"invariance system has {null}-dimensional solution space")
    j = vh[-1].conj().reshape(d, d)
    j = j / j[0, 0]
    j = (j + j.conj().T) / 2
    return RepMatrix(j)


def jn_closed_form(n: int) -> np.ndarray:
    """diag(binom(n, i)): (|X|^2 + |Y|^2)^n written in the monomials."""
    return np.diag([float(comb(n, i)) for i in range(n + 1)]).astype(complex)


# M_2(H) = M_2(C) + j M_2(C)
def split_left_j(q: Quaternion):
    """q = z + j*w with z, w complex (z = t + ix, w = y - iz)."""
    i = 1j if not is_exact(q.t) else GaussianRational(0, 1)
    return q.t + i * q.x, q.y - i * q.z


def split_matrix(g):
    """Entrywise g = g0 + j g1 for a QMatrix2-like (a, b, c, d)."""
    entries = [split_left_j(e) for e in (g.a, g.b, g.c, g.d)]
    exact = all(is_exact(e.t) for e in (g.a, g.b, g.c, g.d))
    dt = object if exact else complex
    g0 = np.array([[entries[0][0], entries[1][0]], [entries[2][0], entries[3][0]]], dtype=dt)
    g1 = np.array([[entries[0][1], entries[1][1]], [entries[2][1], entries[3][1]]], dtype=dt)
    if exact:
        g0 = np.vectorize(GaussianRational.coerce, otypes=[object])(g0)
        g1 = np.vectorize(GaussianRational.coerce, otypes=[object])(g1)
    return g0, g1


def _mconj(m):
    return np.vectorize(cconj, otypes=[m.dtype])(m) if m.dtype == object else np.conj(m)


def mu_matrix(g, n: int) -> RepMatrix:
    """[[R(g0), R(conj g1)], [(-1)^n R(g1), R(conj g0)]] for g = g0 + j g1."""
    g0, g1 = split_matrix(g)
    sign = -1 if n % 2 else 1
    top = np.hstack([rn_rows(g0, n), rn_rows(_mconj(g1), n)])
    bot = np.hstack([sign * rn_rows(g1, n), rn_rows(_mconj(g0), n)])
    return RepMatrix(np.vstack([top, bot]))


def psi0_row(q: Quaternion):
    """z + j*w -> (z, conj w)."""
    z, w = split_left_j(q)
    return z, cconj(w)


def _psi_matrix(x: Quaternion, y: Quaternion) -> np.ndarray:
    rx, ry = psi0_row(x), psi0_row(y)
    exact = is_exact(x.t) and is_exact(y.t)
    m = np.array([list(rx), list(ry)], dtype=object if exact else complex)
    if exact:
        m = np.vectorize(GaussianRational.coerce, otypes=[object])(m)
    return m


def w_block(x: Quaternion, y: Quaternion, n: int) -> np.ndarray:
    """Unstacked (n+1)x(n+1) block: row i holds the coefficients of psi0(x)^(n-i) psi0(y)^i."""
    return rn_rows(_psi_matrix(x, y), n)


def w_matrix(x: Quaternion, y: Quaternion, n: int) -> RepMatrix:
    top = w_block(x, y, n)
    bot = w_block(J * x, J * y, n)
    return RepMatrix(np.vstack([top, bot]), STACKED)


def z_matrix(q: Quaternion, n: int) -> RepMatrix:
    one = Quaternion(1, 0, 0, 0) if is_exact(q.t) else Quaternion(1.0, 0.0, 0.0, 0.0)
    return w_matrix(q, one, n)


def mat_residual(a, b) -> float:
    d = np.asarray(a, dtype=object) - np.asarray(b, dtype=object) if (
        np.asarray(a).dtype == object or np.asarray(b).dtype == object) else np.asarray(a) - np.asarray(b)
    return float(max((abs(complex(v)) for v in np.asarray(d).flat), default=0.0))
