"""su(2) and sp(1,1): structure constants, Killing forms, roots and root vectors.

Elements of g_0 (and its complexification g) are 2x2 quaternion matrices,
coordinatised by the ordered basis S = S1 u S2.  The root-vector prefactors
1/sqrt(-24) and 1/sqrt(-48) are carried symbolically as ``inv_sqrt`` tags so
every normalisation identity can be checked in exact arithmetic.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .errors import BasisDecompositionError, NotARootError
from .group import QMatrix2
from .quaternion import I_, J, K, ONE, Quaternion, iota_embed
from .scalars import GaussianRational

GI = GaussianRational(0, 1)
_Z = Quaternion(Fraction(0), Fraction(0), Fraction(0), Fraction(0))


def _q(t=0, x=0, y=0, z=0) -> Quaternion:
    return Quaternion(*(GaussianRational.coerce(Fraction(v)) if not isinstance(v, GaussianRational) else v
                        for v in (t, x, y, z)))


_S1 = [QMatrix2(e, _Z, _Z, _Z) for e in (I_, J, K)] + [QMatrix2(_Z, _Z, _Z, e) for e in (I_, J, K)]
_S2 = [QMatrix2(_Z, ONE, ONE, _Z)] + [QMatrix2(_Z, e, -e, _Z) for e in (I_, J, K)]
BASIS_S = tuple(_S1 + _S2)
DIM = 10


def to_matrix(coords) -> QMatrix2:
    out = QMatrix2(_q(), _q(), _q(), _q())
    for c, s in zip(coords, BASIS_S):
        if c != 0:
            out = out + s.map(lambda v, c=c: GaussianRational.coerce(c) * v)
    return out


def _gr(v) -> GaussianRational:
    return GaussianRational.coerce(v) if not isinstance(v, GaussianRational) else v


def decompose(m: QMatrix2) -> tuple:
    """Coordinates of m in the basis S; raises if m is not in g."""
    a, b, c, d = m.entries()
    if a.t != 0 or d.t != 0 or c != b.conj():
        raise BasisDecompositionError(f"matrix leaves span(S): {m}")
    return tuple(_gr(v) for v in (a.x, a.y, a.z, d.x, d.y, d.z, b.t, b.x, b.y, b.z))


def bracket(x, y) -> tuple:
    """[X, Y] = XY - YX in M_2(H), re-expressed in S."""
    mx, my = to_matrix(x), to_matrix(y)
    return decompose(mx * my - my * mx)


def basis_vector(i: int) -> tuple:
    return tuple(GaussianRational(1 if j == i else 0) for j in range(DIM))


def ad_matrix(x) -> np.ndarray:
    cols = [bracket(x, basis_vector(j)) for j in range(DIM)]
    return np.array(cols, dtype=object).T


def _int_basis():
    def conv(q):
        return Quaternion(*(int(GaussianRational.coerce(v).re) for v in q.coords()))
    return [QMatrix2(*(conv(e) for e in m.entries())) for m in BASIS_S]


def _int_decompose(m: QMatrix2) -> tuple:
    a, b, c, d = m.entries()
    if a.t != 0 or d.t != 0 or c != b.conj():
        raise BasisDecompositionError(f"matrix leaves span(S): {m}")
    return (a.x, a.y, a.z, d.x, d.y, d.z, b.t, b.x, b.y, b.z)


@lru_cache(maxsize=None)
def _structure_constants_int() -> tuple:
    basis = _int_basis()
    return tuple(tuple(_int_decompose(x * y - y * x) for y in basis) for x in basis)


def structure_constants() -> np.ndarray:
    """c[i, j, k] = coefficient of S_k in [S_i, S_j] (integers for this basis)."""
    return np.array(_structure_constants_int(), dtype=object)


def _trace(m) -> GaussianRational:
    out = GaussianRational(0)
    for i in range(m.shape[0]):
        out = out + m[i, i]
    return out


def killing(x, y) -> GaussianRational:
    return _trace(ad_matrix(x).dot(ad_matrix(y)))


# su(2) = H_0 with basis i, j, k
_H0 = (I_, J, K)


def su2_bracket(x, y) -> tuple:
    qx = sum((c * e for c, e in zip(x, _H0)), Quaternion(0, 0, 0, 0))
    qy = sum((c * e for c, e in zip(y, _H0)), Quaternion(0, 0, 0, 0))
    r = qx * qy - qy * qx
    if r.t != 0:
        raise BasisDecompositionError("commutator left H_0")
    return (r.x, r.y, r.z)


def su2_ad(x) -> np.ndarray:
    e = [tuple(Fraction(int(i == j)) for j in range(3)) for i in range(3)]
    return np.array([su2_bracket(x, v) for v in e], dtype=object).T


def su2_ad_closed_form(a, b, c) -> np.ndarray:
    return np.array([[0, -2 * c, 2 * b], [2 * c, 0, -2 * a], [-2 * b, 2 * a, 0]], dtype=object)


def killing_matrix(algebra: str) -> np.ndarray:
    if algebra == "su2":
        e = [tuple(Fraction(int(i == j)) for j in range(3)) for i in range(3)]
        ads = [su2_ad(v) for v in e]
        return np.array([[sum(np.diag(a.dot(b)), Fraction(0)) for b in ads] for a in ads], dtype=object)
    if algebra == "sp11":
        # ad(S_i)[k, j] = c[i, j, k], so B_ij = sum_{j,k} c[i, j, k] c[l, k, j]
        c = _structure_constants_int()
        return np.array([[Fraction(sum(c[i][j][k] * c[m][k][j] for j in range(DIM) for k in range(DIM)))
                          for m in range(DIM)] for i in range(DIM)], dtype=object)
    raise ValueError(f"unknown algebra {algebra!r}")


# complexified vectors with symbolic normalisation
@dataclass(frozen=True)
class ComplexLieVector:
    """coords * inv_sqrt^(-1/2) (no prefactor when inv_sqrt is None)."""

    coords: tuple
    inv_sqrt: GaussianRational | None = None

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def scaled(self, s) -> "ComplexLieVector":
        return ComplexLieVector(tuple(_gr(s) * c for c in self.coords), self.inv_sqrt)

    def __add__(self, o: "ComplexLieVector") -> "ComplexLieVector":
        if self.inv_sqrt != o.inv_sqrt:
            if o.is_zero():
                return self
            if self.is_zero():
                return o
            raise ValueError("cannot add vectors with different normalisation tags")
        return ComplexLieVector(tuple(a + b for a, b in zip(self.coords, o.coords)), self.inv_sqrt)

    def __sub__(self, o):
        return self + o.scaled(-1)

    def __eq__(self, o):
        if not isinstance(o, ComplexLieVector):
            return NotImplemented
        return (self - o).is_zero() if (self.inv_sqrt == o.inv_sqrt or self.is_zero() or o.is_zero()) else False

    def __hash__(self):
        return hash((self.coords, self.inv_sqrt))


def _combine(t1, t2, value_is_zero: bool):
    """Prefactor of a bilinear product: returns (multiplier, tag)."""
    if t1 is None:
        return GaussianRational(1), t2
    if t2 is None:
        return GaussianRational(1), t1
    if t1 == t2:
        return GaussianRational(1) / t1, None
    if value_is_zero:
        return GaussianRational(0), None
    raise ValueError("product of distinct square-root prefactors is not exact")


def c_bracket(x: ComplexLieVector, y: ComplexLieVector) -> ComplexLieVector:
    raw = bracket(x.coords, y.coords)
    mult, tag = _combine(x.inv_sqrt, y.inv_sqrt, all(c == 0 for c in raw))
    return ComplexLieVector(tuple(mult * c for c in raw), tag)


_KILLING_CACHE: list = []


def _killing_sp11():
    if not _KILLING_CACHE:
        _KILLING_CACHE.append(killing_matrix("sp11"))
    return _KILLING_CACHE[0]


def c_killing(x: ComplexLieVector, y: ComplexLieVector):
    """Exact B(x, y); raises if the answer would be irrational."""
    km = _killing_sp11()
    raw = GaussianRational(0)
    for i, a in enumerate(x.coords):
        if a == 0:
            continue
        for j, b in enumerate(y.coords):
            if b != 0 and km[i, j] != 0:
                raw = raw + a * km[i, j] * b
    mult, tag = _combine(x.inv_sqrt, y.inv_sqrt, raw == 0)
    if tag is not None:
        raise ValueError("Killing value carries a square-root prefactor")
    return mult * raw


# roots
ROOTS = ((2, 0), (-2, 0), (0, 2), (0, -2), (1, 1), (1, -1), (-1, 1), (-1, -1))
COMPACT_ROOTS = ((2, 0), (-2, 0), (0, 2), (0, -2))
NONCOMPACT_ROOTS = ((1, 1), (1, -1), (-1, 1), (-1, -1))
SIMPLE_ROOTS = ((2, 0), (0, 2), (1, 1), (1, -1))


def _vec(top=None, bottom=None, off=None) -> tuple:
    """Coordinates from imaginary parts of the diagonal and the top-right entry."""
    z = GaussianRational(0)
    t = top or (z, z, z)
    bt = bottom or (z, z, z)
    o = off or (z, z, z, z)
    return tuple(_gr(v) for v in (*t, *bt, *o))


def root_vector(mu) -> ComplexLieVector:
    mu = tuple(mu)
    one = GaussianRational(1)
    z = GaussianRational(0)
    # j -+ i k  -> (i, j, k) coordinates (0, 1, -+i)
    jm = (z, one, -GI)
    jp = (z, one, GI)
    k24 = GaussianRational(-24)
    k48 = GaussianRational(-48)
    table = {
        (2, 0): ComplexLieVector(_vec(top=jm), k24),
        (-2, 0): ComplexLieVector(_vec(top=jp), k24),
        (0, 2): ComplexLieVector(_vec(bottom=jm), k24),
        (0, -2): ComplexLieVector(_vec(bottom=jp), k24),
        # off-diagonal b = 1 -+ i*i_hat etc; c = conj(b) automatically
        (1, -1): ComplexLieVector(_vec(off=(one, -GI, z, z)), k48).scaled(-1),
        (1, 1): ComplexLieVector(_vec(off=(z, z, one, -GI)), k48).scaled(-1),
        (-1, 1): ComplexLieVector(_vec(off=(one, GI, z, z)), k48),
        (-1, -1): ComplexLieVector(_vec(off=(z, z, one, GI)), k48),
    }
    if mu not in table:
        raise NotARootError(f"{mu} is not a root")
    return table[mu]


def cartan_element(mu) -> ComplexLieVector:
    """H_mu = r H_alpha + s H_beta with H_alpha = (-1/12) diag(i*i_hat, 0)."""
    r, s = mu
    f = GaussianRational(0, Fraction(-1, 12))
    z = GaussianRational(0)
    return ComplexLieVector(_vec(top=(f * r, z, z), bottom=(f * s, z, z)))


def cartan_generic(zc, wc) -> ComplexLieVector:
    """diag(z i_hat, w i_hat) in h."""
    z = GaussianRational(0)
    return ComplexLieVector(_vec(top=(_gr(zc), z, z), bottom=(_gr(wc), z, z)))


def root_value(mu, zc, wc) -> GaussianRational:
    """mu(diag(z i_hat, w i_hat)) with alpha -> i z, beta -> i w."""
    r, s = mu
    return GI * (_gr(zc) * r + _gr(wc) * s)


def sl2_triple_map():
    """(e, f, h) in H_0 (x) C together with their iota_C images."""
    half = Fraction(1, 2)
    e = _q(0, 0, half, 0) + _q(0, 0, 0, 1) * GaussianRational(0, -half)
    f = _q(0, 0, -half, 0) + _q(0, 0, 0, 1) * GaussianRational(0, -half)
    h = _q(0, 1, 0, 0) * GaussianRational(0, -1)
    return (e, f, h), tuple(iota_embed(v) for v in (e, f, h))


def su2_c_bracket(p: Quaternion, q: Quaternion) -> Quaternion:
    return p * q - q * p
