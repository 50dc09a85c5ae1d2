"""Hurwitz order, the integral group G(Z), principal congruence subgroups and
the automorphy condition for H^n-valued functions on the ball.

Order coordinates: q = a + b i + c j + d w with w = (1+i+j+k)/2, so
a = t - z, b = x - z, c = y - z, d = 2z; q is in O iff a, b, c, d are integers.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

import numpy as np

from .errors import ConfigError, DomainError
from .group import QMatrix2, frac_linear
from .quaternion import ONE, ZERO, Quaternion, qinv
from .representations import rho
from .scalars import DEFAULT_TOL


def order_coords(q: Quaternion) -> tuple:
    t, x, y, z = (Fraction(v) for v in q.coords())
    return (t - z, x - z, y - z, 2 * z)


def from_order_coords(a, b, c, d) -> Quaternion:
    h = Fraction(d, 2)
    return Quaternion(Fraction(a) + h, Fraction(b) + h, Fraction(c) + h, h)


def order_contains(q: Quaternion) -> bool:
    """Membership in the Hurwitz order."""
    return all(v.denominator == 1 for v in order_coords(q))


def _frac_dist(v: Fraction) -> Fraction:
    r = v - round(v)
    return abs(r)


def unit_group() -> list:
    """The 24 Hurwitz units."""
    units = []
    for k in range(4):
        for s in (1, -1):
            c = [0, 0, 0, 0]
            c[k] = s
            units.append(Quaternion(*(Fraction(v) for v in c)))
    half = Fraction(1, 2)
    for signs in product((1, -1), repeat=4):
        units.append(Quaternion(*(s * half for s in signs)))
    return units


def _conj_t(g: QMatrix2) -> QMatrix2:
    return QMatrix2(g.a.conj(), g.c.conj(), g.b.conj(), g.d.conj())


def unitary_defect(g: QMatrix2) -> Fraction:
    """max coordinate of g^* diag(1,-1) g - diag(1,-1)."""
    jm = QMatrix2(ONE, ZERO, ZERO, -ONE)
    m = _conj_t(g) * jm * g - jm
    return max(max(abs(Fraction(v)) for v in e.coords()) for e in m.entries())


def gz_membership(g: QMatrix2) -> Fraction:
    """0 iff g is in G(Z): unitary defect plus distance of order coordinates to Z."""
    integ = sum((_frac_dist(v) for e in g.entries() for v in order_coords(e)), Fraction(0))
    return unitary_defect(g) + integ


def gammaN_membership(g: QMatrix2, N: int) -> bool:
    """g - I in N*O entrywise, checked as (g - I)/N in O."""
    if N < 1:
        raise ConfigError("level N must be >= 1")
    if gz_membership(g) != 0:
        raise DomainError("g is not in G(Z)")
    d = g - QMatrix2.identity()
    return all(order_contains(e / N) for e in d.entries())


def gammaN_membership_mod(g: QMatrix2, N: int) -> bool:
    """Independent check: reduce the order coordinates of g mod N and compare with I."""
    ident = ((1, 0, 0, 0), (0, 0, 0, 0), (0, 0, 0, 0), (1, 0, 0, 0))
    for e, target in zip(g.entries(), ident):
        coords = order_coords(e)
        if any(int(v) % N != t % N for v, t in zip(coords, target)):
            return False
    return True


# G(Z) search in doubled integer coordinates: Q = 2q
def _imul(p, q):
    a1, b1, c1, d1 = p
    a2, b2, c2, d2 = q
    return (a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2)


def _iconj(p):
    return (p[0], -p[1], -p[2], -p[3])


def hurwitz_by_norm(max_norm: int) -> dict:
    """norm -> list of doubled coordinate tuples of Hurwitz elements with that norm."""
    out: dict = {m: [] for m in range(max_norm + 1)}
    r = int((4 * max_norm) ** 0.5) + 1
    for v in product(range(-r, r + 1), repeat=4):
        if len({x & 1 for x in v}) != 1:
            continue
        n4 = sum(x * x for x in v)
        if n4 % 4 == 0 and n4 // 4 <= max_norm:
            out[n4 // 4].append(v)
    return out


def _from_doubled(v) -> Quaternion:
    return Quaternion(*(Fraction(x, 2) for x in v))


def _is_hurwitz_doubled(v) -> bool:
    return len({x & 1 for x in v}) == 1


@dataclass(frozen=True)
class IntegralGroupElement:
    """Element of G(Z) stored as doubled integer coordinates (2a, 2b, 2c, 2d)."""

    A: tuple
    B: tuple
    C: tuple
    D: tuple

    def entries(self) -> tuple:
        return (self.A, self.B, self.C, self.D)

    def to_qmatrix(self) -> QMatrix2:
        return QMatrix2(*(_from_doubled(v) for v in self.entries()))

    @classmethod
    def from_qmatrix(cls, g: QMatrix2) -> "IntegralGroupElement":
        out = []
        for e in g.entries():
            v = tuple(2 * Fraction(x) for x in e.coords())
            if any(x.denominator != 1 for x in v):
                raise DomainError("entry is not in (1/2)Z^4")
            out.append(tuple(int(x) for x in v))
        return cls(*out)

    def height(self) -> int:
        return max(sum(x * x for x in v) // 4 for v in self.entries())

    def unitary_defect4(self) -> int:
        """max |4 (g^* diag(1,-1) g - diag(1,-1))| over coordinates, in integers."""
        A, B, C, D = self.entries()
        m = [_isub(_imul(_iconj(A), A), _imul(_iconj(C), C)),
             _isub(_imul(_iconj(A), B), _imul(_iconj(C), D)),
             _isub(_imul(_iconj(B), A), _imul(_iconj(D), C)),
             _isub(_imul(_iconj(B), B), _imul(_iconj(D), D))]
        target = ((4, 0, 0, 0), (0, 0, 0, 0), (0, 0, 0, 0), (-4, 0, 0, 0))
        return max(abs(x - y) for e, t in zip(m, target) for x, y in zip(e, t))

    def is_member(self) -> bool:
        return all(_is_hurwitz_doubled(v) for v in self.entries()) and self.unitary_defect4() == 0


def _isub(p, q):
    return tuple(a - b for a, b in zip(p, q))


_IDENT2 = ((2, 0, 0, 0), (0, 0, 0, 0), (0, 0, 0, 0), (2, 0, 0, 0))


def gammaN_int(g: IntegralGroupElement, N: int) -> bool:
    """(g - I)/N in O entrywise, in doubled integer coordinates."""
    for v, t in zip(g.entries(), _IDENT2):
        d = _isub(v, t)
        if any(x % N for x in d) or not _is_hurwitz_doubled(tuple(x // N for x in d)):
            return False
    return True


def gammaN_int_mod(g: IntegralGroupElement, N: int) -> bool:
    """Reduce the order coordinates (a, b, c, d) of each entry mod N and compare with I."""
    ident = ((1, 0, 0, 0), (0, 0, 0, 0), (0, 0, 0, 0), (1, 0, 0, 0))
    for v, t in zip(g.entries(), ident):
        T, X, Y, Z = v
        coords = ((T - Z) // 2, (X - Z) // 2, (Y - Z) // 2, Z)
        if any((c - s) % N for c, s in zip(coords, t)):
            return False
    return True


def search_gz(height: int) -> list:
    """All g = [[a, b], [c, d]] in G(Z) whose entries have norm <= height.

    From g^* J g = J and g J g^* = J: N a = N d = N b + 1 = N c + 1 and
    b = a conj(c) d / N a.
    """
    if height < 1:
        raise ConfigError("height must be >= 1")
    by_norm = hurwitz_by_norm(height)
    found = []
    for na in range(1, height + 1):
        nc = na - 1
        den = 4 * na  # 2b = (2a)(2 conj c)(2d) / (4 N a)
        for A in by_norm[na]:
            for C in by_norm[nc]:
                ac = _imul(A, _iconj(C))
                for D in by_norm[na]:
                    num = _imul(ac, D)
                    if num[0] % den or num[1] % den or num[2] % den or num[3] % den:
                        continue
                    B = (num[0] // den, num[1] // den, num[2] // den, num[3] // den)
                    if not _is_hurwitz_doubled(B):
                        continue
                    g = IntegralGroupElement(A, B, C, D)
                    if g.unitary_defect4() == 0:
                        found.append(g)
    return found


def k_integral() -> list:
    """K cap G(Z) = {diag(u1, u2)} over Hurwitz units (576 elements)."""
    us = unit_group()
    return [QMatrix2.diag(u1, u2) for u1 in us for u2 in us]


# automorphy
def _cq(c) -> Quaternion:
    c = complex(c)
    return Quaternion(c.real, c.imag, 0.0, 0.0)


def row_times_matrix(h, m) -> list:
    """(h . M)_i = sum_l h_l M[l][i], complex scalars acting on the right."""
    n = len(h)
    return [sum((h[l] * _cq(m[l, i]) for l in range(n)), Quaternion(0.0, 0.0, 0.0, 0.0)) for i in range(n)]


def matrix_times_col(m, h) -> list:
    """(M . h)_j = sum_k M[j][k] h_k, complex scalars acting on the left."""
    n = len(h)
    return [sum((_cq(m[j, k]) * h[k] for k in range(n)), Quaternion(0.0, 0.0, 0.0, 0.0)) for j in range(n)]


def weight_matrix(u: Quaternion, n: int, convention: str = "rho") -> np.ndarray:
    """Right factor on H^n: rho_{n-1}(u) = R_{n-1}(u)^t (default) or R_{n-1}(u) as printed."""
    m = rho(u.to_float(), n - 1).astype(complex)
    if convention == "rho":
        return m
    if convention == "R":
        return m.T
    raise ValueError(f"unknown convention {convention!r}")


def automorphy_factor(g: QMatrix2, q: Quaternion, side: str = "rho"):
    gf, qf = g.to_float(), q.to_float()
    if side == "rho":
        return gf.c * qf + gf.d
    if side == "lambda":
        return gf.a + gf.b * qf.conj()
    raise ValueError(f"side must be 'rho' or 'lambda', got {side!r}")


def automorphy_residual(h, g: QMatrix2, q: Quaternion, n: int, side: str = "rho",
                        convention: str = "rho", eps: float = DEFAULT_TOL) -> float:
    """max |h(g.q) - |J|^2 J h(q) M(J)| with J = cq+d (side rho) or a + b conj(q) (side lambda)."""
    gf, qf = g.to_float(), q.to_float()
    J = automorphy_factor(gf, qf, side)
    if J.norm() < eps:
        from .errors import SingularDenominatorError

        raise SingularDenominatorError(f"N(J) = {J.norm()}")
    lhs = h(frac_linear(gf, qf, eps))
    rhs = row_times_matrix([J * v * float(J.norm()) for v in h(qf)], weight_matrix(J, n, convention))
    return max((a - b).maxabs() for a, b in zip(lhs, rhs))


@dataclass(frozen=True)
class Symmetrized:
    """h_F(q) = |F|^-1 sum_{g in F} |J|^-2 J^-1 h(g.q) M(J)^-1, J = J(g, q)."""

    base: object
    group: tuple
    n: int
    convention: str = "rho"

    def __post_init__(self):
        if self.n % 2:
            raise DomainError("-I acts by (-1)^n; symmetrisation needs even n")

    def __call__(self, q: Quaternion) -> list:
        qf = q.to_float()
        acc = [Quaternion(0.0, 0.0, 0.0, 0.0)] * self.n
        for g in self.group:
            gf = g.to_float()
            J = automorphy_factor(gf, qf)
            Ji = qinv(J) * (1.0 / float(J.norm()))
            minv = np.linalg.inv(weight_matrix(J, self.n, self.convention))
            vals = row_times_matrix([Ji * v for v in self.base(frac_linear(gf, qf))], minv)
            acc = [a + v for a, v in zip(acc, vals)]
        s = 1.0 / len(self.group)
        return [a * s for a in acc]


def polynomial_vector(polys):
    """Evaluator q -> [p_i(q)] for a list of QPolynomials."""
    return lambda q: [p.evaluate(q.to_float()) for p in polys]


def equivariant_witness(q: Quaternion) -> list:
    """(1 - N q)^-2 (j, 1): weight-2 automorphic for all of Sp(1,1).

    h_0 = (j, 1) satisfies u h_0 rho_1(u) = h_0 for unit u.
    """
    s = (1.0 - float(q.to_float().norm())) ** -2
    return [Quaternion(0.0, 0.0, s, 0.0), Quaternion(s, 0.0, 0.0, 0.0)]
