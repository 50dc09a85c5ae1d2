"""Sp(1,1) in M_2(H): membership, Moebius action on the ball, sigma, the
compact factor j(g, q), the dagger involution and weight cocycles."""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction


from .errors import DomainError, SingularDenominatorError
from .quaternion import (ONE, ZERO, Quaternion, qinv, quaternion_from_json, quaternion_to_json,
                         random_rational, random_unit)
from .scalars import DEFAULT_TOL, is_exact


def _exact(q: Quaternion) -> bool:
    return all(is_exact(c) for c in q.coords())


@dataclass(frozen=True)
class QMatrix2:
    """gamma(a, b, c, d) = [[a, b], [c, d]] with quaternion entries."""

    a: Quaternion
    b: Quaternion
    c: Quaternion
    d: Quaternion

    @classmethod
    def identity(cls, exact: bool = True) -> "QMatrix2":
        one = ONE if exact else ONE.to_float()
        zero = ZERO if exact else ZERO.to_float()
        return cls(one, zero, zero, one)

    @classmethod
    def diag(cls, a: Quaternion, d: Quaternion) -> "QMatrix2":
        return cls(a, a * 0, d * 0, d)

    def entries(self):
        return (self.a, self.b, self.c, self.d)

    def __mul__(self, o):
        if isinstance(o, QMatrix2):
            return QMatrix2(self.a * o.a + self.b * o.c, self.a * o.b + self.b * o.d,
                            self.c * o.a + self.d * o.c, self.c * o.b + self.d * o.d)
        return QMatrix2(*(e * o for e in self.entries()))

    def __rmul__(self, o):
        return QMatrix2(*(o * e for e in self.entries()))

    def __sub__(self, o):
        return QMatrix2(*(p - q for p, q in zip(self.entries(), o.entries())))

    def __add__(self, o):
        return QMatrix2(*(p + q for p, q in zip(self.entries(), o.entries())))

    def map(self, fn) -> "QMatrix2":
        return QMatrix2(*(e.map(fn) for e in self.entries()))

    def to_float(self) -> "QMatrix2":
        return self.map(float)

    def is_exact(self) -> bool:
        return all(_exact(e) for e in self.entries())

    def adjoint_inverse(self) -> "QMatrix2":
        """gamma(conj a, -conj c, -conj b, conj d): the inverse when g is in Sp(1,1)."""
        return QMatrix2(self.a.conj(), -self.c.conj(), -self.b.conj(), self.d.conj())

    def maxabs(self) -> float:
        return max(e.maxabs() for e in self.entries())

    def to_json(self) -> list:
        return [[quaternion_to_json(self.a), quaternion_to_json(self.b)],
                [quaternion_to_json(self.c), quaternion_to_json(self.d)]]

    @classmethod
    def from_json(cls, data) -> "QMatrix2":
        (a, b), (c, d) = data
        return cls(*(quaternion_from_json(v) for v in (a, b, c, d)))


def _max_coord(m: QMatrix2):
    vals = [abs(c) for e in m.entries() for c in e.coords()]
    return max(vals)


def is_sp11(g: QMatrix2):
    """Max-coordinate residual of g * gamma(a', -c', -b', d') - I (primes = conjugates)."""
    defect = g * g.adjoint_inverse() - QMatrix2.identity(g.is_exact())
    return _max_coord(defect)


@dataclass(frozen=True)
class ScaledQMatrix:
    """The element ``prefactor_sq ** (-1/2) * matrix``.

    Keeps sigma(q) exact over Q although it involves a square root.
    """

    matrix: QMatrix2
    prefactor_sq: Fraction

    def __mul__(self, o: "ScaledQMatrix") -> "ScaledQMatrix":
        return ScaledQMatrix(self.matrix * o.matrix, self.prefactor_sq * o.prefactor_sq)

    def to_float(self) -> QMatrix2:
        s = 1.0 / math.sqrt(float(self.prefactor_sq))
        return self.matrix.to_float() * s

    def is_identity(self) -> bool:
        """Exact test that the represented element is I."""
        m = self.matrix
        if not (m.b.is_zero() and m.c.is_zero() and m.a == m.d):
            return False
        r = m.a.t
        if not (m.a.x == 0 and m.a.y == 0 and m.a.z == 0) or r <= 0:
            return False
        return r * r == self.prefactor_sq

    def sp11_residual(self):
        """Residual of membership, scaled exactly: M adj(M) - s I."""
        m = self.matrix
        defect = m * m.adjoint_inverse() - QMatrix2.identity(True) * self.prefactor_sq
        return _max_coord(defect)


def check_ball(q: Quaternion):
    n = q.norm()
    if n >= 1:
        raise DomainError(f"N q = {n} is not < 1")


def _denominator(g: QMatrix2, q: Quaternion, eps: float) -> Quaternion:
    den = g.c * q + g.d
    n = den.norm()
    if (_exact(den) and n == 0) or (not _exact(den) and abs(n) < eps):
        raise SingularDenominatorError(f"N(cq+d) = {n}")
    return den


def frac_linear(g: QMatrix2, q: Quaternion, eps: float = DEFAULT_TOL) -> Quaternion:
    """(aq + b)(cq + d)^-1 for any g in GL_2(H)."""
    den = _denominator(g, q, eps)
    return (g.a * q + g.b) * qinv(den, eps)


def mobius_act(g: QMatrix2, q: Quaternion, tol: float = DEFAULT_TOL, check: bool = True) -> Quaternion:
    if check:
        res = is_sp11(g)
        if (g.is_exact() and res != 0) or (not g.is_exact() and res > tol):
            raise DomainError(f"matrix is not in Sp(1,1) (residual {float(res):.3g})")
    return frac_linear(g, q, tol)


def one_minus_norm_factor(g: QMatrix2, q: Quaternion, eps: float = DEFAULT_TOL):
    """(1 - N(g.q)) - (1 - N q)/N(cq+d); vanishes on Sp(1,1)."""
    den = _denominator(g, q, eps)
    gq = frac_linear(g, q, eps)
    n = den.norm()
    if isinstance(n, int):
        n = Fraction(n)
    return (1 - gq.norm()) - (1 - q.norm()) / n


def sigma(q: Quaternion) -> ScaledQMatrix:
    """sigma(q) = (1 - N q)^(-1/2) gamma(1, q, conj q, 1)."""
    check_ball(q)
    one = ONE if _exact(q) else ONE.to_float()
    s = 1 - q.norm()
    if isinstance(s, int):
        s = Fraction(s)
    return ScaledQMatrix(QMatrix2(one, q, q.conj(), one), s)


def sigma_float(q: Quaternion) -> QMatrix2:
    return sigma(q).to_float()


@dataclass(frozen=True)
class KFactor:
    u_left: Quaternion
    u_right: Quaternion
    scale: float

    def as_matrix(self) -> QMatrix2:
        return QMatrix2.diag(self.u_left, self.u_right)


def j_factor(g: QMatrix2, q: Quaternion, eps: float = DEFAULT_TOL) -> KFactor:
    """j(g, q) = diag(a + b conj(q), cq + d) / |cq + d|."""
    gf, qf = g.to_float(), q.to_float()
    den = _denominator(gf, qf, eps)
    scale = den.abs()
    left = (gf.a + gf.b * qf.conj()) * (1.0 / scale)
    return KFactor(left, den * (1.0 / scale), scale)


def j_factor_from_sigma(g: QMatrix2, q: Quaternion) -> QMatrix2:
    """sigma(g.q)^-1 g sigma(q), computed directly as a matrix product."""
    gf, qf = g.to_float(), q.to_float()
    gq = frac_linear(gf, qf)
    return sigma_float(-gq) * gf * sigma_float(qf)


def dagger(g: QMatrix2) -> QMatrix2:
    """gamma(a, b, c, d) -> gamma(d, c, b, a)."""
    return QMatrix2(g.d, g.c, g.b, g.a)


def automorphy_denominator(g: QMatrix2, q: Quaternion, side: str = "rho") -> Quaternion:
    if side == "rho":
        return g.c * q + g.d
    if side == "lambda":
        return g.a + g.b * q.conj()
    raise ValueError(f"side must be 'rho' or 'lambda', got {side!r}")


def weight_cocycle(g: QMatrix2, q: Quaternion, n: int, side: str = "rho", eps: float = DEFAULT_TOL):
    """(|J|^2, J^-1, rho_{n-1}(J^-1)) with J = cq + d (rho) or a + b conj(q) (lambda).

    ``rho_{n-1}(u) = R_{n-1}(u)^t`` is the matrix of u on coefficient vectors.
    """
    from .representations import rho

    den = automorphy_denominator(g, q, side)
    _denominator(g, q, eps)
    inv = qinv(den, eps)
    return den.norm(), inv, rho(inv, n - 1)


# random elements
def random_unit_rational(rng: random.Random, max_den: int = 8) -> Quaternion:
    """Exact unit quaternion p^2 / N p."""
    while True:
        p = Quaternion(*(Fraction(rng.randint(-max_den, max_den), rng.randint(1, max_den)) for _ in range(4)))
        n = p.norm()
        if n != 0:
            return (p * p) / n


def boost(s: Fraction) -> QMatrix2:
    """Real hyperbolic element with a = d = (1+s^2)/(1-s^2), b = c = 2s/(1-s^2)."""
    s = Fraction(s)
    ch = (1 + s * s) / (1 - s * s)
    sh = 2 * s / (1 - s * s)
    z = Fraction(0)
    return QMatrix2(Quaternion(ch, z, z, z), Quaternion(sh, z, z, z), Quaternion(sh, z, z, z), Quaternion(ch, z, z, z))


def random_sp11_exact(rng: random.Random, max_den: int = 6) -> QMatrix2:
    """k1 * boost * k2 with rational compact factors; exact element of G(Q)."""
    k1 = QMatrix2.diag(random_unit_rational(rng), random_unit_rational(rng))
    k2 = QMatrix2.diag(random_unit_rational(rng), random_unit_rational(rng))
    s = Fraction(rng.randint(-max_den + 1, max_den - 1), max_den)
    return k1 * boost(s) * k2


def random_sp11_float(rng: random.Random, radius: float = 0.8) -> QMatrix2:
    """sigma(b) * diag(u, v) with b uniform-ish in the ball of the given radius."""
    from .quaternion import random_float

    b = random_float(rng, radius)
    return sigma_float(b) * QMatrix2.diag(random_unit(rng), random_unit(rng))


def random_ball_exact(rng: random.Random, max_den: int = 32) -> Quaternion:
    return random_rational(rng, max_den)
