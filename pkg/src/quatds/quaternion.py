"""Scalar-generic quaternions, the complexification H_C, and the embedding iota.

A :class:`Quaternion` holds coordinates ``(t, x, y, z)`` with respect to
``1, i, j, k``.  Coordinates may be any field-like scalar: ``Fraction`` for
exact work, ``float`` for numerics, and ``complex`` or
:class:`~quatds.scalars.GaussianRational` for elements of H_C.  Scalars are
central: multiplying by a complex scalar is scalar extension, not
multiplication by the quaternion ``a + b*i``.
"""
from __future__ import annotations

import random
from fractions import Fraction

import numpy as np

from .errors import ZeroDivisorError
from .scalars import DEFAULT_TOL, GaussianRational, cconj, imag_unit, is_exact

_SCALARS = (int, float, complex, Fraction, GaussianRational)


class Quaternion:
    __slots__ = ("t", "x", "y", "z")

    def __init__(self, t=0, x=0, y=0, z=0):
        object.__setattr__(self, "t", t)
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)
        object.__setattr__(self, "z", z)

    def __setattr__(self, name, value):
        raise AttributeError("Quaternion is immutable")

    # construction helpers
    @classmethod
    def from_complex(cls, c) -> "Quaternion":
        """Image of ``c`` under the distinguished embedding C -> H, a+bi -> a+b*i_hat."""
        if isinstance(c, GaussianRational):
            return cls(c.re, c.im, Fraction(0), Fraction(0))
        c = complex(c)
        return cls(c.real, c.imag, 0.0, 0.0)

    @classmethod
    def from_zw(cls, z, w) -> "Quaternion":
        """``z + w*j`` with complex ``z, w`` (the Notation-section convention)."""
        zq = cls.from_complex(z)
        wq = cls.from_complex(w)
        return zq + wq * J

    def coords(self) -> tuple:
        return (self.t, self.x, self.y, self.z)

    def __iter__(self):
        return iter(self.coords())

    def map(self, fn) -> "Quaternion":
        return Quaternion(fn(self.t), fn(self.x), fn(self.y), fn(self.z))

    def to_float(self) -> "Quaternion":
        return self.map(float)

    def as_array(self) -> np.ndarray:
        return np.array([complex(c) if isinstance(c, (complex, GaussianRational)) else float(c) for c in self.coords()])

    # algebra
    def __add__(self, o):
        if isinstance(o, Quaternion):
            return Quaternion(self.t + o.t, self.x + o.x, self.y + o.y, self.z + o.z)
        if isinstance(o, _SCALARS):
            return Quaternion(self.t + o, self.x, self.y, self.z)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return Quaternion(-self.t, -self.x, -self.y, -self.z)

    def __sub__(self, o):
        if isinstance(o, (Quaternion,) + _SCALARS):
            return self + (-o)
        return NotImplemented

    def __rsub__(self, o):
        return (-self) + o

    def __mul__(self, o):
        if isinstance(o, Quaternion):
            a1, b1, c1, d1 = self.t, self.x, self.y, self.z
            a2, b2, c2, d2 = o.t, o.x, o.y, o.z
            return Quaternion(
                a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
                a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
                a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
                a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
            )
        if isinstance(o, _SCALARS):
            return Quaternion(self.t * o, self.x * o, self.y * o, self.z * o)
        return NotImplemented

    def __rmul__(self, o):
        if isinstance(o, _SCALARS):
            return Quaternion(o * self.t, o * self.x, o * self.y, o * self.z)
        return NotImplemented

    def __truediv__(self, o):
        if isinstance(o, _SCALARS):
            if isinstance(o, int):
                o = Fraction(o)
            return Quaternion(self.t / o, self.x / o, self.y / o, self.z / o)
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            return qinv(self) ** (-k)
        out = ONE
        for _ in range(k):
            out = out * self
        return out

    def conj(self) -> "Quaternion":
        """Formal bar involution; complex scalars of H_C are left alone."""
        return Quaternion(self.t, -self.x, -self.y, -self.z)

    def cconj(self) -> "Quaternion":
        """Complex conjugation of the scalar coordinates (H_C only)."""
        return self.map(cconj)

    def norm(self):
        """Reduced norm N q = q * conj(q)."""
        return self.t * self.t + self.x * self.x + self.y * self.y + self.z * self.z

    def trace(self):
        return self.t + self.t

    def abs(self) -> float:
        return float(abs(complex(self.norm()))) ** 0.5

    def maxabs(self) -> float:
        return max(abs(complex(c)) for c in self.coords())

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords())

    def __eq__(self, o):
        if isinstance(o, _SCALARS):
            o = Quaternion(o, 0, 0, 0)
        if not isinstance(o, Quaternion):
            return NotImplemented
        return self.coords() == o.coords()

    def __hash__(self):
        return hash(self.coords())

    def __repr__(self):
        return f"Quaternion({self.t!s}, {self.x!s}, {self.y!s}, {self.z!s})"

    def close_to(self, o, tol: float = DEFAULT_TOL) -> bool:
        return (self - o).maxabs() < tol


ONE = Quaternion(1, 0, 0, 0)
ZERO = Quaternion(0, 0, 0, 0)
I_ = Quaternion(0, 1, 0, 0)
J = Quaternion(0, 0, 1, 0)
K = Quaternion(0, 0, 0, 1)
BASIS = (ONE, I_, J, K)


def qmul(p: Quaternion, q: Quaternion) -> Quaternion:
    return p * q


def conj_norm_trace(q: Quaternion):
    return q.conj(), q.norm(), q.trace()


def _is_exact_q(q: Quaternion) -> bool:
    return all(is_exact(c) for c in q.coords())


def qinv(q: Quaternion, eps: float = DEFAULT_TOL) -> Quaternion:
    n = q.norm()
    if _is_exact_q(q):
        if n == 0:
            raise ZeroDivisorError(f"{q!r} has zero norm")
        if isinstance(n, int):
            n = Fraction(n)
    elif abs(n) < eps:
        raise ZeroDivisorError(f"{q!r} has norm below {eps}")
    return q.conj() / n


def prime(q: Quaternion, eps: float = DEFAULT_TOL) -> Quaternion:
    """q' = q^-1 / N q."""
    inv = qinv(q, eps)
    n = q.norm()
    if isinstance(n, int):
        n = Fraction(n)
    return inv / n


def iota_embed(q: Quaternion) -> np.ndarray:
    """The C-linear extension of iota: H_C -> M_2(C).

    Exact coordinates give an object array of GaussianRational, floats a
    complex128 array.
    """
    i = imag_unit(q.t)
    t, x, y, z = q.coords()
    a = t + i * x
    d = t - i * x
    b = y + i * z
    c = -y + i * z
    if _is_exact_q(q):
        g = GaussianRational.coerce
        return np.array([[g(a), g(b)], [g(c), g(d)]], dtype=object)
    return np.array([[a, b], [c, d]], dtype=complex)


def iota_inverse(m) -> Quaternion:
    """Recover q from iota(q) (inverse on the full complexified image)."""
    a, b = m[0][0], m[0][1]
    c, d = m[1][0], m[1][1]
    i = imag_unit(a)
    t = (a + d) / 2
    x = (a - d) / (2 * i)
    y = (b - c) / 2
    z = (b + c) / (2 * i)
    return Quaternion(t, x, y, z)


def random_rational(rng: random.Random, max_den: int = 32, radius: Fraction = Fraction(3, 4)) -> Quaternion:
    """Random quaternion with bounded-denominator rational coordinates, N q < radius^2."""
    bound = radius / 2
    while True:
        coords = []
        for _ in range(4):
            den = rng.randint(1, max_den)
            num = rng.randint(-int(bound * den), int(bound * den))
            coords.append(Fraction(num, den))
        q = Quaternion(*coords)
        if q.norm() < radius * radius:
            return q


def random_unit(rng: random.Random) -> Quaternion:
    while True:
        v = [rng.gauss(0.0, 1.0) for _ in range(4)]
        n = sum(c * c for c in v) ** 0.5
        if n > 1e-6:
            return Quaternion(*(c / n for c in v))


def random_float(rng: random.Random, radius: float = 0.75) -> Quaternion:
    while True:
        v = [rng.uniform(-radius, radius) for _ in range(4)]
        if sum(c * c for c in v) < radius * radius:
            return Quaternion(*v)


# JSON
def encode_scalar(v):
    if isinstance(v, bool):
        raise TypeError("bool is not a scalar")
    if isinstance(v, int):
        return v
    if isinstance(v, Fraction):
        return v.numerator if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    if isinstance(v, float):
        return v
    if isinstance(v, GaussianRational):
        return [encode_scalar(v.re), encode_scalar(v.im)]
    if isinstance(v, complex):
        return [v.real, v.imag]
    if isinstance(v, np.generic):
        return encode_scalar(v.item())
    raise TypeError(f"cannot encode {type(v).__name__}")


def decode_scalar(v):
    if isinstance(v, list):
        re, im = decode_scalar(v[0]), decode_scalar(v[1])
        if isinstance(re, float) or isinstance(im, float):
            return complex(re, im)
        return GaussianRational(re, im)
    if isinstance(v, str):
        return Fraction(v)
    if isinstance(v, int):
        return Fraction(v)
    return float(v)


def quaternion_to_json(q: Quaternion) -> list:
    return [encode_scalar(c) for c in q.coords()]


def quaternion_from_json(data) -> Quaternion:
    return Quaternion(*(decode_scalar(c) for c in data))


def matrix_to_json(m) -> list:
    return [[encode_scalar(v) for v in row] for row in m]
