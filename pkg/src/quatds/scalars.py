"""Exact Gaussian rationals and small helpers for scalar-generic code.

Quaternion coordinates may be ``int``, ``Fraction``, ``float``, ``complex`` or
:class:`GaussianRational`.  The helpers here convert between them without
losing exactness.
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational

DEFAULT_TOL = 1e-10


class GaussianRational:
    """Element ``re + i*im`` of Q(i) with ``Fraction`` parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    @classmethod
    def coerce(cls, v) -> "GaussianRational":
        if isinstance(v, GaussianRational):
            return v
        if isinstance(v, (int, Fraction)):
            return cls(v, 0)
        raise TypeError(f"cannot coerce {type(v).__name__} exactly")

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def abs2(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def __add__(self, o):
        if isinstance(o, float | complex):
            return complex(self) + o
        try:
            o = GaussianRational.coerce(o)
        except TypeError:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def __sub__(self, o):
        return self + (-o)

    def __rsub__(self, o):
        return (-self) + o

    def __mul__(self, o):
        if isinstance(o, float | complex):
            return complex(self) * o
        try:
            o = GaussianRational.coerce(o)
        except TypeError:
            return NotImplemented
        return GaussianRational(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, o):
        if isinstance(o, float | complex):
            return complex(self) / o
        try:
            o = GaussianRational.coerce(o)
        except TypeError:
            return NotImplemented
        n = o.abs2()
        if n == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        p = self * o.conjugate()
        return GaussianRational(p.re / n, p.im / n)

    def __rtruediv__(self, o):
        return GaussianRational.coerce(o) / self

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return GaussianRational(1) / (self ** (-k))
        out = GaussianRational(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, o):
        if isinstance(o, GaussianRational):
            return self.re == o.re and self.im == o.im
        if isinstance(o, (int, Fraction)):
            return self.im == 0 and self.re == o
        if isinstance(o, float | complex):
            return complex(self) == o
        return NotImplemented

    def __hash__(self):
        return hash((self.re, self.im)) if self.im else hash(self.re)

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __abs__(self):
        return abs(complex(self))

    def __repr__(self):
        return f"GaussianRational({self.re}, {self.im})"

    def __str__(self):
        if not self.im:
            return str(self.re)
        return f"({self.re}{'+' if self.im >= 0 else '-'}{abs(self.im)}i)"


I = GaussianRational(0, 1)


def is_exact(v) -> bool:
    return isinstance(v, (int, Rational, GaussianRational)) and not isinstance(v, bool)


def imag_unit(like):
    """The imaginary unit in the scalar field matching ``like``."""
    return I if is_exact(like) else 1j


def cconj(v):
    """Complex conjugation, identity on real scalars."""
    if isinstance(v, (GaussianRational, complex)):
        return v.conjugate()
    return v


def cre(v):
    if isinstance(v, GaussianRational):
        return v.re
    if isinstance(v, complex):
        return v.real
    return v


def cim(v):
    if isinstance(v, GaussianRational):
        return v.im
    if isinstance(v, complex):
        return v.imag
    return 0 if is_exact(v) else 0.0


def to_complex(v) -> complex:
    return complex(v)


def mag(v) -> float:
    """Absolute value as a float, for residual reporting."""
    return abs(complex(v)) if isinstance(v, GaussianRational) else abs(v)


def exact_zero(v) -> bool:
    return v == 0


def to_exact(v):
    """Return an exact scalar for ints/Fractions; pass GaussianRational through."""
    if isinstance(v, (GaussianRational, Fraction)):
        return v
    if isinstance(v, int):
        return Fraction(v)
    raise TypeError(f"{v!r} is not exact")
