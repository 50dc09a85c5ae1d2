"""Sparse quaternion-valued polynomials in the real variables t, x, y, z."""
from __future__ import annotations

from fractions import Fraction
from itertools import product

import numpy as np

from .quaternion import I_, ONE, Quaternion, decode_scalar, encode_scalar

VARS = "txyz"
_ZEROQ = Quaternion(0, 0, 0, 0)


def _clean(terms: dict) -> dict:
    return {e: c for e, c in terms.items() if not c.is_zero()}


class QPolynomial:
    """sum over exponents (a, b, c, d) of t^a x^b y^c z^d * coefficient."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = _clean(dict(terms or {}))

    # construction
    @classmethod
    def constant(cls, q) -> "QPolynomial":
        q = q if isinstance(q, Quaternion) else Quaternion(q, 0, 0, 0)
        return cls({(0, 0, 0, 0): q})

    @classmethod
    def variable(cls, name: str, coeff: Quaternion = ONE) -> "QPolynomial":
        e = [0, 0, 0, 0]
        e[VARS.index(name)] = 1
        return cls({tuple(e): coeff})

    @classmethod
    def identity(cls) -> "QPolynomial":
        """f(q) = q."""
        return cls({(1, 0, 0, 0): ONE, (0, 1, 0, 0): I_,
                    (0, 0, 1, 0): Quaternion(0, 0, 1, 0), (0, 0, 0, 1): Quaternion(0, 0, 0, 1)})

    # algebra
    def __add__(self, o):
        out = dict(self.terms)
        for e, c in o.terms.items():
            out[e] = out[e] + c if e in out else c
        return QPolynomial(out)

    def __neg__(self):
        return QPolynomial({e: -c for e, c in self.terms.items()})

    def __sub__(self, o):
        return self + (-o)

    def __mul__(self, o):
        if not isinstance(o, QPolynomial):
            return self.rmul(o)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2], e1[3] + e2[3])
                v = c1 * c2
                out[e] = out[e] + v if e in out else v
        return QPolynomial(out)

    def lmul(self, q) -> "QPolynomial":
        """q * f."""
        return QPolynomial({e: q * c for e, c in self.terms.items()})

    def rmul(self, q) -> "QPolynomial":
        """f * q."""
        return QPolynomial({e: c * q for e, c in self.terms.items()})

    def __rmul__(self, q):
        return self.lmul(q)

    def __pow__(self, k: int):
        out = QPolynomial.constant(ONE)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, o):
        return isinstance(o, QPolynomial) and (self - o).is_zero()

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        return f"QPolynomial({self.terms!r})"

    # queries
    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self) -> set:
        return {sum(e) for e in self.terms}

    def degree(self) -> int:
        return max(self.degrees(), default=-1)

    def is_homogeneous(self, n: int | None = None) -> bool:
        d = self.degrees()
        if not d:
            return True
        return len(d) == 1 and (n is None or d == {n})

    def is_complex_valued(self) -> bool:
        """Coefficients in span{1, i}."""
        return all(c.y == 0 and c.z == 0 for c in self.terms.values())

    def component(self, k: int) -> "QPolynomial":
        """Real coordinate function f^(k) (as a real-coefficient QPolynomial)."""
        return QPolynomial({e: Quaternion(c.coords()[k], 0, 0, 0) for e, c in self.terms.items()})

    def diff(self, var) -> "QPolynomial":
        k = VARS.index(var) if isinstance(var, str) else var
        out = {}
        for e, c in self.terms.items():
            if e[k]:
                ne = list(e)
                ne[k] -= 1
                out[tuple(ne)] = c * e[k]
        return QPolynomial(out)

    def evaluate(self, q: Quaternion) -> Quaternion:
        vals = q.coords()
        out = _ZEROQ
        for e, c in self.terms.items():
            m = 1
            for v, k in zip(vals, e):
                if k:
                    m = m * v ** k
            out = out + c * m
        return out

    def evaluate_array(self, points) -> np.ndarray:
        """Float values at an (N, 4) array of points, as an (N, 4) array."""
        pts = np.asarray(points, dtype=float)
        out = np.zeros((pts.shape[0], 4))
        powers: dict = {}
        for e, c in self.terms.items():
            mono = np.ones(pts.shape[0])
            for k, m in enumerate(e):
                if m:
                    if (k, m) not in powers:
                        powers[(k, m)] = pts[:, k] ** m
                    mono = mono * powers[(k, m)]
            out += mono[:, None] * np.array([float(v) for v in c.coords()])[None, :]
        return out

    def map_coeffs(self, fn) -> "QPolynomial":
        return QPolynomial({e: fn(c) for e, c in self.terms.items()})

    # involutions
    def bar(self) -> "QPolynomial":
        return self.map_coeffs(lambda c: c.conj())

    def dag(self) -> "QPolynomial":
        """f(q_bar): x, y, z -> -x, -y, -z."""
        return QPolynomial({e: c if (e[1] + e[2] + e[3]) % 2 == 0 else -c for e, c in self.terms.items()})

    def star(self) -> "QPolynomial":
        return self.bar().dag()

    def to_float(self) -> "QPolynomial":
        return self.map_coeffs(lambda c: c.to_float())

    # serialisation
    def to_json(self) -> list:
        return [{"exponent": list(e), "coeff": [encode_scalar(v) for v in c.coords()]}
                for e, c in sorted(self.terms.items())]

    @classmethod
    def from_json(cls, data) -> "QPolynomial":
        return cls({tuple(d["exponent"]): Quaternion(*(decode_scalar(v) for v in d["coeff"])) for d in data})


def involution(f: QPolynomial, which: str) -> QPolynomial:
    if which == "bar":
        return f.bar()
    if which == "dag":
        return f.dag()
    if which == "star":
        return f.star()
    raise ValueError(f"unknown involution {which!r}")


def _rand_coeff(rng, max_num: int, max_den: int):
    num = rng.randint(-max_num, max_num)
    return num if max_den == 1 else Fraction(num, rng.randint(1, max_den))


def random_qpolynomial(rng, degree: int, max_num: int = 5, homogeneous: bool = False,
                       complex_valued: bool = False, max_den: int = 1) -> QPolynomial:
    """Random polynomial with small rational coefficients (plain ints when max_den = 1)."""
    terms = {}
    for e in product(range(degree + 1), repeat=4):
        s = sum(e)
        if s > degree or (homogeneous and s != degree):
            continue
        c = [_rand_coeff(rng, max_num, max_den) for _ in range(4)]
        if complex_valued:
            c[2] = c[3] = 0
        terms[e] = Quaternion(*c)
    return QPolynomial(terms)
