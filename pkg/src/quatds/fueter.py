"""Fueter operators, the P/Q regular families and the Dirac operator on the ball.

Variables: q = t + x*i + y*j + z*k is split as z_ + j*w_ with z_ = t + i*x and
w_ = y + i*z (the pairing under which the P/Q families are left-regular).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial


from .errors import DiagramMismatchError, DomainError
from .polynomial import QPolynomial
from .quaternion import BASIS, I_, J, ONE, Quaternion, qinv

_SIGN = {"dl": -1, "dl_bar": 1, "dr": -1, "dr_bar": 1}


def fueter_apply(f: QPolynomial, op: str) -> QPolynomial:
    """dl_bar f = f_t + i f_x + j f_y + k f_z; `r` variants multiply on the right,
    unbarred variants flip the sign of the imaginary terms."""
    if op not in _SIGN:
        raise ValueError(f"unknown operator {op!r}")
    s = _SIGN[op]
    out = f.diff(0)
    for k in (1, 2, 3):
        e = BASIS[k] * s
        d = f.diff(k)
        out = out + (d.lmul(e) if op.startswith("dl") else d.rmul(e))
    return out


def laplacian(f: QPolynomial) -> QPolynomial:
    out = QPolynomial()
    for k in range(4):
        out = out + f.diff(k).diff(k)
    return out


def is_left_regular(f: QPolynomial) -> bool:
    return fueter_apply(f, "dl_bar").is_zero()


# formal polynomials in (z, zbar, w, wbar)
Formal = dict  # exponent (a, b, c, d) -> Fraction


def _dp(m: int):
    """Divided power coefficient 1/m!, or None when m < 0."""
    return None if m < 0 else Fraction(1, factorial(m))


@lru_cache(maxsize=None)
def p_formal(n: int, k: int, l: int) -> tuple:
    """P^n_{k,l} as a sorted tuple of ((a, b, c, d), coefficient) over z, zbar, w, wbar."""
    terms = {}
    if k < 0 or l < 0:
        return ()
    for r in range(0, min(k, l) + 1):
        exps = (n - k - l + r, r, k - r, l - r)
        if min(exps) < 0:
            continue
        c = Fraction((-1) ** r)
        for m in exps:
            c *= _dp(m)
        terms[exps] = terms.get(exps, 0) + c
    return tuple(sorted((e, c) for e, c in terms.items() if c))


def formal_diff(p, var: int) -> dict:
    out = {}
    for e, c in dict(p).items():
        if e[var]:
            ne = list(e)
            ne[var] -= 1
            out[tuple(ne)] = out.get(tuple(ne), 0) + c * e[var]
    return {e: c for e, c in out.items() if c}


def crf_residuals(n: int, k: int, l: int) -> tuple:
    """(dP_{k,l}/dzbar + dP_{k-1,l}/dwbar, dP_{k,l}/dw - dP_{k-1,l}/dz) as formal dicts."""
    p, pm = p_formal(n, k, l), p_formal(n, k - 1, l)

    def comb(a, b, s):
        out = dict(a)
        for e, c in b.items():
            out[e] = out.get(e, 0) + s * c
        return {e: c for e, c in out.items() if c}

    return (comb(formal_diff(p, 1), formal_diff(pm, 3), 1),
            comb(formal_diff(p, 2), formal_diff(pm, 0), -1))


def _zw_generators():
    mi = -I_
    zz = QPolynomial({(1, 0, 0, 0): ONE, (0, 1, 0, 0): I_})
    zb = QPolynomial({(1, 0, 0, 0): ONE, (0, 1, 0, 0): mi})
    ww = QPolynomial({(0, 0, 1, 0): ONE, (0, 0, 0, 1): I_})
    wb = QPolynomial({(0, 0, 1, 0): ONE, (0, 0, 0, 1): mi})
    return zz, zb, ww, wb


@lru_cache(maxsize=None)
def _gen_power(which: int, m: int) -> QPolynomial:
    return _zw_generators()[which] ** m


def formal_to_q(p) -> QPolynomial:
    out = QPolynomial()
    for e, c in dict(p).items():
        term = QPolynomial.constant(Quaternion(c, 0, 0, 0))
        for which, m in enumerate(e):
            if m:
                term = term * _gen_power(which, m)
        out = out + term
    return out


@lru_cache(maxsize=None)
def p_kl(n: int, k: int, l: int) -> QPolynomial:
    """P^n_{k,l} as a complex-valued polynomial in t, x, y, z."""
    if n < 0:
        raise DomainError("n must be non-negative")
    return formal_to_q(p_formal(n, k, l))


@lru_cache(maxsize=None)
def q_kl(n: int, k: int, l: int) -> QPolynomial:
    """Q^n_{k,l} = P^n_{k,l} - j P^n_{k-1,l}."""
    return p_kl(n, k, l) - p_kl(n, k - 1, l).lmul(J)


# V_n-valued functions: coordinates are coefficients of X^(n-i) Y^i
@dataclass(frozen=True)
class VnFunction:
    coords: tuple

    @property
    def n(self) -> int:
        return len(self.coords) - 1

    def d_X(self) -> tuple:
        n = self.n
        return tuple(self.coords[i].map_coeffs(lambda c, s=n - i: c * s) for i in range(n))

    def d_Y(self) -> tuple:
        return tuple(self.coords[i].map_coeffs(lambda c, s=i: c * s) for i in range(1, self.n + 1))

    def is_complex_valued(self) -> bool:
        return all(c.is_complex_valued() for c in self.coords)


def fx_minus_j_fy(f: VnFunction) -> tuple:
    """Coordinates of f_X - j f_Y in the basis X^(n-1-i) Y^i."""
    return tuple(a - b.lmul(J) for a, b in zip(f.d_X(), f.d_Y()))


@lru_cache(maxsize=None)
def minimal_ktype(n: int, k: int):
    """(g_k^n, coordinates of h_k^n = (d_X - j d_Y) g_k^n)."""
    if not 0 <= k <= n:
        raise DomainError(f"need 0 <= k <= n, got k={k}, n={n}")
    coords = []
    for i in range(n + 1):
        l = n - i
        coords.append(p_kl(n, l, k).map_coeffs(lambda c, s=Fraction(1, factorial(l) * factorial(i)): c * s))
    g = VnFunction(tuple(coords))
    return g, fx_minus_j_fy(g)


def h_coordinate_expected(n: int, k: int, i: int) -> QPolynomial:
    """Coefficient of X^(n-1-i) Y^i in h_k^n: Q^n_{m+1,k} / (m! (n-1-m)!), m = n-1-i."""
    m = n - 1 - i
    s = Fraction(1, factorial(m) * factorial(n - 1 - m))
    return q_kl(n, m + 1, k).map_coeffs(lambda c: c * s)


# Dirac operator
_E_MATRICES = (  # iota(e_i) with complex entries as (re, im)
    ((1, 0), (0, 0), (0, 0), (1, 0)),
    ((0, 1), (0, 0), (0, 0), (0, -1)),
    ((0, 0), (1, 0), (-1, 0), (0, 0)),
    ((0, 0), (0, 1), (0, 1), (0, 0)),
)


def _cscale(re: int, im: int) -> Quaternion:
    return Quaternion(re, im, 0, 0)


def _dirac_path_tensor(f: VnFunction) -> tuple:
    """(1/24) sum_i E_i (x) df/dx_i, projected by P- and sent to W_{n-1} via X -> 1, Y -> -j."""
    n = f.n
    fx, fy = f.d_X(), f.d_Y()
    parts = {0: [QPolynomial() for _ in range(n)], 1: [QPolynomial() for _ in range(n)]}
    for i, mat in enumerate(_E_MATRICES):
        # E_i = sum_{a,b} mat[a][b] X_a (x) d_b, X_0 = X, X_1 = Y, d_0 = d_X, d_1 = d_Y
        for a in (0, 1):
            for b, deriv in ((0, fx), (1, fy)):
                re, im = mat[2 * a + b]
                if re == 0 and im == 0:
                    continue
                s = _cscale(re, im)
                for j in range(n):
                    parts[a][j] = parts[a][j] + deriv[j].diff(i).lmul(s)
    w = Fraction(1, 24)
    return tuple((gx - gy.lmul(J)).map_coeffs(lambda c: c * w) for gx, gy in zip(parts[0], parts[1]))


def _dirac_path_fueter(f: VnFunction) -> tuple:
    w = Fraction(1, 24)
    return tuple(fueter_apply(h, "dl_bar").map_coeffs(lambda c: c * w) for h in fx_minus_j_fy(f))


def dirac_lz(f: VnFunction) -> tuple:
    """D(f) = pi_n^-(df), computed via the p (x) V_n tensor and via dl_bar (d_X - j d_Y)."""
    if f.n < 1:
        raise DomainError("dirac_lz needs n >= 1")
    if not f.is_complex_valued():
        raise DomainError("V_n-valued functions must have complex coordinates")
    a, b = _dirac_path_tensor(f), _dirac_path_fueter(f)
    if any(not (u - v).is_zero() for u, v in zip(a, b)):
        raise DiagramMismatchError("the two Dirac operator computations differ")
    return b


def hwt_parts(h) -> tuple:
    """Split (d_Y - j d_X) sum h_i X^(n-1-i) Y^i into its C-part and jC-part.

    Each returned entry is a tuple of coefficient polynomials; a function of
    the form f_X - j f_Y has vanishing C-part.
    """
    m = len(h) - 1
    # coefficients of d_X and d_Y on the basis X^(m-1-i) Y^i
    dX = [h[i].map_coeffs(lambda c, s=m - i: c * s) for i in range(m)]
    dY = [h[i].map_coeffs(lambda c, s=i: c * s) for i in range(1, m + 1)]
    expr = [a - b.lmul(J) for a, b in zip(dY, dX)]
    cpart, jpart = [], []
    for e in expr:
        cpart.append(QPolynomial({k: Quaternion(c.t, c.x, 0, 0) for k, c in e.terms.items()}))
        jpart.append(QPolynomial({k: Quaternion(0, 0, c.y, c.z) for k, c in e.terms.items()}))
    return tuple(cpart), tuple(jpart)


def random_vn_function(rng, n: int, degree: int = 3) -> VnFunction:
    from .polynomial import random_qpolynomial

    return VnFunction(tuple(random_qpolynomial(rng, degree, complex_valued=True) for _ in range(n + 1)))


def random_regular(rng, n: int, max_num: int = 4) -> QPolynomial:
    """Random right-H combination of the Q^n_{k,l}, 0 <= k, l <= n."""
    out = QPolynomial()
    for k in range(n + 1):
        for l in range(n + 1):
            c = Quaternion(*(Fraction(rng.randint(-max_num, max_num), rng.randint(1, 3)) for _ in range(4)))
            out = out + q_kl(n, k, l).rmul(c)
    return out


def q_index_set(n: int, which: str = "k<=l") -> list:
    if which == "k<=l":
        return [(k, l) for k in range(n + 1) for l in range(k, n + 1)]
    if which == "all":
        return [(k, l) for k in range(n + 1) for l in range(n + 1)]
    raise ValueError(f"unknown index set {which!r}")


def q_family_rank(n: int, which: str = "k<=l") -> int:
    """Rank over Q of the real coordinate matrix of {Q^n_{k,l} * e_s}."""
    return _poly_rank([q_kl(n, k, l).rmul(e) for k, l in q_index_set(n, which) for e in BASIS])


def regular_space_dim(n: int) -> int:
    """Real dimension of left-regular homogeneous polynomials of degree n."""
    return 2 * (n + 1) * (n + 2)


def _poly_rank(polys) -> int:
    from .representations import exact_rank

    keys = sorted({(e, s) for p in polys for e in p.terms for s in range(4)})
    idx = {k: i for i, k in enumerate(keys)}
    rows = []
    for p in polys:
        r = [Fraction(0)] * len(keys)
        for e, c in p.terms.items():
            for s in range(4):
                r[idx[(e, s)]] = Fraction(c.coords()[s])
        rows.append(r)
    return exact_rank(rows) if rows and keys else 0


def h_family_rank(n: int, scalars: str = "H") -> int:
    """Rank of {h_k^n * e} over e in a real basis of H (or C) as stacked vectors.

    Full rank is 4(n+1) for right-H independence, 2(n+1) for right-C.
    """
    units = BASIS if scalars == "H" else BASIS[:2]
    vecs = []
    for k in range(n + 1):
        h = minimal_ktype(n, k)[1]
        for e in units:
            vec = QPolynomial()
            # tag each coordinate by shifting its t-exponent block to keep them separate
            for i, c in enumerate(h):
                vec = vec + QPolynomial({(ex[0] + 100 * i, *ex[1:]): v for ex, v in c.rmul(e).terms.items()})
            vecs.append(vec)
    return _poly_rank(vecs)


# curves
@dataclass(frozen=True)
class Curve:
    """Polynomial curve x -> g(x) in H, given by coefficient quaternions in powers of x."""

    coeffs: tuple

    def at(self, x) -> Quaternion:
        out = Quaternion(0, 0, 0, 0)
        for k, c in enumerate(self.coeffs):
            out = out + c * (x ** k)
        return out

    def deriv(self, x) -> Quaternion:
        out = Quaternion(0, 0, 0, 0)
        for k, c in enumerate(self.coeffs[1:], start=1):
            out = out + c * (k * x ** (k - 1))
        return out


def jacobian_row(f: QPolynomial, q: Quaternion) -> tuple:
    """Df(q) = (f_t, f_x, f_y, f_z) evaluated at q."""
    return tuple(f.diff(k).evaluate(q) for k in range(4))


def curve_derivative(f: QPolynomial, g: Curve, x0) -> Quaternion:
    """d/dx f(g(x)) at x0 = Df(g(x0)) . [g_x(x0)] (real coordinates of g_x)."""
    row = jacobian_row(f, g.at(x0))
    gx = g.deriv(x0)
    out = Quaternion(0, 0, 0, 0)
    for r, c in zip(row, gx.coords()):
        out = out + r * c
    return out


def curve_product_derivative(f: Curve, g: Curve, x0) -> tuple:
    """((fg)_x via expansion, f_x g + f g_x) at x0."""
    n = len(f.coeffs) + len(g.coeffs) - 1
    prod = [Quaternion(0, 0, 0, 0)] * n
    for i, a in enumerate(f.coeffs):
        for j, b in enumerate(g.coeffs):
            prod[i + j] = prod[i + j] + a * b
    lhs = Curve(tuple(prod)).deriv(x0)
    rhs = f.deriv(x0) * g.at(x0) + f.at(x0) * g.deriv(x0)
    return lhs, rhs


def curve_inverse_derivative(f: Curve, x0) -> tuple:
    """(d/dx f^-1 computed from N f and conj f, -f^-1 f_x f^-1) at x0."""
    v, d = f.at(x0), f.deriv(x0)
    # f^-1 = conj(f) / N f, differentiate the quotient directly
    nf = v.norm()
    dn = (d * v.conj() + v * d.conj()).t
    lhs = d.conj() * (1 / Fraction(nf) if not isinstance(nf, float) else 1 / nf) - v.conj() * (dn / nf ** 2)
    inv = qinv(v)
    return lhs, -(inv * d * inv)
