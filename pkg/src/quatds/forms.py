"""Quaternion-valued differential forms on R^4 = H.

A k-form is stored as {I: c_I} over increasing index tuples I (0=t, 1=x,
2=y, 3=z) with coefficients written to the left of dx_I.  The dx_I are real
and central, so ``p * omega * q`` multiplies every coefficient on both sides.
Coefficients are Quaternions (forms at a point, or constant forms) or
QPolynomials (form fields).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, permutations

import numpy as np

from .errors import DegreeOverflowError, SingularDenominatorError
from .group import QMatrix2, frac_linear
from .polynomial import QPolynomial
from .quaternion import BASIS, ONE, Quaternion, encode_scalar, qinv
from .scalars import DEFAULT_TOL

VARS = "txyz"


def _is_zero(c) -> bool:
    return c.is_zero()


def _mul(a, b):
    """Coefficient product a * b for any mix of Quaternion and QPolynomial."""
    if isinstance(a, QPolynomial):
        return a * b if isinstance(b, QPolynomial) else a.rmul(b)
    if isinstance(b, QPolynomial):
        return b.lmul(a)
    return a * b


def _sort_sign(idx) -> tuple:
    """(sign, sorted tuple) of a sequence of distinct indices; sign 0 on repeats."""
    if len(set(idx)) != len(idx):
        return 0, None
    idx = list(idx)
    sign = 1
    for i in range(len(idx)):
        for j in range(len(idx) - 1 - i):
            if idx[j] > idx[j + 1]:
                idx[j], idx[j + 1] = idx[j + 1], idx[j]
                sign = -sign
    return sign, tuple(idx)


@dataclass(frozen=True)
class HForm:
    degree: int
    terms: dict = field(default_factory=dict)

    def __post_init__(self):
        if not 0 <= self.degree <= 4:
            raise DegreeOverflowError(f"degree {self.degree} outside 0..4")
        clean = {}
        for k, c in self.terms.items():
            if len(k) != self.degree:
                raise ValueError(f"index {k} does not match degree {self.degree}")
            if not _is_zero(c):
                clean[tuple(k)] = c
        object.__setattr__(self, "terms", clean)

    @classmethod
    def from_names(cls, spec: dict) -> "HForm":
        """HForm.from_names({"xyz": ONE, "tyz": -I_}) with unsorted names allowed."""
        out: dict = {}
        deg = None
        for name, c in spec.items():
            s, idx = _sort_sign(tuple(VARS.index(ch) for ch in name))
            deg = len(name)
            if s:
                c = c if s > 0 else -c
                out[idx] = out[idx] + c if idx in out else c
        return cls(deg if deg is not None else 0, out)

    @classmethod
    def scalar(cls, c) -> "HForm":
        return cls(0, {(): c})

    def __add__(self, o: "HForm") -> "HForm":
        if o.degree != self.degree:
            if not o.terms:
                return self
            if not self.terms:
                return o
            raise ValueError("cannot add forms of different degree")
        out = dict(self.terms)
        for k, c in o.terms.items():
            out[k] = out[k] + c if k in out else c
        return HForm(self.degree, out)

    def __neg__(self):
        return HForm(self.degree, {k: -c for k, c in self.terms.items()})

    def __sub__(self, o):
        return self + (-o)

    def lmul(self, p) -> "HForm":
        return HForm(self.degree, {k: _mul(p, c) for k, c in self.terms.items()})

    def rmul(self, p) -> "HForm":
        return HForm(self.degree, {k: _mul(c, p) for k, c in self.terms.items()})

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, idx):
        return self.terms.get(tuple(idx))

    def map_coeffs(self, fn) -> "HForm":
        return HForm(self.degree, {k: fn(c) for k, c in self.terms.items()})

    def evaluate_at(self, q: Quaternion) -> "HForm":
        """Form field at a point: polynomial coefficients evaluated at q."""
        return self.map_coeffs(lambda c: c.evaluate(q) if isinstance(c, QPolynomial) else c)

    def on_vectors(self, *vecs: Quaternion):
        """omega(v_1, ..., v_k) with dx_I(v) = det of the I-rows of (v_1 ... v_k)."""
        if len(vecs) != self.degree:
            raise ValueError("wrong number of vectors")
        out = Quaternion(0, 0, 0, 0)
        for idx, c in self.terms.items():
            det = 0
            for perm in permutations(range(self.degree)):
                s, _ = _sort_sign(perm)
                term = s
                for row, col in zip(idx, perm):
                    term = term * vecs[col].coords()[row]
                det = det + term
            out = out + c * det
        return out

    def maxabs(self) -> float:
        return max((c.maxabs() for c in self.terms.values()), default=0.0)

    def to_float(self) -> "HForm":
        return self.map_coeffs(lambda c: c.to_float())

    def to_json(self) -> dict:
        terms = []
        for k, c in sorted(self.terms.items()):
            name = "".join(VARS[i] for i in k)
            if isinstance(c, QPolynomial):
                terms.append({"idx": name, "coeff": c.to_json()})
            else:
                terms.append({"idx": name, "coeff": [encode_scalar(v) for v in c.coords()]})
        return {"degree": self.degree, "terms": terms}


def wedge(a: HForm, b: HForm) -> HForm:
    if a.degree + b.degree > 4:
        raise DegreeOverflowError(f"degree {a.degree} + {b.degree} > 4")
    out: dict = {}
    for i, c1 in a.terms.items():
        for j, c2 in b.terms.items():
            s, idx = _sort_sign(i + j)
            if not s:
                continue
            v = _mul(c1, c2)
            v = v if s > 0 else -v
            out[idx] = out[idx] + v if idx in out else v
    return HForm(a.degree + b.degree, out)


def exterior_d(w: HForm) -> HForm:
    """d(c dx_I) = sum_j (dc/dx_j) dx_j ^ dx_I; constant coefficients give 0."""
    if w.degree == 4:
        return HForm(4, {})
    out: dict = {}
    for idx, c in w.terms.items():
        if not isinstance(c, QPolynomial):
            continue
        for j in range(4):
            s, new = _sort_sign((j,) + idx)
            if not s:
                continue
            dc = c.diff(j)
            if dc.is_zero():
                continue
            dc = dc if s > 0 else -dc
            out[new] = out[new] + dc if new in out else dc
    return HForm(w.degree + 1, out)


def function_d(f: QPolynomial) -> HForm:
    return exterior_d(HForm(0, {(): f}))


# distinguished forms
def dx(i: int, coeff=ONE) -> HForm:
    return HForm(1, {(i,): coeff})


def dq() -> HForm:
    return HForm(1, {(i,): BASIS[i] for i in range(4)})


def dqbar() -> HForm:
    return HForm(1, {(i,): BASIS[i].conj() for i in range(4)})


def Dq() -> HForm:
    """dx^dy^dz - i dt^dy^dz - j dt^dz^dx - k dt^dx^dy, so that dx_j ^ Dq = e_j omega_0."""
    i_, j_, k_ = BASIS[1:]
    return HForm.from_names({"xyz": ONE, "tyz": -i_, "tzx": -j_, "txy": -k_})


def Dq_as_printed() -> HForm:
    """The variant with -j dt^dx^dz, kept to document that it fails dx_j ^ Dq = e_j omega_0."""
    i_, j_, k_ = BASIS[1:]
    return HForm.from_names({"xyz": ONE, "tyz": -i_, "txz": -j_, "txy": -k_})


def omega0() -> HForm:
    return HForm(4, {(0, 1, 2, 3): ONE})


def dqbar_dq() -> HForm:
    return wedge(dqbar(), dq())


def dq_dq() -> HForm:
    return wedge(dq(), dq())


def closedness_defect(g: QPolynomial, f: QPolynomial, sign: int = 1) -> HForm:
    """d(g Dq f) - ((dr_bar g) f + sign * g (dl_bar f)) omega_0."""
    from .fueter import fueter_apply

    lhs = exterior_d(Dq().lmul(g).rmul(f))
    rhs = fueter_apply(g, "dr_bar") * f
    gf = g * fueter_apply(f, "dl_bar")
    rhs = rhs + gf if sign > 0 else rhs - gf
    return lhs - omega0().rmul(rhs)


def regularity_via_forms(f: QPolynomial) -> bool:
    """Dq ^ df == 0."""
    return wedge(Dq(), function_d(f)).is_zero()


# pullbacks
def compose(f: QPolynomial, comps) -> QPolynomial:
    """f(phi(q)) for a polynomial map phi with real-valued components."""
    out = QPolynomial()
    cache = {}
    for e, c in f.terms.items():
        term = QPolynomial.constant(c)
        for k, m in enumerate(e):
            if m:
                key = (k, m)
                if key not in cache:
                    cache[key] = comps[k] ** m
                term = cache[key] * term
        out = out + term
    return out


@dataclass(frozen=True)
class PolynomialMap:
    """phi = (phi_t, phi_x, phi_y, phi_z), each real-valued."""

    comps: tuple

    @classmethod
    def identity(cls) -> "PolynomialMap":
        return cls(tuple(QPolynomial.variable(v) for v in VARS))

    @classmethod
    def from_quaternion(cls, p: QPolynomial) -> "PolynomialMap":
        return cls(tuple(p.component(k) for k in range(4)))

    def then(self, other: "PolynomialMap") -> "PolynomialMap":
        """other o self."""
        return PolynomialMap(tuple(compose(c, self.comps) for c in other.comps))


def pullback(phi, w: HForm, q: Quaternion | None = None) -> HForm:
    """phi^* w; symbolic for PolynomialMap, pointwise at q for a QMatrix2 (Moebius)."""
    if isinstance(phi, QMatrix2):
        if q is None:
            raise ValueError("Moebius pullbacks are pointwise; pass q")
        return mobius_pullback_numeric(phi, w, q)
    dphi = [function_d(c) for c in phi.comps]
    out = HForm(w.degree, {})
    for idx, c in w.terms.items():
        coeff = compose(c, phi.comps) if isinstance(c, QPolynomial) else QPolynomial.constant(c)
        acc = HForm.scalar(coeff)
        for i in idx:
            acc = wedge(acc, dphi[i])
        out = out + acc
    return out


def mobius_jacobian(g: QMatrix2, q: Quaternion, eps: float = DEFAULT_TOL) -> np.ndarray:
    """Real 4x4 Jacobian of q -> (aq+b)(cq+d)^-1; column j is the derivative along e_j."""
    g, q = g.to_float(), q.to_float()
    den = g.c * q + g.d
    if den.norm() < eps:
        raise SingularDenominatorError(f"N(cq+d) = {den.norm()}")
    inv = qinv(den)
    num = g.a * q + g.b
    jac = np.empty((4, 4))
    for j, e in enumerate(BASIS):
        v = g.a * e * inv - num * inv * g.c * e * inv
        jac[:, j] = [float(x) for x in v.coords()]
    return jac


def mobius_pullback_numeric(g: QMatrix2, w: HForm, q: Quaternion, eps: float = DEFAULT_TOL) -> HForm:
    """(gamma^* w)_q with w evaluated at gamma q, via minors of the Jacobian."""
    jac = mobius_jacobian(g, q, eps)
    gq = frac_linear(g.to_float(), q.to_float(), eps)
    wg = w.evaluate_at(gq).to_float()
    k = w.degree
    out: dict = {}
    for jdx in combinations(range(4), k):
        acc = Quaternion(0.0, 0.0, 0.0, 0.0)
        for idx, c in wg.terms.items():
            m = np.linalg.det(jac[np.ix_(idx, jdx)]) if k else 1.0
            acc = acc + c * float(m)
        out[jdx] = acc
    return HForm(k, out)


def mobius_pullback_closed_form(g: QMatrix2, which: str, q: Quaternion, eps: float = DEFAULT_TOL) -> HForm:
    """Closed forms for gamma^* of dq, dqbar^dq and Dq at q (g in Sp(1,1)).

    dq:        (conj a + q conj b)^-1 dq (cq+d)^-1
    dqbar_dq:  N(cq+d)^-1 conj(cq+d)^-1 dqbar^dq (cq+d)^-1
    Dq:        (conj a + q conj b)^-1 Dq (cq+d)^-1 |cq+d|^-4
    """
    g, q = g.to_float(), q.to_float()
    den = g.c * q + g.d
    n = den.norm()
    if n < eps:
        raise SingularDenominatorError(f"N(cq+d) = {n}")
    right = qinv(den)
    left = qinv(g.a.conj() + q * g.b.conj())
    if which == "dq":
        return dq().to_float().lmul(left).rmul(right)
    if which == "dqbar_dq":
        return dqbar_dq().to_float().lmul(qinv(den.conj()) * (1.0 / n)).rmul(right)
    if which == "Dq":
        return Dq().to_float().lmul(left).rmul(right * (1.0 / n ** 2))
    if which == "dqbar_dq_as_printed":
        return dqbar_dq().to_float().lmul(qinv(den.conj())).rmul(right)
    raise ValueError(f"unknown form {which!r}")


def mobius_pullback_prime_form(g: QMatrix2, q: Quaternion) -> HForm:
    """(conj a + q conj b)' Dq (cq+d)' with q' = q^-1 / N q."""
    from .quaternion import prime

    g, q = g.to_float(), q.to_float()
    return Dq().to_float().lmul(prime(g.a.conj() + q * g.b.conj())).rmul(prime(g.c * q + g.d))


def form_residual(a: HForm, b: HForm) -> float:
    return (a - b).maxabs()


# automorphic forms
# exponents k of (1 - N q)^k in eta, theta, omega
WEIGHTS = {"invariant": {"eta": 2, "theta": 1, "omega": 0},
           "as_printed": {"eta": -2, "theta": -1, "omega": 0}}


def weight_scale(which: str, q: Quaternion, weights: str = "invariant") -> float:
    return (1.0 - float(q.to_float().norm())) ** WEIGHTS[weights][which]


def _star_vec(g):
    return [c.star() for c in g]


def automorphic_forms_build(f, g, which: str, q: Quaternion | None = None, weights: str = "invariant"):
    """n x n matrix [j][i] = g_j^* xi f_i for xi in {eta, theta, omega}.

    omega is returned symbolically when q is None; eta and theta carry powers
    of (1 - N q) (see WEIGHTS) and are always evaluated at q.
    """
    base = {"eta": dq, "theta": dqbar_dq, "omega": Dq}
    if which not in base:
        raise ValueError(f"unknown form {which!r}")
    xi = base[which]()
    gs = _star_vec(g)
    if q is None:
        if which != "omega":
            raise ValueError(f"{which} is not polynomial; pass q")
        return [[xi.lmul(gj).rmul(fi) for fi in f] for gj in gs]
    qf = q.to_float()
    scale = weight_scale(which, qf, weights)
    fv = [fi.evaluate(qf) for fi in f]
    gv = [gj.evaluate(qf) * scale for gj in gs]
    xf = xi.to_float()
    return [[xf.lmul(gj).rmul(fi) for fi in fv] for gj in gv]


def _cq(c) -> Quaternion:
    c = complex(c)
    return Quaternion(c.real, c.imag, 0.0, 0.0)


def form_matrix_at(f_eval, g_eval, which: str, q: Quaternion, theta_conj: str = "star",
                   weights: str = "invariant"):
    """[j][i] = g_j^# xi f_i at q from evaluators (q -> list of quaternions).

    g^# is g^*(q) = conj g(conj q); for theta, theta_conj = "bar" uses conj g(q)
    (the transpose-conjugate of the display) instead.
    """
    qf = q.to_float()
    base = {"eta": dq, "theta": dqbar_dq, "omega": Dq}[which]().to_float()
    scale = weight_scale(which, qf, weights)
    fv = f_eval(qf)
    if which == "theta" and theta_conj == "bar":
        gv = [v.conj() for v in g_eval(qf)]
    else:
        gv = [v.conj() for v in g_eval(qf.conj())]
    return [[base.lmul(gj * scale).rmul(fi) for fi in fv] for gj in gv]


def pulled_back_matrix(f_eval, g_eval, which: str, gamma: QMatrix2, q: Quaternion, theta_conj: str = "star",
                       weights: str = "invariant"):
    """gamma^* of the form matrix, at q."""
    gf, qf = gamma.to_float(), q.to_float()
    gq = frac_linear(gf, qf)
    base = {"eta": dq, "theta": dqbar_dq, "omega": Dq}[which]()
    pb = mobius_pullback_numeric(gf, base, qf)
    scale = weight_scale(which, gq, weights)
    fv = f_eval(gq)
    if which == "theta" and theta_conj == "bar":
        gv = [v.conj() for v in g_eval(gq)]
    else:
        gv = [v.conj() for v in g_eval(gq.conj())]
    return [[pb.lmul(gj * scale).rmul(fi) for fi in fv] for gj in gv]


def transformation_residual(f_eval, g_eval, which: str, gamma: QMatrix2, q: Quaternion, n: int,
                            theta_conj: str = "star", convention: str = "rho",
                            weights: str = "invariant") -> float:
    """max over entries of gamma^* Xi - M(v)^* Xi M(J) with J = cq + d and
    v = a + b conj(q) (eta, omega) or v = J (theta); M = rho_{n-1} by default."""
    from .arithmetic import weight_matrix

    gf, qf = gamma.to_float(), q.to_float()
    J = gf.c * qf + gf.d
    v = J if which == "theta" else gf.a + gf.b * qf.conj()
    ml = weight_matrix(v, n, convention).conj().T
    mr = weight_matrix(J, n, convention)
    xi = form_matrix_at(f_eval, g_eval, which, qf, theta_conj, weights)
    lhs = pulled_back_matrix(f_eval, g_eval, which, gf, qf, theta_conj, weights)
    worst = 0.0
    for j in range(n):
        for i in range(n):
            acc = HForm(xi[0][0].degree, {})
            for k in range(n):
                for l in range(n):
                    acc = acc + xi[k][l].lmul(_cq(ml[j, k])).rmul(_cq(mr[l, i]))
            worst = max(worst, form_residual(lhs[j][i], acc))
    return worst
