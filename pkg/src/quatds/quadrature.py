"""Quadrature of quaternion-valued forms on 3-spheres and boxes.

Orientation convention (single global constant): a tangent frame (v1, v2, v3)
on a hypersurface with outward normal n is positive when det[n, v1, v2, v3] > 0.
With it Dq(v1, v2, v3) = n for orthonormal frames, and the Cauchy-Fueter
kernel integrates to +2 pi^2.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _core
from .forms import Dq, HForm, exterior_d
from .polynomial import QPolynomial
from .quaternion import Quaternion

ORIENTATION = 1
TWO_PI_SQ = 2 * math.pi ** 2


def _qarr(q) -> np.ndarray:
    return np.array([float(v) for v in q.coords()]) if isinstance(q, Quaternion) else np.asarray(q, float)


def _to_q(a) -> Quaternion:
    return Quaternion(*(float(v) for v in a))


@dataclass(frozen=True)
class SphereRule:
    center: np.ndarray
    radius: float
    points: np.ndarray   # (N, 4)
    weights: np.ndarray  # (N,)
    frames: np.ndarray   # (N, 3, 4), rows are tangent vectors
    normals: np.ndarray  # (N, 4)

    @property
    def size(self) -> int:
        return self.points.shape[0]


def nodes_per_angle(level: int) -> int:
    return 4 * level + 2


def sphere_rule(center, radius: float, level: int) -> SphereRule:
    """Gauss-Legendre in the two polar angles, trapezoid in the azimuth."""
    if radius <= 0:
        raise ValueError("radius must be positive")
    m = nodes_per_angle(level)
    x, wx = np.polynomial.legendre.leggauss(m)
    ang = (x + 1) * math.pi / 2
    wang = wx * math.pi / 2
    nphi = 2 * m
    phi = (np.arange(nphi) + 0.5) * 2 * math.pi / nphi
    wphi = np.full(nphi, 2 * math.pi / nphi)
    psi, th, ph = np.meshgrid(ang, ang, phi, indexing="ij")
    w = (np.einsum("i,j,k->ijk", wang, wang, wphi) * np.sin(psi) ** 2 * np.sin(th)).ravel() * radius ** 3
    psi, th, ph = psi.ravel(), th.ravel(), ph.ravel()
    sp, cp, st, ct, sf, cf = np.sin(psi), np.cos(psi), np.sin(th), np.cos(th), np.sin(ph), np.cos(ph)
    n = np.stack([cp, sp * ct, sp * st * cf, sp * st * sf], axis=1)
    e_psi = np.stack([-sp, cp * ct, cp * st * cf, cp * st * sf], axis=1)
    e_th = np.stack([np.zeros_like(th), -st, ct * cf, ct * sf], axis=1)
    e_ph = np.stack([np.zeros_like(ph), np.zeros_like(ph), -sf, cf], axis=1)
    frames = np.stack([e_psi, e_th, e_ph], axis=1)
    det = np.linalg.det(np.stack([n, e_psi, e_th, e_ph], axis=1))
    flip = np.sign(det) * ORIENTATION
    frames[:, 2, :] *= flip[:, None]
    c = _qarr(center)
    return SphereRule(c, float(radius), c[None, :] + radius * n, w, np.ascontiguousarray(frames), n)


def _constant_3form_coeffs(w: HForm) -> np.ndarray:
    coeffs = np.zeros((4, 4))
    for k, idx in enumerate(_core.TRIPLES):
        c = w.coeff(idx)
        if c is not None:
            coeffs[k] = _qarr(c)
    return coeffs


def _eval_coeff(c, points) -> np.ndarray:
    if isinstance(c, QPolynomial):
        return c.evaluate_array(points)
    return np.tile(_qarr(c), (points.shape[0], 1))


def form_on_frames(w: HForm, points: np.ndarray, frames: np.ndarray) -> np.ndarray:
    """Values omega_p(v1, v2, v3) at each node, for polynomial or constant 3-forms."""
    if w.degree != 3:
        raise ValueError("expected a 3-form")
    out = np.zeros((points.shape[0], 4))
    for idx, c in w.terms.items():
        det = np.linalg.det(frames[:, :, list(idx)])
        out += det[:, None] * _eval_coeff(c, points)
    return out


def integrate_3form(w, rule: SphereRule) -> Quaternion:
    """sum_i w_i omega(node_i)(frame_i); w is an HForm or a callable (points, frames) -> (N, 4)."""
    vals = w(rule.points, rule.frames) if callable(w) else form_on_frames(w, rule.points, rule.frames)
    return _to_q(np.sum(vals * rule.weights[:, None], axis=0))


def integrate_sandwich(left: np.ndarray, mid_form: HForm, right: np.ndarray, rule: SphereRule) -> Quaternion:
    """sum_i w_i L_i * xi(frame_i) * R_i for a constant 3-form xi (hot path)."""
    mid = _core.form3_on_frames(_constant_3form_coeffs(mid_form), rule.frames)
    return _to_q(_core.weighted_sandwich_sum(np.ascontiguousarray(left), mid,
                                             np.ascontiguousarray(right), rule.weights))


def cauchy_integral(f: QPolynomial, q0, rule: SphereRule) -> Quaternion:
    """(1/2 pi^2) int G(q - q0) Dq f(q)."""
    left = _core.cauchy_kernel_rows(rule.points, _qarr(q0))
    right = f.evaluate_array(rule.points)
    return integrate_sandwich(left, Dq(), right, rule) * (1 / TWO_PI_SQ)


def cauchy_fueter_value(f: QPolynomial, q0, radius: float, level: int, center=None) -> Quaternion:
    """Value of the Cauchy-Fueter integral over S^3_r(center) (default: centred at q0)."""
    rule = sphere_rule(q0 if center is None else center, radius, level)
    return cauchy_integral(f, q0, rule)


def sphere_Dq_f(f: QPolynomial, center, radius: float, level: int) -> Quaternion:
    """int_{S^3_r} Dq f; zero for left-regular f."""
    rule = sphere_rule(center, radius, level)
    left = np.tile([1.0, 0, 0, 0], (rule.size, 1))
    return integrate_sandwich(left, Dq(), f.evaluate_array(rule.points), rule)


def kernel_normalisation(q0, radius: float, level: int) -> Quaternion:
    rule = sphere_rule(q0, radius, level)
    left = _core.cauchy_kernel_rows(rule.points, _qarr(q0))
    right = np.tile([1.0, 0, 0, 0], (rule.size, 1))
    return integrate_sandwich(left, Dq(), right, rule)


def laurent_kernels(max_order: int = 2) -> dict:
    """Right-regular kernels (Q^n_{k,l})^* for n <= max_order, 0 <= k <= l <= n."""
    from .fueter import q_index_set, q_kl

    return {(n, k, l): q_kl(n, k, l).star()
            for n in range(max_order + 1) for k, l in q_index_set(n)}


def laurent_b(f: QPolynomial, nu, q0, rule: SphereRule) -> Quaternion:
    """(1/2 pi^2) int P_nu(q - q0) Dq f(q) with P_nu = (Q^n_{k,l})^*, nu = (n, k, l)."""
    from .fueter import q_kl

    n, k, l = nu
    kernel = q_kl(n, k, l).star()
    left = kernel.evaluate_array(rule.points - _qarr(q0)[None, :])
    right = f.evaluate_array(rule.points)
    return integrate_sandwich(left, Dq(), right, rule) * (1 / TWO_PI_SQ)


def laurent_b_vanishing(f: QPolynomial, nu, q0=(0.0, 0, 0, 0), radius: float = 0.5, level: int = 5) -> Quaternion:
    return laurent_b(f, nu, q0, sphere_rule(q0, radius, level))


# boxes
@dataclass(frozen=True)
class BoxRule:
    corner: np.ndarray
    extents: np.ndarray
    nodes: int = 16

    def __post_init__(self):
        if np.any(np.asarray(self.extents) <= 0):
            raise ValueError("box extents must be positive")


def _gl(a: float, b: float, m: int):
    x, w = np.polynomial.legendre.leggauss(m)
    return (x + 1) * (b - a) / 2 + a, w * (b - a) / 2


def box_volume_integral(c, box: BoxRule) -> Quaternion:
    """int over the box of c dt dx dy dz (c a QPolynomial or callable on (N, 4) points)."""
    axes = [_gl(box.corner[k], box.corner[k] + box.extents[k], box.nodes) for k in range(4)]
    grids = np.meshgrid(*[a[0] for a in axes], indexing="ij")
    wts = np.einsum("i,j,k,l->ijkl", *[a[1] for a in axes]).ravel()
    pts = np.stack([g.ravel() for g in grids], axis=1)
    vals = c(pts) if callable(c) else _eval_coeff(c, pts)
    return _to_q(np.sum(vals * wts[:, None], axis=0))


def box_boundary_nodes(box: BoxRule):
    """(points, frames, weights) on the 8 faces with positively oriented frames."""
    pts_all, fr_all, w_all = [], [], []
    eye = np.eye(4)
    for k in range(4):
        others = [j for j in range(4) if j != k]
        axes = [_gl(box.corner[j], box.corner[j] + box.extents[j], box.nodes) for j in others]
        grids = np.meshgrid(*[a[0] for a in axes], indexing="ij")
        wts = np.einsum("i,j,k->ijk", *[a[1] for a in axes]).ravel()
        for side, val in ((-1, box.corner[k]), (1, box.corner[k] + box.extents[k])):
            pts = np.zeros((wts.size, 4))
            pts[:, k] = val
            for j, g in zip(others, grids):
                pts[:, j] = g.ravel()
            normal = side * eye[k]
            frame = np.stack([eye[j] for j in others])
            if np.linalg.det(np.vstack([normal, frame])) * ORIENTATION < 0:
                frame[2] = -frame[2]
            pts_all.append(pts)
            fr_all.append(np.broadcast_to(frame, (wts.size, 3, 4)))
            w_all.append(wts)
    return np.vstack(pts_all), np.ascontiguousarray(np.vstack(fr_all)), np.concatenate(w_all)


def box_boundary_integral(w, box: BoxRule) -> Quaternion:
    pts, frames, wts = box_boundary_nodes(box)
    vals = w(pts, frames) if callable(w) else form_on_frames(w, pts, frames)
    return _to_q(np.sum(vals * wts[:, None], axis=0))


def stokes_residual(w: HForm, box: BoxRule) -> tuple:
    """(int_boundary omega - int_box d omega, int_boundary omega, int_box d omega)."""
    dw = exterior_d(w)
    c = dw.coeff((0, 1, 2, 3))
    inner = box_volume_integral(c, box) if c is not None else Quaternion(0.0, 0.0, 0.0, 0.0)
    outer = box_boundary_integral(w, box)
    return outer - inner, outer, inner


def cauchy_kernel_form(q0):
    """Callable G(q - q0) Dq evaluated on frames, for box or sphere integration."""
    coeffs = _constant_3form_coeffs(Dq())
    q0a = _qarr(q0)

    def value(points, frames):
        left = _core.cauchy_kernel_rows(np.ascontiguousarray(points), q0a)
        return _core.qmul_rows(left, _core.form3_on_frames(coeffs, np.ascontiguousarray(frames)))

    return value
