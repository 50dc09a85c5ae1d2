"""numpy implementations of the quadrature kernels (fallback for _kernels.pyx).

Quaternion arrays have shape (N, 4) with columns (t, x, y, z).
"""
from __future__ import annotations

import numpy as np

# increasing triples of {0,1,2,3}, the order used for 3-form coefficients
TRIPLES = ((0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3))


def qmul_rows(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    a1, b1, c1, d1 = a[:, 0], a[:, 1], a[:, 2], a[:, 3]
    a2, b2, c2, d2 = b[:, 0], b[:, 1], b[:, 2], b[:, 3]
    return np.stack([
        a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
        a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
        a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
        a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
    ], axis=1)


def cauchy_kernel_rows(points: np.ndarray, q0: np.ndarray) -> np.ndarray:
    """G(p - q0) = conj(p - q0) / N(p - q0)^2."""
    d = points - q0[None, :]
    n = np.einsum("ij,ij->i", d, d)
    out = -d / (n * n)[:, None]
    out[:, 0] = -out[:, 0]
    return out


def form3_on_frames(coeffs: np.ndarray, frames: np.ndarray) -> np.ndarray:
    """sum_I c_I det(frames[:, :, I]) for a constant 3-form; coeffs has shape (4, 4)."""
    out = np.zeros((frames.shape[0], 4))
    for k, idx in enumerate(TRIPLES):
        m = frames[:, :, list(idx)]
        det = np.linalg.det(m)
        out += det[:, None] * coeffs[k][None, :]
    return out


def weighted_sandwich_sum(left: np.ndarray, mid: np.ndarray, right: np.ndarray, w: np.ndarray) -> np.ndarray:
    """sum_i w_i * left_i * mid_i * right_i (quaternion products)."""
    prod = qmul_rows(qmul_rows(left, mid), right)
    return np.sum(prod * w[:, None], axis=0)
