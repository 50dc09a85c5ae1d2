# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled quadrature kernels; same interface as _kernels_py."""
import numpy as np

TRIPLES = ((0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3))

cdef inline void _qmul(double a1, double b1, double c1, double d1,
                       double a2, double b2, double c2, double d2, double* o) nogil:
    o[0] = a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2
    o[1] = a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2
    o[2] = a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2
    o[3] = a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2


def qmul_rows(double[:, ::1] a, double[:, ::1] b):
    cdef Py_ssize_t n = a.shape[0], i
    out = np.empty((n, 4))
    cdef double[:, ::1] o = out
    with nogil:
        for i in range(n):
            _qmul(a[i, 0], a[i, 1], a[i, 2], a[i, 3], b[i, 0], b[i, 1], b[i, 2], b[i, 3], &o[i, 0])
    return out


def cauchy_kernel_rows(double[:, ::1] points, double[::1] q0):
    cdef Py_ssize_t n = points.shape[0], i, k
    cdef double d[4]
    cdef double nn
    out = np.empty((n, 4))
    cdef double[:, ::1] o = out
    with nogil:
        for i in range(n):
            for k in range(4):
                d[k] = points[i, k] - q0[k]
            nn = d[0] * d[0] + d[1] * d[1] + d[2] * d[2] + d[3] * d[3]
            nn = nn * nn
            o[i, 0] = d[0] / nn
            o[i, 1] = -d[1] / nn
            o[i, 2] = -d[2] / nn
            o[i, 3] = -d[3] / nn
    return out


cdef inline double _det3(double[:, :, ::1] f, Py_ssize_t i, int r0, int r1, int r2) nogil:
    # frames[i, v, r]: vector v, coordinate r; minor on coordinates (r0, r1, r2)
    return (f[i, 0, r0] * (f[i, 1, r1] * f[i, 2, r2] - f[i, 1, r2] * f[i, 2, r1])
            - f[i, 0, r1] * (f[i, 1, r0] * f[i, 2, r2] - f[i, 1, r2] * f[i, 2, r0])
            + f[i, 0, r2] * (f[i, 1, r0] * f[i, 2, r1] - f[i, 1, r1] * f[i, 2, r0]))


def form3_on_frames(double[:, ::1] coeffs, double[:, :, ::1] frames):
    cdef Py_ssize_t n = frames.shape[0], i, k
    cdef double m0, m1, m2, m3
    out = np.empty((n, 4))
    cdef double[:, ::1] o = out
    with nogil:
        for i in range(n):
            m0 = _det3(frames, i, 0, 1, 2)
            m1 = _det3(frames, i, 0, 1, 3)
            m2 = _det3(frames, i, 0, 2, 3)
            m3 = _det3(frames, i, 1, 2, 3)
            for k in range(4):
                o[i, k] = m0 * coeffs[0, k] + m1 * coeffs[1, k] + m2 * coeffs[2, k] + m3 * coeffs[3, k]
    return out


def weighted_sandwich_sum(double[:, ::1] left, double[:, ::1] mid, double[:, ::1] right, double[::1] w):
    cdef Py_ssize_t n = left.shape[0], i, k
    cdef double t1[4]
    cdef double t2[4]
    cdef double acc[4]
    for k in range(4):
        acc[k] = 0.0
    with nogil:
        for i in range(n):
            _qmul(left[i, 0], left[i, 1], left[i, 2], left[i, 3], mid[i, 0], mid[i, 1], mid[i, 2], mid[i, 3], t1)
            _qmul(t1[0], t1[1], t1[2], t1[3], right[i, 0], right[i, 1], right[i, 2], right[i, 3], t2)
            for k in range(4):
                acc[k] += w[i] * t2[k]
    return np.array([acc[0], acc[1], acc[2], acc[3]])
