"""Compare the compiled and numpy quadrature kernels on the Cauchy-Fueter integral.

    python3 benchmarks/bench_kernels.py [--level 8] [--repeat 5]
"""
import argparse
import random
import time

import numpy as np

from quatds import _kernels_py
from quatds.forms import Dq
from quatds.fueter import random_regular
from quatds.quadrature import _constant_3form_coeffs, sphere_rule

try:
    from quatds import _kernels as _kernels_c
except ImportError:
    _kernels_c = None


def run(impl, rule, left_pts, right, coeffs, q0):
    left = impl.cauchy_kernel_rows(left_pts, q0)
    mid = impl.form3_on_frames(coeffs, rule.frames)
    return impl.weighted_sandwich_sum(left, mid, right, rule.weights)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--level", type=int, default=8)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    rule = sphere_rule((0.0, 0.0, 0.0, 0.0), 0.5, args.level)
    q0 = np.array([0.1, -0.05, 0.02, 0.0])
    f = random_regular(random.Random(0), 3)
    right = np.ascontiguousarray(f.evaluate_array(rule.points))
    coeffs = _constant_3form_coeffs(Dq())
    print(f"nodes: {rule.size}")
    results = {}
    for name, impl in (("numpy", _kernels_py), ("cython", _kernels_c)):
        if impl is None:
            print(f"{name:>7}: not built")
            continue
        best = float("inf")
        for _ in range(args.repeat):
            t = time.perf_counter()
            val = run(impl, rule, rule.points, right, coeffs, q0)
            best = min(best, time.perf_counter() - t)
        results[name] = val
        print(f"{name:>7}: {best * 1e3:8.3f} ms  value {np.round(val / (2 * np.pi ** 2), 12)}")
    if len(results) == 2:
        print(f"max difference: {np.max(np.abs(results['numpy'] - results['cython'])):.3e}")


if __name__ == "__main__":
    main()
