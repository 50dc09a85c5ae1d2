import random

import numpy as np
import pytest

from quatds import _kernels_py
from quatds.forms import Dq, HForm, automorphic_forms_build
from quatds.fueter import random_regular
from quatds.polynomial import QPolynomial, random_qpolynomial
from quatds.quadrature import (TWO_PI_SQ, BoxRule, box_boundary_integral, box_volume_integral, cauchy_fueter_value,
                               cauchy_kernel_form, integrate_3form, kernel_normalisation, laurent_b_vanishing,
                               nodes_per_angle, sphere_Dq_f, sphere_rule, stokes_residual)
from quatds.quaternion import Quaternion

BOX = BoxRule(np.array([-0.3, -0.2, -0.4, -0.1]), np.array([0.6, 0.5, 0.7, 0.4]), 16)


def test_sphere_rule_volume_and_orientation():
    r = sphere_rule((0.1, 0.2, 0.0, 0.0), 0.7, 4)
    assert abs(r.weights.sum() / (TWO_PI_SQ * 0.7 ** 3) - 1) < 1e-12
    assert integrate_3form(Dq(), r).abs() < 1e-12
    assert abs(kernel_normalisation((0.0, 0.1, 0.0, -0.1), 0.5, 3).t - TWO_PI_SQ) < 1e-10
    assert nodes_per_angle(5) == 22


@pytest.mark.parametrize("degree", range(5))
def test_cauchy_reproduction(degree):
    rng = random.Random(degree)
    f = random_regular(rng, degree)
    q0 = Quaternion(0.1, -0.2, 0.05, 0.15)
    ex = f.evaluate(q0).to_float()
    v = cauchy_fueter_value(f, q0, 0.5, 5)
    assert (v - ex).abs() / max(1.0, ex.abs()) < 1e-10


def test_cauchy_off_centre_sphere():
    f = random_regular(random.Random(9), 3)
    q0 = Quaternion(0.2, -0.1, 0.15, 0.05)
    v = cauchy_fueter_value(f, q0, 0.6, 8, center=(0.0, 0.0, 0.0, 0.0))
    assert (v - f.evaluate(q0).to_float()).abs() < 1e-6


def test_non_regular_is_not_reproduced():
    q = QPolynomial.identity()
    f = q * q.bar()  # N q vanishes at 0, the integral gives r^2
    v = cauchy_fueter_value(f, Quaternion(0.0, 0.0, 0.0, 0.0), 0.5, 4)
    assert abs(v.t - 0.25) < 1e-10


def test_Dq_f_vanishes_for_regular():
    rng = random.Random(3)
    for n in range(5):
        assert sphere_Dq_f(random_regular(rng, n), (0.05, 0.0, -0.1, 0.0), 0.5, 5).abs() < 1e-7


def test_laurent_b():
    rng = random.Random(4)
    for nu in [(0, 0, 0), (1, 0, 1), (2, 1, 2), (2, 0, 0)]:
        assert laurent_b_vanishing(random_regular(rng, 3), nu).abs() < 1e-7
    b0 = laurent_b_vanishing(QPolynomial.identity().bar(), (0, 0, 0))
    # conj(q) is not regular: b_0 = 4 vol(B_r) / 2 pi^2 = r^4 for r = 1/2
    assert abs(b0.t - 1 / 16) < 1e-10


def test_stokes_and_box():
    rng = random.Random(5)
    w = HForm(3, {idx: random_qpolynomial(rng, 3) for idx in [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]})
    res, outer, inner = stokes_residual(w, BOX)
    assert res.abs() < 1e-10 and outer.abs() > 1e-6
    vol = box_volume_integral(QPolynomial.constant(Quaternion(1, 0, 0, 0)), BOX)
    assert abs(vol.t - 0.6 * 0.5 * 0.7 * 0.4) < 1e-12
    f, g = random_regular(rng, 2), random_regular(rng, 2)
    om = automorphic_forms_build([f], [g], "omega")[0][0]
    assert box_boundary_integral(om, BOX).abs() < 1e-9


def test_box_kernel_encloses_singularity():
    centred = BoxRule(np.array([-0.3, -0.3, -0.3, -0.3]), np.array([0.6, 0.6, 0.6, 0.6]), 24)
    v = box_boundary_integral(cauchy_kernel_form((0.0, 0.0, 0.0, 0.0)), centred)
    assert abs(v.t - TWO_PI_SQ) < 1e-4 and max(abs(v.x), abs(v.y), abs(v.z)) < 1e-4


def test_backends_agree():
    from quatds import _core

    rng = np.random.default_rng(0)
    a, b = rng.normal(size=(50, 4)), rng.normal(size=(50, 4))
    assert np.allclose(_core.qmul_rows(a, b), _kernels_py.qmul_rows(a, b))
    q0 = np.array([0.1, 0.0, -0.2, 0.3])
    assert np.allclose(_core.cauchy_kernel_rows(a, q0), _kernels_py.cauchy_kernel_rows(a, q0))
    r = sphere_rule((0.0, 0.0, 0.0, 0.0), 0.5, 2)
    c = np.ascontiguousarray(rng.normal(size=(4, 4)))
    m1, m2 = _core.form3_on_frames(c, r.frames), _kernels_py.form3_on_frames(c, r.frames)
    assert np.allclose(m1, m2)
    left, right = rng.normal(size=(r.size, 4)), rng.normal(size=(r.size, 4))
    s1 = _core.weighted_sandwich_sum(left, m1, right, r.weights)
    s2 = _kernels_py.weighted_sandwich_sum(left, m2, right, r.weights)
    assert np.allclose(s1, s2)


def test_pure_python_fallback_selected(monkeypatch):
    import importlib

    from quatds import _core, quadrature

    f = random_regular(random.Random(1), 3)
    q0 = Quaternion(0.1, 0.0, -0.1, 0.2)
    compiled = cauchy_fueter_value(f, q0, 0.5, 4)
    monkeypatch.setenv("QUATDS_PURE_PYTHON", "1")
    mod = importlib.reload(_core)
    try:
        assert mod.BACKEND == "python"
        monkeypatch.setattr(quadrature, "_core", mod)
        assert (cauchy_fueter_value(f, q0, 0.5, 4) - compiled).abs() < 1e-13
    finally:
        monkeypatch.delenv("QUATDS_PURE_PYTHON")
        importlib.reload(_core)
