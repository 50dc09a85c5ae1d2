from fractions import Fraction

import pytest

from quatds.errors import DomainError, SingularDenominatorError
from quatds.group import (QMatrix2, boost, check_ball, dagger, frac_linear, is_sp11, j_factor, j_factor_from_sigma,
                          mobius_act, one_minus_norm_factor, random_ball_exact, random_sp11_exact, random_sp11_float,
                          sigma, weight_cocycle)
from quatds.quaternion import J, ONE, Quaternion, random_float
from quatds.representations import rho


def test_exact_random_elements_are_in_G(rng):
    for _ in range(30):
        assert is_sp11(random_sp11_exact(rng)) == 0


def test_ngamma_exact(rng):
    for _ in range(100):
        g, q = random_sp11_exact(rng), random_ball_exact(rng)
        assert one_minus_norm_factor(g, q) == 0
        assert mobius_act(g, q).norm() < 1


def test_sigma(rng):
    for _ in range(100):
        q = random_ball_exact(rng)
        s = sigma(q)
        assert s.sp11_residual() == 0
        assert (s * sigma(-q)).is_identity()
        assert frac_linear(s.to_float(), Quaternion(0.0, 0.0, 0.0, 0.0)).close_to(q.to_float())


def test_j_factor_and_cocycle(rng):
    for _ in range(50):
        g, h, q = random_sp11_float(rng), random_sp11_float(rng), random_float(rng)
        jf = j_factor(g, q)
        assert (j_factor_from_sigma(g, q) - jf.as_matrix()).maxabs() < 1e-10
        assert abs(jf.u_left.abs() - 1) < 1e-12 and abs(jf.u_right.abs() - 1) < 1e-12
        lhs = j_factor(g * h, q).as_matrix()
        rhs = j_factor(g, frac_linear(h, q)).as_matrix() * j_factor(h, q).as_matrix()
        assert (lhs - rhs).maxabs() < 1e-10


def test_dagger_is_an_involutive_automorphism(rng):
    g, h = random_sp11_exact(rng), random_sp11_exact(rng)
    assert dagger(dagger(g)) == g
    assert dagger(g * h) == dagger(g) * dagger(h)
    assert is_sp11(dagger(g)) == 0


def test_weight_cocycle_is_anti_multiplicative(rng):
    # J(gh, q) = J(g, hq) J(h, q) and rho(xy) = rho(y) rho(x)
    g, h, q = random_sp11_float(rng), random_sp11_float(rng), random_float(rng, 0.5)
    n = 3
    _, _, a = weight_cocycle(g * h, q, n)
    _, _, b = weight_cocycle(h, q, n)
    _, _, c = weight_cocycle(g, frac_linear(h, q), n)
    assert abs(a - c @ b).max() < 1e-10
    u, v = random_float(rng), random_float(rng)
    assert abs(rho(u * v, 2) - rho(v, 2) @ rho(u, 2)).max() < 1e-12


def test_errors():
    with pytest.raises(DomainError):
        check_ball(Quaternion(1, 0, 0, 0))
    with pytest.raises(DomainError):
        mobius_act(QMatrix2(ONE, ONE, ONE, ONE * 2), Quaternion(0, 0, 0, 0))
    sing = QMatrix2(ONE, ONE, ONE, -ONE)
    with pytest.raises(SingularDenominatorError):
        frac_linear(sing, Quaternion(1, 0, 0, 0))


def test_boost_and_identity():
    b = boost(Fraction(1, 3))
    assert is_sp11(b) == 0
    assert is_sp11(QMatrix2.identity()) == 0
    assert frac_linear(QMatrix2.diag(J, ONE), Quaternion(Fraction(1, 2), 0, 0, 0)) == J * Fraction(1, 2)
