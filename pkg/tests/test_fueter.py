import random
from fractions import Fraction

import pytest

from quatds import fueter as fu
from quatds.errors import DomainError
from quatds.polynomial import QPolynomial, random_qpolynomial
from quatds.quaternion import I_, J, ONE, Quaternion


def test_operators_on_identity():
    q = QPolynomial.identity()
    assert fu.fueter_apply(q, "dl_bar") == QPolynomial.constant(Quaternion(-2, 0, 0, 0))
    assert fu.fueter_apply(q, "dl") == QPolynomial.constant(Quaternion(4, 0, 0, 0))
    assert fu.fueter_apply(q.bar(), "dl_bar") == QPolynomial.constant(Quaternion(4, 0, 0, 0))


def test_laplacian_factorisation():
    f = random_qpolynomial(random.Random(0), 4)
    assert fu.fueter_apply(fu.fueter_apply(f, "dl_bar"), "dl") == fu.laplacian(f)


@pytest.mark.parametrize("n", range(6))
def test_crf_and_regularity(n):
    for k in range(n + 1):
        for l in range(n + 1):
            a, b = fu.crf_residuals(n, k, l)
            assert not a and not b
            qkl = fu.q_kl(n, k, l)
            assert fu.is_left_regular(qkl)
            assert qkl.is_homogeneous(n) or qkl.is_zero()
            assert fu.laplacian(qkl).is_zero()


def test_small_families():
    assert fu.q_kl(0, 0, 0) == QPolynomial.constant(ONE)
    # Q^1_{0,0} = z = t + i x
    assert fu.q_kl(1, 0, 0) == QPolynomial.variable("t") + QPolynomial.variable("x", I_)


def test_involutions_exchange_regularity():
    rng = random.Random(1)
    for n in range(4):
        f = fu.random_regular(rng, n)
        assert fu.fueter_apply(f.star(), "dr_bar").is_zero()
        assert fu.fueter_apply(f.bar(), "dr").is_zero()
        assert fu.fueter_apply(f.dag(), "dl").is_zero()


@pytest.mark.parametrize("n", range(1, 5))
def test_minimal_ktype(n):
    for k in range(n + 1):
        g, h = fu.minimal_ktype(n, k)
        for i, c in enumerate(h):
            assert fu.is_left_regular(c)
            assert c == fu.h_coordinate_expected(n, k, i)
        assert all(x.is_zero() for x in fu.dirac_lz(g))
        cpart, jpart = fu.hwt_parts(h)
        assert all(x.is_zero() for x in cpart)
        if n >= 2:
            assert not all(x.is_zero() for x in jpart)


def test_h_independence():
    for n in range(1, 4):
        assert fu.h_family_rank(n, "C") == 2 * (n + 1)
        if n >= 2:
            assert fu.h_family_rank(n, "H") == 4 * (n + 1)
    h0, h1 = fu.minimal_ktype(1, 0)[1], fu.minimal_ktype(1, 1)[1]
    assert all(b == (-a).rmul(J) for a, b in zip(h0, h1))


@pytest.mark.parametrize("n", range(4))
def test_q_basis_rank(n):
    assert fu.q_family_rank(n) == fu.regular_space_dim(n)
    assert fu.q_family_rank(n, "all") == fu.regular_space_dim(n)


def test_dirac_diagram_random():
    rng = random.Random(2)
    for _ in range(50):
        f = fu.random_vn_function(rng, rng.randint(1, 3))
        a, b = fu._dirac_path_tensor(f), fu._dirac_path_fueter(f)
        assert all((x - y).is_zero() for x, y in zip(a, b))
        assert len(fu.dirac_lz(f)) == f.n


def test_dirac_domain_errors():
    with pytest.raises(DomainError):
        fu.dirac_lz(fu.VnFunction((QPolynomial.identity(),)))
    with pytest.raises(DomainError):
        fu.dirac_lz(fu.VnFunction((QPolynomial.constant(J), QPolynomial.constant(ONE))))
    with pytest.raises(DomainError):
        fu.minimal_ktype(2, 3)


def test_curve_rules():
    f = fu.Curve((Quaternion(1, 2, 0, -1), Quaternion(0, 1, 3, 1), Quaternion(Fraction(1, 2), 0, -2, 1)))
    g = fu.Curve((Quaternion(2, 0, 1, 0), Quaternion(-1, 1, 0, 2)))
    x0 = Fraction(1, 3)
    lhs, rhs = fu.curve_product_derivative(f, g, x0)
    assert lhs == rhs
    lhs, rhs = fu.curve_inverse_derivative(f, x0)
    assert lhs == rhs
    p = random_qpolynomial(random.Random(4), 3)
    # chain rule against the expanded composition along a linear curve
    c = fu.Curve((Quaternion(1, 0, 2, -1), Quaternion(0, 1, 1, 3)))
    h = Fraction(1, 10 ** 6)
    approx = (p.evaluate(c.at(x0 + h)) - p.evaluate(c.at(x0 - h))) * (1 / (2 * h))
    assert (fu.curve_derivative(p, c, x0) - approx).maxabs() < 1e-9
