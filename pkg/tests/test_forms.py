import random

import pytest

from quatds import forms as fm
from quatds.arithmetic import equivariant_witness, search_gz
from quatds.errors import DegreeOverflowError
from quatds.fueter import fueter_apply, is_left_regular, minimal_ktype, random_regular
from quatds.group import random_sp11_float
from quatds.polynomial import QPolynomial, random_qpolynomial
from quatds.quaternion import BASIS, I_, J, K, random_float

IDX = {1: [(i,) for i in range(4)], 2: [(i, j) for i in range(4) for j in range(i + 1, 4)],
       3: [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]}


def _rform(rng, degree, poly_degree=2):
    return fm.HForm(degree, {idx: random_qpolynomial(rng, poly_degree, max_num=3) for idx in IDX[degree]})


def test_d_squared_zero():
    rng = random.Random(0)
    for _ in range(100):
        w = _rform(rng, rng.randint(1, 2))
        assert fm.exterior_d(fm.exterior_d(w)).is_zero()
    f = random_qpolynomial(rng, 3)
    assert fm.exterior_d(fm.function_d(f)).is_zero()


def test_wedge_associative_and_overflow():
    rng = random.Random(1)
    for _ in range(10):
        a, b, c = _rform(rng, 1, 1), _rform(rng, 1, 1), _rform(rng, 2, 1)
        assert fm.wedge(fm.wedge(a, b), c) == fm.wedge(a, fm.wedge(b, c))
    with pytest.raises(DegreeOverflowError):
        fm.wedge(fm.Dq(), fm.dq_dq())


def test_graded_commutativity():
    assert fm.wedge(fm.dx(1), fm.dx(2)) == -fm.wedge(fm.dx(2), fm.dx(1))
    real = fm.dx(0).rmul(QPolynomial.variable("x"))
    w = fm.dq()
    assert fm.wedge(real, w) == -fm.wedge(w, real)
    # quaternionic coefficients on both sides: the sign rule fails
    assert fm.wedge(fm.dq(), fm.dq()) != -fm.wedge(fm.dq(), fm.dq())


def test_distinguished_forms():
    assert fm.wedge(fm.dq(), fm.dq()) == fm.dq_dq()
    assert fm.dq_dq().on_vectors(I_, J) == K * 2
    for j in range(4):
        assert fm.wedge(fm.dx(j), fm.Dq()) == fm.omega0().lmul(BASIS[j])
    # the displayed sign of the j-term breaks this for dy
    assert fm.wedge(fm.dx(2), fm.Dq_as_printed()) != fm.omega0().lmul(J)


def test_closedness_plus_sign():
    rng = random.Random(2)
    for _ in range(30):
        f, g = random_qpolynomial(rng, 3), random_qpolynomial(rng, 3)
        assert fm.closedness_defect(g, f, +1).is_zero()


def test_closedness_minus_holds_only_when_g_dl_f_vanishes():
    rng = random.Random(3)
    f = random_regular(rng, 2)
    g = random_qpolynomial(rng, 3)
    assert fm.closedness_defect(g, f, -1).is_zero()
    f2 = random_qpolynomial(rng, 3)
    assert not fm.closedness_defect(g, f2, -1).is_zero()


def test_regularity_criterion():
    rng = random.Random(4)
    for n in range(4):
        f = random_regular(rng, n)
        assert fm.regularity_via_forms(f) and is_left_regular(f)
        g = random_qpolynomial(rng, 3)
        assert fm.regularity_via_forms(g) == is_left_regular(g)


def test_omega_closed_for_regular_pairs():
    rng = random.Random(5)
    for _ in range(5):
        f, g = random_regular(rng, rng.randint(0, 3)), random_regular(rng, rng.randint(0, 3))
        assert fueter_apply(g.star(), "dr_bar").is_zero()
        assert fm.exterior_d(fm.automorphic_forms_build([f], [g], "omega")[0][0]).is_zero()
    _, h = minimal_ktype(2, 0)
    for row in fm.automorphic_forms_build(list(h), list(h), "omega"):
        assert all(fm.exterior_d(w).is_zero() for w in row)
    zero = fm.automorphic_forms_build([QPolynomial()], [h[0]], "omega")
    assert zero[0][0].is_zero()


def test_polynomial_pullback_commutes_with_d():
    rng = random.Random(6)
    phi = fm.PolynomialMap(tuple(random_qpolynomial(rng, 2, max_num=2).component(0) for _ in range(4)))
    w = _rform(rng, 1, 2)
    assert fm.pullback(phi, fm.exterior_d(w)) == fm.exterior_d(fm.pullback(phi, w))
    ident = fm.PolynomialMap.identity()
    assert fm.pullback(ident, w) == w


@pytest.mark.parametrize("which,base", [("dq", fm.dq), ("dqbar_dq", fm.dqbar_dq), ("Dq", fm.Dq)])
def test_formdform_closed_forms(which, base):
    rng = random.Random(7)
    for _ in range(30):
        g, q = random_sp11_float(rng), random_float(rng)
        num = fm.mobius_pullback_numeric(g, base(), q)
        assert fm.form_residual(num, fm.mobius_pullback_closed_form(g, which, q)) < 1e-10


def test_formdform_b_as_displayed_is_off():
    rng = random.Random(8)
    g, q = random_sp11_float(rng), random_float(rng)
    num = fm.mobius_pullback_numeric(g, fm.dqbar_dq(), q)
    assert fm.form_residual(num, fm.mobius_pullback_closed_form(g, "dqbar_dq_as_printed", q)) > 1e-3


def test_prime_form_agrees():
    rng = random.Random(9)
    g, q = random_sp11_float(rng), random_float(rng)
    assert fm.form_residual(fm.mobius_pullback_prime_form(g, q), fm.mobius_pullback_closed_form(g, "Dq", q)) < 1e-10


@pytest.mark.parametrize("which", ["eta", "theta", "omega"])
def test_transformation_law_on_witness(which):
    rng = random.Random(10)
    gz = [g for g in search_gz(2) if any(g.B)]
    for t in range(6):
        gamma = random_sp11_float(rng) if t % 2 else rng.choice(gz).to_qmatrix()
        q = random_float(rng, 0.5)
        res = fm.transformation_residual(equivariant_witness, equivariant_witness, which, gamma, q, 2)
        assert res < 1e-8
        if which == "theta":
            assert fm.transformation_residual(equivariant_witness, equivariant_witness, which, gamma, q, 2,
                                              theta_conj="bar") < 1e-8


@pytest.mark.parametrize("which", ["eta", "theta"])
def test_printed_weights_fail(which):
    rng = random.Random(11)
    gamma, q = random_sp11_float(rng), random_float(rng, 0.5)
    assert fm.transformation_residual(equivariant_witness, equivariant_witness, which, gamma, q, 2,
                                      weights="as_printed") > 1e-3


def test_form_json():
    d = fm.Dq().to_json()
    assert d["degree"] == 3 and {t["idx"] for t in d["terms"]} == {"xyz", "tyz", "txz", "txy"}
