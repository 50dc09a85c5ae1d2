import time
from fractions import Fraction

import numpy as np
import pytest

from quatds import lie
from quatds.errors import BasisDecompositionError, NotARootError
from quatds.group import QMatrix2
from quatds.quaternion import ONE
from quatds.scalars import GaussianRational


def test_killing_su2():
    k = lie.killing_matrix("su2")
    assert all(k[i, j] == (-8 if i == j else 0) for i in range(3) for j in range(3))


def test_killing_sp11_fast_and_exact():
    t = time.perf_counter()
    k = lie.killing_matrix("sp11")
    assert time.perf_counter() - t < 1.0
    target = [-12] * 6 + [24] * 4
    assert all(k[i, j] == (target[i] if i == j else 0) for i in range(10) for j in range(10))


def test_killing_paths_agree_on_sample():
    # slow GaussianRational path vs integer structure constants
    k = lie.killing_matrix("sp11")
    for i, j in ((0, 0), (6, 6), (2, 7), (9, 9)):
        assert lie.killing(lie.basis_vector(i), lie.basis_vector(j)) == k[i, j]


def test_structure_constants_antisymmetric_and_jacobi():
    c = lie.structure_constants().astype(int)
    assert (c + c.transpose(1, 0, 2) == 0).all()
    # sum_m c_ij^m c_mk^l + cyclic = 0
    jac = (np.einsum("ijm,mkl->ijkl", c, c) + np.einsum("jkm,mil->ijkl", c, c) + np.einsum("kim,mjl->ijkl", c, c))
    assert not jac.any()


def test_basis_lies_in_sp11_algebra():
    # X in g_0 iff X^* J + J X = 0 with J = diag(1, -1)
    for s in lie.BASIS_S:
        m = QMatrix2(s.a.conj(), s.c.conj(), s.b.conj(), s.d.conj())
        jm = QMatrix2(ONE, ONE * 0, ONE * 0, -ONE)
        d = m * jm + jm * s
        assert all(e.is_zero() for e in d.entries())


def test_decompose_rejects_outside():
    with pytest.raises(BasisDecompositionError):
        lie.decompose(QMatrix2(ONE, ONE * 0, ONE * 0, ONE * 0).map(GaussianRational.coerce))


def test_su2_ad():
    a, b, c = Fraction(1, 2), Fraction(-3), Fraction(2, 7)
    assert (lie.su2_ad((a, b, c)) == lie.su2_ad_closed_form(a, b, c)).all()


def test_root_normalisation():
    for mu in lie.ROOTS:
        neg = (-mu[0], -mu[1])
        for nu in lie.ROOTS:
            expect = 1 if mu == nu else 0
            assert lie.c_killing(lie.root_vector(mu), lie.root_vector((-nu[0], -nu[1]))) == expect
        assert lie.c_bracket(lie.root_vector(mu), lie.root_vector(neg)) == lie.cartan_element(mu)


def test_root_eigenvalues():
    z, w = GaussianRational(3, Fraction(1, 2)), GaussianRational(Fraction(-2, 3), 1)
    h = lie.cartan_generic(z, w)
    for mu in lie.ROOTS:
        e = lie.root_vector(mu)
        assert lie.c_bracket(h, e) == e.scaled(lie.root_value(mu, z, w))


def test_root_partition():
    assert set(lie.COMPACT_ROOTS) | set(lie.NONCOMPACT_ROOTS) == set(lie.ROOTS)
    assert not set(lie.COMPACT_ROOTS) & set(lie.NONCOMPACT_ROOTS)
    with pytest.raises(NotARootError):
        lie.root_vector((1, 0))


def test_sl2_triple():
    (e, f, h), (me, mf, mh) = lie.sl2_triple_map()
    assert lie.su2_c_bracket(h, e) == e * 2
    assert lie.su2_c_bracket(h, f) == f * -2
    assert lie.su2_c_bracket(e, f) == h
    assert all(a == b for a, b in zip(mh.flat, [1, 0, 0, -1]))
