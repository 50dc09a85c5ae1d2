from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings

from conftest import exact_quaternion
from quatds.errors import ZeroDivisorError
from quatds.quaternion import (BASIS, I_, J, K, ONE, ZERO, Quaternion, iota_embed, iota_inverse, prime, qinv,
                               quaternion_from_json, quaternion_to_json)
from quatds.scalars import GaussianRational


def test_hamilton_relations():
    assert I_ * I_ == J * J == K * K == I_ * J * K == -ONE
    assert I_ * J == K and J * I_ == -K


@given(exact_quaternion, exact_quaternion, exact_quaternion)
@settings(max_examples=60, deadline=None)
def test_ring_axioms(p, q, r):
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert (p * q).conj() == q.conj() * p.conj()
    assert (p * q).norm() == p.norm() * q.norm()


@given(exact_quaternion)
@settings(max_examples=60, deadline=None)
def test_norm_trace_inverse(q):
    assert q * q.conj() == Quaternion(q.norm(), 0, 0, 0)
    assert q.trace() == 2 * q.t
    if q.norm() != 0:
        assert q * qinv(q) == ONE
        assert prime(q) * q.norm() == qinv(q)


@given(exact_quaternion, exact_quaternion)
@settings(max_examples=40, deadline=None)
def test_iota_is_multiplicative(p, q):
    lhs = iota_embed(p * q)
    rhs = iota_embed(p).dot(iota_embed(q))
    assert all(a == b for a, b in zip(lhs.flat, rhs.flat))
    assert iota_inverse(iota_embed(p)) == p.map(GaussianRational.coerce)


def test_iota_float_matches_exact():
    q = Quaternion(Fraction(1, 3), Fraction(-2, 5), Fraction(3, 7), Fraction(1, 2))
    a = np.array([[complex(v) for v in row] for row in iota_embed(q)])
    assert np.allclose(a, iota_embed(q.to_float()))
    assert np.isclose(np.linalg.det(a), float(q.norm()))


def test_zero_inverse_raises():
    with pytest.raises(ZeroDivisorError):
        qinv(ZERO)
    with pytest.raises(ZeroDivisorError):
        qinv(Quaternion(1e-14, 0.0, 0.0, 0.0))


def test_json_roundtrip():
    for q in BASIS + (Quaternion(Fraction(1, 3), 2, Fraction(-5, 4), 0), Quaternion(0.5, -1.25, 0.0, 2.0)):
        assert quaternion_from_json(quaternion_to_json(q)) == q


def test_gaussian_rational_field():
    a, b = GaussianRational(Fraction(1, 2), 3), GaussianRational(-2, Fraction(1, 3))
    assert (a * b) / b == a
    assert (a * a.conjugate()).im == 0
    assert a.abs2() == Fraction(1, 4) + 9
