from __future__ import annotations

import numpy as np
import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from heisrep import heisenberg as hz
from heisrep import linearize as lin
from heisrep.suite import random_semidirect

from conftest import elements


@given(elements(3), elements(3))
def test_tautological_is_multiplicative(x, y):
    assert np.array_equal(lin.tautological_scaled(x).dot(lin.tautological_scaled(y)),
                          lin.tautological_scaled(x * y))


@given(elements(2))
def test_tautological_decodes(x):
    T = lin.tautological(x)
    assert lin.tautological_decode(T) == x
    assert T[0][-1] == sympy.Rational(x.l, 2) + sum(a * b for a, b in zip(x.m, x.n))


def test_tautological_shape():
    T = lin.tautological(hz.parse_element("a1 b2 s", 2))
    assert len(T) == 4
    assert [T[i][i] for i in range(4)] == [1, 1, 1, 1]


@given(st.randoms(use_true_random=False), st.integers(1, 3))
def test_supra_is_a_homomorphism(rng, g):
    x, y = random_semidirect(rng, g), random_semidirect(rng, g)
    assert hz._matmul(lin.suprataut(x), lin.suprataut(y)) == lin.suprataut(x * y)


@given(st.randoms(use_true_random=False), st.integers(1, 3))
def test_supra_decodes(rng, g):
    z = random_semidirect(rng, g)
    w = lin.suprataut_decode(lin.suprataut(z))
    assert w.h == z.h and w.aut == z.aut


@given(elements(2), elements(2))
def test_supra_commutation_relation(x, y):
    J = hz.J_matrix(2)
    e = 2 * sum(a * b for a, b in zip(hz._matvec(J, x.vector), y.vector))
    lhs = hz._matmul(lin.suprataut(x), lin.suprataut(y))
    rhs = hz._matmul(hz._matmul(lin.suprataut(y), lin.suprataut(x)), lin.suprataut(hz.sigma(2, e)))
    assert lhs == rhs


def test_supra_rejects_non_symplectic():
    with pytest.raises(ValueError):
        lin.suprataut_symplectic(((1, 1), (1, 1)))


@pytest.mark.parametrize("g,r", [(1, 2), (1, 3), (2, 2), (1, 4)])
def test_iota_relations(g, r):
    s = lin.iota_generator(g, r, "s")
    assert lin.iota_element(hz.sigma(g, r), r).is_identity()
    for i in range(1, g + 1):
        a, b = lin.iota_generator(g, r, "a", i), lin.iota_generator(g, r, "b", i)
        assert a * b == s * s * b * a


@given(elements(2, 3), elements(2, 3), st.integers(2, 4))
def test_iota_is_multiplicative(x, y, r):
    assert lin.iota_element(x * y, r) == lin.iota_element(x, r) * lin.iota_element(y, r)


def test_iota_on_ring_elements_is_additive():
    g, r = 1, 3
    x = hz.parse_ring("2*a1 - b1 s", g, hz.mod_sigma(r))
    y = hz.parse_ring("s^2 + a1^-1", g, hz.mod_sigma(r))
    assert lin.iota_r(x + y, r) == lin.iota_r(x, r) + lin.iota_r(y, r)
    assert lin.iota_r(x * y, r) == lin.iota_r(x, r) * lin.iota_r(y, r)
    assert lin.iota_r(x - x, r).is_zero()


def test_iota_needs_level_two():
    with pytest.raises(ValueError):
        lin.iota_r(hz.sigma(1), 1)


def test_certificate_cyclic_shift():
    S = lin.iota_element(hz.sigma(1), 2).to_sparse().specialize()
    cert = lin.annihilator_certificate([S])
    assert (cert.N, cert.k) == (2, 1)


def test_certificate_jordan_block():
    cert = lin.annihilator_certificate([[[1, 1], [0, 1]]])
    assert (cert.N, cert.k) == (1, 2)


def test_certificate_from_commutator():
    A = lin.iota_element(hz.gen_a(1, 1), 3).to_sparse().specialize()
    B = lin.iota_element(hz.gen_b(1, 1), 3).to_sparse().specialize()
    cert = lin.annihilator_certificate([A, B])
    M = sympy.Matrix(A) * sympy.Matrix(B) * sympy.Matrix(A).inv() * sympy.Matrix(B).inv()
    assert ((M ** cert.N - sympy.eye(M.rows)) ** cert.k).is_zero_matrix


def test_certificate_refuses_non_cyclotomic():
    with pytest.raises(lin.CertificateError):
        lin.annihilator_certificate([[[2, 1], [1, 1]]])
