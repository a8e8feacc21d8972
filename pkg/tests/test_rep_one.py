from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from heisrep import heisenberg as hz
from heisrep import rep_one as r1
from heisrep.heisenberg import FULL
from heisrep.suite import fixture_path
from heisrep.words import FreeWord, separating_word, substitute

from conftest import free_words


@pytest.mark.parametrize("k", [1, 2])
def test_kernel_pair_commutator_acts_trivially(k):
    cat = r1.kernel_pair(k)
    a, b = cat["Ta"], cat["Tb"]
    assert r1.pairing_with(a, b.curve_class).is_zero()
    assert r1.pairing_with(b, a.curve_class).is_zero()
    cert = r1.kernel_certificate(r1.commutator_word("Ta", "Tb"), cat)
    assert cert["is_identity_on_basis"]
    assert not r1.is_identity(r1.twist_word_matrix([("Ta", 1)], cat))


@pytest.mark.parametrize("g,first,k", [(2, 1, 1), (2, 2, 1), (3, 1, 2), (3, 2, 2), (4, 2, 2)])
def test_transvection_matches_fox_matrix(g, first, k):
    q = hz.mod_sigma(2 * k)
    alpha = r1.curve_from_block("T", g, first, k, q)
    images = r1.twist_images(r1.block_word(g, first, k), range(2 * first - 1, 2 * (first + k - 1) + 1))
    fox = r1.magnus_matrix(images, q)
    assert r1.twist_matrix(alpha) == fox
    assert r1.matrix_from_pairings(r1.twist_pairing_rows(images), q) == fox


@pytest.mark.parametrize("g,first,k", [(2, 1, 1), (3, 2, 2)])
def test_full_route_collapses_to_truncated_route(g, first, k):
    q = hz.mod_sigma(2 * k)
    alpha = r1.curve_from_block("T", g, first, k, q)
    for j in range(2 * g):
        chain = r1.act_twist_full(alpha, j)
        assert r1.collapse_chain(chain, alpha, q) == r1.act_twist_mod2k(alpha, r1.basis_vector(g, j, q))


def test_transvection_needs_matching_quotient():
    alpha = r1.curve_from_block("T", 2, 1, 1, hz.mod_sigma(2))
    with pytest.raises(ValueError):
        r1.act_twist_mod2k(alpha, r1.basis_vector(2, 0, FULL))


@given(free_words(4, 8))
def test_separating_twists_compose_by_matrix_product(w):
    g = 2
    c = r1.block_word(g, 1, 1)
    f = r1.twist_images(c, (1, 2))
    h = r1.twist_images(r1.block_word(g, 2, 1), (3, 4))
    fh = [substitute(substitute(FreeWord.gen(4, j), h), f) for j in range(1, 5)]
    # separating twists preserve φ, so the Fox matrices multiply plainly
    assert r1.magnus_matrix(fh) == r1.matmul(r1.magnus_matrix(h), r1.magnus_matrix(f))
    v = r1.fox_class(w)
    assert r1.act(v, r1.magnus_matrix(f)) == r1.fox_class(substitute(w, f))


def test_boundary_twist_scales_absolute_classes():
    g = 2
    M = r1.magnus_matrix(r1.boundary_twist_images(g))
    w = FreeWord(4, (1, 3, -1, -3))  # [α_1, α_2] lifts to a cycle
    v = r1.absolute_class(w)
    assert r1.act(v, M) == v.scale(hz.ring(hz.sigma(g, -2 * g)))


def test_absolute_class_rejects_open_arcs():
    with pytest.raises(ValueError):
        r1.absolute_class(FreeWord.gen(2, 1))


def test_infinite_order_witness():
    q = hz.mod_sigma(1)
    alpha = r1.curve_from_block("T", 3, 1, 2, q)
    w = r1.infinite_order_witness(alpha, r1.basis_vector(3, 0, q), 30)
    assert w.ok
    assert w.coefficients[-1] == w.pairing * 30
    none = r1.infinite_order_witness(alpha, r1.basis_vector(3, 5, q), 5)
    assert not none.ok and "no witness" in none.message


def test_catalog_from_fixture():
    cat = r1.load_catalog(fixture_path("kernel_pair_k2.json"))
    assert set(cat) == {"Ta", "Tb"}
    assert cat["Ta"].q == hz.mod_sigma(4)
    assert r1.kernel_certificate(r1.parse_twist_word("Ta Tb Ta^-1 Tb^-1"), cat)["is_identity_on_basis"]


def test_parse_twist_word():
    assert r1.parse_twist_word("Ta Tb^-1 Ta^2") == [("Ta", 1), ("Tb", -1), ("Ta", 2)]


def test_unknown_curve_in_word():
    with pytest.raises(KeyError):
        r1.twist_word_matrix([("Tz", 1)], r1.kernel_pair(1))


@given(st.integers(1, 3), st.sampled_from([1, -1]))
def test_separating_curve_value(k, eps):
    w = r1.to_free(separating_word(k, eps, 3))
    assert r1.phi(w) == hz.sigma(3, 2 * eps * k)
