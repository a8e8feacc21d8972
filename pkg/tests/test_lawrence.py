from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from heisrep import heisenberg as hz
from heisrep import lawrence as lw
from heisrep.heisenberg import ParseError
from heisrep.suite import braid_relations, pure_generator
from heisrep.words import DiskLocalSystem


def braids(k: int, max_len: int = 8):
    return st.lists(st.integers(1, k - 1).flatmap(lambda i: st.sampled_from([i, -i])), max_size=max_len).map(tuple)


def test_reduced_burau_of_generator():
    M = lw.burau((1,), 2)
    assert [[str(x) for x in row] for row in M] == [["-t"]]


def test_parse_braid():
    assert lw.parse_braid("s1 s2 S1", 4) == (1, 2, -1)
    assert lw.parse_braid("s2^3", 3) == (2, 2, 2)
    with pytest.raises(ParseError):
        lw.parse_braid("s1 s4", 4)


@pytest.mark.parametrize("k", [2, 3, 4])
def test_braid_relations(k):
    for lhs, rhs in braid_relations(k):
        for reduced in (True, False):
            assert lw.burau(lhs, k, reduced) == lw.burau(rhs, k, reduced)


@given(braids(4), braids(4))
def test_burau_is_multiplicative(b, c):
    for reduced in (True, False):
        assert lw.burau(b + c, 4, reduced) == lw._matmul(lw.burau(b, 4, reduced), lw.burau(c, 4, reduced))


@given(braids(4))
def test_t_equals_one_is_permutation(b):
    assert lw.at_t_equals_one(lw.burau(b, 4, False)) == lw.permutation_matrix(b, 4)


@given(braids(3, 6))
def test_determinant(b):
    det = lw.determinant(lw.burau(b, 3, False))
    e = sum(1 if x > 0 else -1 for x in b)
    assert det.is_monomial() and next(iter(det.terms)).exps == (e,)


@given(braids(4, 5), braids(4, 5))
def test_anti_involution_toggle_reverses_products(b, c):
    for reduced in (True, False):
        lhs = lw.burau(b + c, 4, reduced, anti=True)
        rhs = lw._matmul(lw.burau(c, 4, reduced, anti=True), lw.burau(b, 4, reduced, anti=True))
        assert lhs == rhs


def test_gassner_specializes_to_burau():
    for k in (2, 3, 4):
        for i in range(1, k):
            for j in range(i + 1, k + 1):
                w = pure_generator(i, j)
                assert lw.is_pure(w, k)
                assert lw.specialize_gassner(lw.gassner(w, k)) == lw.burau(w, k, False)


def test_gassner_rejects_non_pure():
    with pytest.raises(ValueError):
        lw.gassner((1,), 3)


@given(st.lists(st.tuples(st.integers(1, 2), st.integers(2, 3)).filter(lambda p: p[0] < p[1]), max_size=3),
       st.lists(st.tuples(st.integers(1, 2), st.integers(2, 3)).filter(lambda p: p[0] < p[1]), max_size=3))
def test_gassner_is_multiplicative_on_pure_braids(ps, qs):
    b = sum((pure_generator(i, j) for i, j in ps), ())
    c = sum((pure_generator(i, j) for i, j in qs), ())
    assert lw.gassner(b + c, 3) == lw._matmul(lw.gassner(b, 3), lw.gassner(c, 3))


@pytest.mark.parametrize("region", lw.REGIONS)
@pytest.mark.parametrize("g", [1, 2])
def test_substitutions_hold_and_detect_perturbations(region, g):
    L = DiskLocalSystem(lw.region_holes(region, g))
    sub = lw.standard_substitution(region, g)
    assert lw.substitution_check(L, sub, region, n=3)["passed"]
    for name in sub.images:
        assert not lw.substitution_check(L, sub.perturbed(name), region, n=3)["passed"]


def test_region_holes_and_images():
    assert lw.heisenberg_restriction("S", 1, 2) == hz.sigma(2, -2)
    assert lw.heisenberg_restriction("S_g", 2, 2) == hz.gen_b(2, 2)
    assert lw.heisenberg_restriction("V_2g", 2, 1) == hz.gen_a(1, 1, -1) * hz.sigma(1, -2)
    assert lw.heisenberg_restriction("V_2g", "exchange", 1) == hz.sigma(1)
    with pytest.raises(ValueError):
        lw.region_holes("T", 1)


@pytest.mark.parametrize("g", [2, 3])
def test_subgroup_generator_images(g):
    for name, rec in lw.half_surface_generators(g).items():
        f = lw.subgroup_aut(rec.M, rec.l)
        for i in range(1, g + 1):
            want = hz.gen_a(g, i)
            for j in range(1, g + 1):
                want = want * hz.gen_b(g, j, rec.M[i - 1][j - 1])
            assert f(hz.gen_a(g, i)) == want
            assert f(hz.gen_b(g, i)) == hz.gen_b(g, i)


def test_subgroup_V_kind_images():
    g = 2
    M, l = ((1, 1), (1, 2)), (3, -1)
    f = lw.subgroup_aut(M, l, "V")
    for i in range(1, g + 1):
        want = hz.gen_b(g, i)
        for j in range(1, g + 1):
            want = want * hz.gen_a(g, j, M[i - 1][j - 1])
        assert f(hz.gen_b(g, i)) == want * hz.sigma(g, l[i - 1])
        assert f(hz.gen_a(g, i)) == hz.gen_a(g, i)


def test_subgroup_record_must_be_symmetric():
    with pytest.raises(ValueError):
        lw.SubgroupActionRecord("bad", ((0, 1), (0, 0)), (0, 0))


@given(st.lists(st.tuples(st.sampled_from(["c1", "c2", "c3", "t1,2", "t1,3", "t2,3"]), st.integers(-2, 2)),
                max_size=6))
def test_subgroup_word_additivity_and_commutators(word):
    g = 3
    M, l = lw.subgroup_Mf(word, g)
    assert lw.word_aut(word, g) == lw.subgroup_aut(M, l)
    inv = [(n, -e) for n, e in reversed(word)]
    other = [("c1", 1), ("t2,3", -1)]
    comm = word + other + inv + [(n, -e) for n, e in reversed(other)]
    Mc, lc = lw.subgroup_Mf(comm, g)
    assert not any(map(any, Mc)) and not any(lc)
    assert lw.word_aut(comm, g).is_identity()
