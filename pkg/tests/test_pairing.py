from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from heisrep import heisenberg as hz
from heisrep import pairing as pr
from heisrep.suite import fixture_names, fixture_path, load_fixture
from heisrep.words import separating_word

from conftest import elements


def diagrams_n(max_k: int = 4):
    return st.integers(1, max_k).flatmap(
        lambda k: st.builds(
            pr.NPointDiagram.from_upper,
            st.lists(st.integers(-3, 3), min_size=k, max_size=k),
            st.lists(st.integers(-2, 2), min_size=k * (k - 1) // 2, max_size=k * (k - 1) // 2),
        )
    )


def surface_loops(g: int):
    # loops of a single point only pick up σ through commutators, so l is even
    return elements(g, 3).map(lambda x: hz.HeisenbergElement(x.g, x.m, x.n, 2 * x.l))


def one_point(g: int = 2):
    pts = st.lists(st.builds(pr.Point, st.sampled_from([1, -1]), surface_loops(g)), max_size=8)
    return pts.map(lambda ps: pr.IntersectionDiagram1(g, tuple(ps)))


def test_empty_and_single_point():
    assert pr.pair_1pt(pr.IntersectionDiagram1(1)).is_zero()
    d = pr.IntersectionDiagram1(1, (pr.Point(1, hz.identity(1)),))
    assert pr.pair_1pt(d) == hz.ring_const(1, 1)


def test_sign_twist_on_odd_sigma_powers():
    d = pr.IntersectionDiagram1(1, (pr.Point(1, hz.sigma(1, 3)),))
    assert pr.pair_1pt(d) == hz.ring(hz.sigma(1, 3)) * -1


@given(one_point())
def test_augmentation_is_signed_count(d):
    got, want = pr.augmentation_check(d)
    assert got == want


@given(one_point(), one_point())
def test_pairing_is_additive_over_diagrams(c, d):
    assert pr.pair_1pt(c + d) == pr.pair_1pt(c) + pr.pair_1pt(d)


@given(one_point(), st.sampled_from([2, 4, 6]))
def test_pairing_commutes_with_reduction(d, r):
    q = hz.mod_sigma(r)
    assert pr.pair_1pt(d, q) == hz.reduce_ring(pr.pair_1pt(d), q)


def test_eight_point_kernel_fixture():
    data = load_fixture("kernel_genus6.json")
    d = pr.diagram_from_json(data)
    terms = [str(t) for t in pr.pairing_terms(d)]
    assert terms == data["expected_terms"]
    assert pr.pair_1pt(d).is_zero()


@pytest.mark.parametrize("name", fixture_names())
def test_fixtures_carry_anchor_and_load(name):
    data = load_fixture(name)
    assert data.get("anchor")
    if data.get("type") in ("one_point", "n_point"):
        pr.load_diagram(fixture_path(name))


@given(diagrams_n(), st.integers(1, 4))
def test_multinomial_route_matches_tuple_route(d, n):
    assert pr.pair_npt(d, n) == pr.pair_npt_tuples(d, n)


@given(diagrams_n(3))
def test_n_equal_one_is_the_one_point_pairing(d):
    pts = tuple(pr.Point((-1) ** j, hz.sigma(1, 2 * v)) for j, v in enumerate(d.n_j))
    assert pr.pair_npt(d, 1) == pr.pair_1pt(pr.IntersectionDiagram1(1, pts))


@given(st.lists(st.integers(-3, 3), min_size=1, max_size=4), st.integers(1, 4))
def test_npoint_augmentation_without_winding(nj, n):
    # with A = 0, ε of the sum is Σ over tuples of (−1)^{Σ i_j} = (Σ_i (−1)^i)^n
    d = pr.NPointDiagram.from_upper(nj, [0] * (len(nj) * (len(nj) - 1) // 2))
    assert pr.pair_npt(d, n).augment() == sum((-1) ** i for i in range(d.k)) ** n


def test_npoint_validates_A():
    with pytest.raises(ValueError):
        pr.NPointDiagram((0, 1), ((1, 0), (0, 0)))
    with pytest.raises(ValueError):
        pr.NPointDiagram((0, 1), ((0, 1), (2, 0)))


def test_bigon_vanishes_when_k_divides_d():
    for k in range(1, 5):
        q = hz.mod_sigma(2 * k)
        for d in (k, 2 * k, 3 * k):
            for n in range(1, 6):
                assert pr.pair_npt(pr.bigon(d), n, q).is_zero()


def test_bigon_survives_for_proper_divisors():
    # Z[σ]/(σ^{2k} − 1) has no nilpotents, so (1 − σ^{2d})^n ≠ 0 unless k | d
    q = hz.mod_sigma(4)
    for n in range(1, 6):
        val = pr.pair_npt(pr.bigon(1), n, q)
        assert val == (hz.ring_const(1, 1, q) - hz.ring(hz.sigma(1, 2), q)) ** n
        assert not val.is_zero()


def test_duality_gram_is_identity():
    for g in (1, 2, 3):
        for n in range(1, 5):
            if pr.basis_size(g, n) > 50:
                continue
            G = pr.gram_matrix(g, n)
            assert len(G) == pr.basis_size(g, n)
            for i, row in enumerate(G):
                for j, x in enumerate(row):
                    assert x == int(i == j)


def test_kernel_search_small_bounds():
    assert pr.kernel_search(1, 4) == []
    found = pr.kernel_search(2, 4, hz.mod_sigma(4), n=2)
    assert sorted(d.n_j for d in found) == [(0, -2), (0, 0), (0, 2)]


def test_kernel_search_full_finds_eight_point_patterns():
    found = pr.kernel_search(8, 4, limit=5, max_cost=10**7)
    assert found and all(pr.pair_1pt(d).is_zero() and len(d.points) > 0 for d in found)


def test_kernel_search_refuses_large_spaces():
    with pytest.raises(pr.SearchTooLarge) as exc:
        pr.kernel_search(12, 20)
    assert exc.value.estimate > 5_000_000


@given(one_point(1))
def test_json_round_trip(d):
    back = pr.diagram_from_json(pr.diagram_to_json(d))
    assert pr.pair_1pt(back) == pr.pair_1pt(d)


def test_loops_as_words():
    d = pr.IntersectionDiagram1(3, (pr.Point(1, separating_word(2, -1, 3)),))
    assert pr.pair_1pt(d) == hz.ring(hz.sigma(3, -4))
