from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from heisrep import heisenberg as hz
from heisrep.heisenberg import ParseError
from heisrep.words import (
    DiskLocalSystem,
    FreeWord,
    SurfaceBraidWord,
    artin_action,
    commutator_word,
    eval_disk,
    eval_heisenberg,
    fox_derivative,
    free_ring,
    separating_word,
)

from conftest import free_words, surface_words


def _letterwise(w: SurfaceBraidWord):
    out = hz.identity(w.g)
    for kind, i, e in w.letters:
        gen = {"a": hz.gen_a, "b": hz.gen_b}.get(kind)
        out = out * (gen(w.g, i, e) if gen else hz.sigma(w.g, e))
    return out


@given(surface_words(3, 3, 30))
def test_eval_matches_generator_products(w):
    assert eval_heisenberg(w) == _letterwise(w)


@given(surface_words(2, 2), surface_words(2, 2))
def test_eval_is_multiplicative(u, v):
    assert eval_heisenberg(u * v) == eval_heisenberg(u) * eval_heisenberg(v)
    assert eval_heisenberg(u.inverse()) == eval_heisenberg(u).inverse()


@pytest.mark.parametrize("g", range(1, 6))
def test_separating_words(g):
    for k in range(1, g + 1):
        for eps in (1, -1):
            assert eval_heisenberg(separating_word(k, eps, g)) == hz.sigma(g, 2 * eps * k)


def test_commutator_word():
    a = SurfaceBraidWord.parse("a1", 1)
    b = SurfaceBraidWord.parse("b1", 1)
    assert eval_heisenberg(commutator_word(a, b)) == hz.sigma(1, 2)


def test_parse_and_render():
    w = SurfaceBraidWord.parse("A1 B1 a1 b1 s1", 1, 2)
    assert str(w) == "A1 B1 a1 b1 s1"
    assert len(SurfaceBraidWord.parse("a1^3", 1)) == 3


@pytest.mark.parametrize("text,pos", [("a1 a4", 3), ("a1 s1", 3), ("a1 q1", 3), ("a1 a", 3)])
def test_parse_errors_carry_positions(text, pos):
    with pytest.raises(ParseError) as exc:
        SurfaceBraidWord.parse(text, 2, 1)
    assert exc.value.pos == pos


@given(free_words(4))
def test_fox_fundamental_identity(w):
    one = free_ring(FreeWord(4))
    total = one * 0
    for i in range(1, 5):
        total = total + fox_derivative(w, i) * (free_ring(FreeWord.gen(4, i)) - one)
    assert total == free_ring(w) - one


@given(free_words(3), free_words(3), st.integers(1, 3))
def test_fox_product_rule(u, v, i):
    assert fox_derivative(u * v, i) == fox_derivative(u, i) + free_ring(u) * fox_derivative(v, i)


@given(free_words(3), st.integers(1, 3), st.integers(0, 5))
def test_free_reduction_does_not_change_derivatives(w, i, cut):
    cut = min(cut, len(w))
    head = FreeWord(3, w.letters[:cut])
    tail = FreeWord(3, w.letters[cut:])
    x = FreeWord.gen(3, 2)
    padded = head * x * x.inverse() * tail
    assert fox_derivative(padded, i) == fox_derivative(w, i)


def test_artin_braid_relations():
    k = 4
    x = [FreeWord.gen(k, i) for i in range(1, k + 1)]
    for w in x:
        assert artin_action((1, 2, 1), w) == artin_action((2, 1, 2), w)
        assert artin_action((1, 3), w) == artin_action((3, 1), w)
        assert artin_action((2, -2), w) == w


@given(st.lists(st.integers(1, 3).flatmap(lambda i: st.sampled_from([i, -i])), max_size=8))
def test_artin_action_fixes_boundary_word(b):
    boundary = FreeWord(4, (1, 2, 3, 4))
    assert artin_action(tuple(b), boundary) == boundary


def test_disk_local_system():
    L = DiskLocalSystem(2)
    w = L.parse("h1 h2^-1 s1")
    mono = eval_disk(w, L)
    assert mono.exps == (1, -1, 1)
    with pytest.raises(ParseError):
        L.parse("h3")
