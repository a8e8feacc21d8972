from __future__ import annotations

from hypothesis import settings
from hypothesis import strategies as st

from heisrep import heisenberg as hz
from heisrep.words import FreeWord, SurfaceBraidWord

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


def elements(g: int, bound: int = 5):
    ints = st.integers(-bound, bound)
    return st.builds(
        lambda m, n, l: hz.HeisenbergElement(g, tuple(m), tuple(n), l),
        st.lists(ints, min_size=g, max_size=g),
        st.lists(ints, min_size=g, max_size=g),
        st.integers(-4 * bound, 4 * bound),
    )


def surface_words(g: int, n: int = 1, max_len: int = 20):
    kinds = ["a", "b"] + (["s"] if n > 1 else [])
    letter = st.tuples(
        st.sampled_from(kinds), st.integers(1, g), st.sampled_from([1, -1])
    ).map(lambda t: (t[0], 1 if t[0] == "s" else t[1], t[2]))
    if n > 2:
        letter = st.one_of(letter, st.tuples(st.just("s"), st.integers(1, n - 1), st.sampled_from([1, -1])))
    return st.lists(letter, max_size=max_len).map(lambda ls: SurfaceBraidWord(g, n, tuple(ls)))


def free_words(rank: int, max_len: int = 12):
    letter = st.integers(1, rank).flatmap(lambda i: st.sampled_from([i, -i]))
    return st.lists(letter, max_size=max_len).map(lambda ls: FreeWord(rank, tuple(ls)))


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(RESULTS):
        res = RESULTS[number]
        terminalreporter.write_line(f"{res.status.upper():4} {number:2d} {res.id:<20} {res.seconds:6.2f}s")
