"""Words in surface braid groups and free groups, local-system evaluation, Fox calculus."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import heisenberg as hz
from .heisenberg import FULL, HeisenbergElement, ParseError, QuotientSpec
from .ring import LaurentRing, Monomial, RingElement

# letters are (kind, index, exponent) with kind in "abs" (s = σ_j)
Letter = tuple


def _parse_letters(text: str, kinds: str) -> list:
    letters = []
    for mt in re.finditer(r"\S+", text):
        tok, pos = mt.group(), mt.start()
        m = re.fullmatch(r"([A-Za-z])(\d+)(?:\^(-?\d+))?", tok)
        if not m or m.group(1).lower() not in kinds:
            raise ParseError(f"bad token {tok!r}", text, pos)
        e = int(m.group(3)) if m.group(3) else 1
        if m.group(1).isupper():
            e = -e
        letters.append((m.group(1).lower(), int(m.group(2)), e, pos))
    return letters


def _render(kind: str, i: int, e: int) -> str:
    base = kind.upper() if e < 0 else kind
    return f"{base}{i}" + ("" if abs(e) == 1 else f"^{abs(e)}")


@dataclass(frozen=True, slots=True)
class SurfaceBraidWord:
    """Word in α_i^{±1}, β_i^{±1}, σ_j^{±1}; letters are ("a"|"b"|"s", index, ±1)."""

    g: int
    n: int
    letters: tuple = ()

    def __post_init__(self):
        for kind, i, e in self.letters:
            limit = self.g if kind in "ab" else self.n - 1
            if kind not in ("a", "b", "s") or not 1 <= i <= limit or e not in (1, -1):
                raise ValueError(f"invalid letter {(kind, i, e)} for g={self.g}, n={self.n}")

    @classmethod
    def parse(cls, text: str, g: int, n: int = 1) -> "SurfaceBraidWord":
        out = []
        for kind, i, e, pos in _parse_letters(text, "abs"):
            limit = g if kind in "ab" else n - 1
            if not 1 <= i <= limit:
                raise ParseError(f"index {i} out of range for {kind}", text, pos)
            out.extend([(kind, i, 1 if e > 0 else -1)] * abs(e))
        return cls(g, n, tuple(out))

    def __mul__(self, other: "SurfaceBraidWord") -> "SurfaceBraidWord":
        if (self.g, self.n) != (other.g, other.n):
            raise ValueError("words live in different groups")
        return SurfaceBraidWord(self.g, self.n, self.letters + other.letters)

    def inverse(self) -> "SurfaceBraidWord":
        return SurfaceBraidWord(self.g, self.n, tuple((k, i, -e) for k, i, e in reversed(self.letters)))

    def __pow__(self, e: int) -> "SurfaceBraidWord":
        base = self if e >= 0 else self.inverse()
        return SurfaceBraidWord(self.g, self.n, base.letters * abs(e))

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        return " ".join(_render(k, i, e) for k, i, e in self.letters)


def commutator_word(x: SurfaceBraidWord, y: SurfaceBraidWord) -> SurfaceBraidWord:
    return x * y * x.inverse() * y.inverse()


def eval_heisenberg(w: SurfaceBraidWord, q: QuotientSpec = FULL) -> HeisenbergElement:
    """φ: α_i ↦ a_i, β_i ↦ b_i, σ_j ↦ σ, collected letter by letter."""
    g = w.g
    m = [0] * g
    n = [0] * g
    l = 0
    for kind, i, e in w.letters:
        if kind == "a":
            # pushing a_i^e left past the b's collected so far
            l -= 2 * n[i - 1] * e
            m[i - 1] += e
        elif kind == "b":
            n[i - 1] += e
        else:
            l += e
    return hz.reduce(HeisenbergElement(g, tuple(m), tuple(n), l), q)


def separating_word(k: int, eps: int, g: int | None = None, first: int = 1) -> SurfaceBraidWord:
    """([α_f^{-1},β_f^{-1}] ⋯ [α_{f+k-1}^{-1},β_{f+k-1}^{-1}])^ε, a separating curve of genus k."""
    g = g if g is not None else max(k, 1)
    if eps not in (1, -1):
        raise ValueError("eps must be ±1")
    if k < 0 or first + k - 1 > g:
        raise ValueError(f"genus {k} block starting at handle {first} does not fit in genus {g}")
    letters = []
    for i in range(first, first + k):
        letters += [("a", i, -1), ("b", i, -1), ("a", i, 1), ("b", i, 1)]
    w = SurfaceBraidWord(g, 1, tuple(letters))
    return w if eps == 1 else w.inverse()


# ------------------------------------------------------------------ free groups

def _free_reduce(letters: Iterable[int]) -> tuple:
    out: list = []
    for x in letters:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


@dataclass(frozen=True, slots=True)
class FreeWord:
    """Freely reduced word; letters are ±i for x_i^{±1}."""

    rank: int
    letters: tuple = ()

    def __post_init__(self):
        if any(x == 0 or abs(x) > self.rank for x in self.letters):
            raise ValueError(f"letter out of range for rank {self.rank}: {self.letters}")
        object.__setattr__(self, "letters", _free_reduce(self.letters))

    @classmethod
    def gen(cls, rank: int, i: int) -> "FreeWord":
        return cls(rank, (i,))

    @classmethod
    def parse(cls, text: str, rank: int) -> "FreeWord":
        out = []
        for kind, i, e, pos in _parse_letters(text, "x"):
            if not 1 <= i <= rank:
                raise ParseError(f"index {i} out of range", text, pos)
            out.extend([i if e > 0 else -i] * abs(e))
        return cls(rank, tuple(out))

    def __mul__(self, other: "FreeWord") -> "FreeWord":
        return FreeWord(self.rank, self.letters + other.letters)

    def inverse(self) -> "FreeWord":
        return FreeWord(self.rank, tuple(-x for x in reversed(self.letters)))

    def __pow__(self, e: int) -> "FreeWord":
        base = self if e >= 0 else self.inverse()
        return FreeWord(self.rank, base.letters * abs(e))

    def sort_key(self):
        return (len(self.letters), self.letters)

    def is_identity(self) -> bool:
        return not self.letters

    def exponent_sums(self) -> tuple:
        out = [0] * self.rank
        for x in self.letters:
            out[abs(x) - 1] += 1 if x > 0 else -1
        return tuple(out)

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        if not self.letters:
            return "1"
        return " ".join(f"x{abs(x)}" if x > 0 else f"X{-x}" for x in self.letters)


def free_ring(w: FreeWord, c: int = 1) -> RingElement:
    return RingElement({w: c}, FreeWord(w.rank))


def fox_derivative(w: FreeWord, i: int) -> RingElement:
    """∂w/∂x_i with ∂(uv) = ∂u + u∂v, ∂x_i = 1, ∂x_i^{-1} = −x_i^{-1}."""
    if not 1 <= i <= w.rank:
        raise ValueError(f"generator {i} out of range")
    acc: dict = {}
    prefix: list = []
    for x in w.letters:
        if x == i:
            h = FreeWord(w.rank, tuple(prefix))
            acc[h] = acc.get(h, 0) + 1
        elif x == -i:
            h = FreeWord(w.rank, tuple(prefix) + (x,))
            acc[h] = acc.get(h, 0) - 1
        prefix.append(x)
    return RingElement(acc, FreeWord(w.rank))


def substitute(w: FreeWord, images: Sequence[FreeWord]) -> FreeWord:
    """Apply the endomorphism x_i ↦ images[i-1]."""
    rank = images[0].rank
    out: list = []
    for x in w.letters:
        img = images[abs(x) - 1]
        out.extend(img.letters if x > 0 else img.inverse().letters)
    return FreeWord(rank, tuple(out))


def artin_generator_images(k: int, i: int) -> list:
    """Images of x_1..x_k under σ_i^{±1} (i signed)."""
    j = abs(i)
    if not 1 <= j <= k - 1:
        raise ValueError(f"σ_{j} out of range for {k} strands")
    imgs = [FreeWord.gen(k, t) for t in range(1, k + 1)]
    xj, xk = imgs[j - 1], imgs[j]
    if i > 0:
        imgs[j - 1], imgs[j] = xj * xk * xj.inverse(), xj
    else:
        imgs[j - 1], imgs[j] = xk, xk.inverse() * xj * xk
    return imgs


def artin_action(b: Sequence[int], w: FreeWord) -> FreeWord:
    """φ_b(w) with φ_{b1 b2} = φ_{b1} ∘ φ_{b2}: letters act right to left."""
    for i in reversed(tuple(b)):
        w = substitute(w, artin_generator_images(w.rank, i))
    return w


# --------------------------------------------------------- holed-disk local system

class DiskLocalSystem:
    """Abelian local system on configurations in a disk with k holes.

    Loops around hole i map to s_i, strand exchanges to σ.
    """

    def __init__(self, k: int):
        if k < 0:
            raise ValueError("number of holes must be nonnegative")
        self.k = k
        self.ring = LaurentRing([f"s{i}" for i in range(1, k + 1)] + ["sigma"])

    def parse(self, text: str, n: int = 2) -> tuple:
        """Words over ``h_i`` (loop around hole i) and ``s_j`` (exchange j, j+1)."""
        out = []
        for kind, i, e, pos in _parse_letters(text, "hs"):
            limit = self.k if kind == "h" else n - 1
            if not 1 <= i <= limit:
                raise ParseError(f"index {i} out of range for {kind}", text, pos)
            out.append((kind, i, e))
        return tuple(out)


def eval_disk(w: Sequence[tuple], L: DiskLocalSystem) -> Monomial:
    exps = [0] * (L.k + 1)
    for kind, i, e in w:
        if kind == "h":
            if not 1 <= i <= L.k:
                raise ValueError(f"hole {i} out of range")
            exps[i - 1] += e
        elif kind == "s":
            exps[-1] += e
        else:
            raise ValueError(f"unknown letter {kind!r}")
    return Monomial(tuple(exps), L.ring.names)
