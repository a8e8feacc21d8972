"""Twisted intersection pairings of arc diagrams.

A one-point diagram lists the intersection points of two arcs in the order
met along the first arc; each point carries a sign and a loop.  The n-point
diagrams only need the loop exponents n_j and the winding indices A_{j,j'}.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from math import comb, factorial, prod
from typing import Iterable, Iterator, Sequence

from . import heisenberg as hz
from .heisenberg import FULL, HeisenbergElement, QuotientSpec
from .ring import RingElement
from .words import SurfaceBraidWord, eval_heisenberg


@dataclass(frozen=True)
class Point:
    sign: int
    loop: HeisenbergElement | SurfaceBraidWord

    def value(self) -> HeisenbergElement:
        if isinstance(self.loop, SurfaceBraidWord):
            if self.loop.n != 1:
                raise ValueError("one-point loops live in π_{1,g}")
            return eval_heisenberg(self.loop)
        return self.loop


@dataclass(frozen=True)
class IntersectionDiagram1:
    g: int
    points: tuple = ()
    name: str = ""

    def __post_init__(self):
        for p in self.points:
            if p.sign not in (1, -1):
                raise ValueError(f"sign must be ±1, got {p.sign}")

    def __add__(self, other: "IntersectionDiagram1") -> "IntersectionDiagram1":
        return IntersectionDiagram1(self.g, self.points + other.points)

    def signed_count(self) -> int:
        return sum(p.sign for p in self.points)


def pairing_terms(d: IntersectionDiagram1, q: QuotientSpec = FULL) -> list:
    """Signed monomials sign·φ(δ_x)|_{σ=−σ}, one per point, in diagram order."""
    out = []
    for p in d.points:
        term = hz.ring(hz.reduce(p.value(), q), q) * p.sign
        out.append(hz.involution_sigma_neg(term))
    return out


def pair_1pt(d: IntersectionDiagram1, q: QuotientSpec = FULL) -> RingElement:
    total = hz.ring_const(d.g, 0, q)
    for t in pairing_terms(d, q):
        total = total + t
    return total


def augmentation_check(d: IntersectionDiagram1) -> tuple:
    """(ε(⟨d⟩), signed point count); the two agree for every diagram."""
    return pair_1pt(d).augment(), d.signed_count()


# ------------------------------------------------------------------ n points

@dataclass(frozen=True)
class NPointDiagram:
    """k intersection points with alternating signs (−1)^j, loops σ^{2n_j}, indices A."""

    n_j: tuple
    A: tuple
    name: str = ""

    def __post_init__(self):
        k = len(self.n_j)
        A = tuple(tuple(int(v) for v in row) for row in self.A)
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "n_j", tuple(int(v) for v in self.n_j))
        if k < 1 or len(A) != k or any(len(row) != k for row in A):
            raise ValueError("A must be a k×k matrix with k = len(n_j) >= 1")
        for i in range(k):
            if A[i][i]:
                raise ValueError("diagonal of A is unused and must be zero")
            for j in range(i):
                if A[i][j] != A[j][i]:
                    raise ValueError("A must be symmetric")

    @property
    def k(self) -> int:
        return len(self.n_j)

    @classmethod
    def from_upper(cls, n_j: Sequence[int], upper: Sequence[int], name: str = "") -> "NPointDiagram":
        k = len(n_j)
        A = [[0] * k for _ in range(k)]
        it = iter(upper)
        for i in range(k):
            for j in range(i + 1, k):
                A[i][j] = A[j][i] = next(it)
        return cls(tuple(n_j), tuple(map(tuple, A)), name)


def _sigma_poly(exps: dict, g: int, q: QuotientSpec) -> RingElement:
    return hz.ring({hz.sigma(g, e): c for e, c in exps.items()} or {hz.identity(g): 0}, q, g)


def _tuple_term(d: NPointDiagram, tup: Sequence[int]) -> tuple:
    """(coefficient sign, σ-exponent) of one tuple (i_1, …, i_n)."""
    wind = 0
    for j in range(len(tup)):
        row = d.A[tup[j]]
        for l in range(j):
            wind += row[tup[l]]
    sign = (-1) ** (sum(tup) + wind)
    return sign, 2 * sum(d.n_j[i] for i in tup) + wind


def pair_npt_tuples(d: NPointDiagram, n: int, q: QuotientSpec = FULL, g: int = 1) -> RingElement:
    """Streaming sum over all k^n tuples; reference route for :func:`pair_npt`."""
    acc: Counter = Counter()
    for tup in product(range(d.k), repeat=n):
        s, e = _tuple_term(d, tup)
        acc[e] += s
    return _sigma_poly(acc, g, q)


def compositions(total: int, parts: int) -> Iterator[tuple]:
    """Weak compositions of ``total`` into ``parts`` nonnegative parts, lexicographically descending."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def pair_npt(d: NPointDiagram, n: int, q: QuotientSpec = FULL, g: int = 1) -> RingElement:
    """Σ over tuples of (−1)^{Σ i_j} σ^{2Σ n_{i_j}} (−σ)^{Σ_{l<j} A_{i_l,i_j}}.

    Since A is symmetric with zero diagonal, a tuple's term only depends on how
    often each index occurs, so the sum runs over count vectors weighted by
    multinomial coefficients rather than over all k^n tuples.
    """
    if n < 1:
        raise ValueError("configuration size must be positive")
    k = d.k
    A = d.A
    upper = [(i, j, A[i][j]) for i in range(k) for j in range(i + 1, k) if A[i][j]]
    acc: Counter = Counter()
    for c, weight, parity in _count_vectors(n, k):
        wind = sum(c[i] * c[j] * a for i, j, a in upper)
        sign = -1 if (parity + wind) % 2 else 1
        acc[2 * sum(ci * nj for ci, nj in zip(c, d.n_j)) + wind] += sign * weight
    return _sigma_poly(acc, g, q)


@lru_cache(maxsize=None)
def _count_vectors(n: int, k: int) -> tuple:
    """(count vector, multinomial weight, parity of Σ i·c_i) for each composition."""
    nfact = factorial(n)
    return tuple(
        (c, nfact // prod(factorial(ci) for ci in c), sum(i * ci for i, ci in enumerate(c)) % 2)
        for c in compositions(n, k)
    )


def bigon(d: int) -> NPointDiagram:
    """Two arcs meeting twice around a genus-d bigon."""
    return NPointDiagram((0, d), ((0, 0), (0, 0)), name=f"bigon genus {d}")


# ------------------------------------------------------------------ duality

@dataclass(frozen=True, order=True)
class Composition:
    a: tuple
    b: tuple

    def __post_init__(self):
        if len(self.a) != len(self.b) or any(v < 0 for v in self.a + self.b):
            raise ValueError("a composition needs two nonnegative vectors of length g")

    @property
    def g(self) -> int:
        return len(self.a)

    @property
    def n(self) -> int:
        return sum(self.a) + sum(self.b)

    def arc_counts(self) -> tuple:
        """Points per basis arc in the order α_1, β_1, …, α_g, β_g."""
        return tuple(v for pair in zip(self.a, self.b) for v in pair)

    def __str__(self):
        return f"a={list(self.a)} b={list(self.b)}"


def basis_compositions(g: int, n: int) -> list:
    out = []
    for c in compositions(n, 2 * g):
        out.append(Composition(tuple(c[0::2]), tuple(c[1::2])))
    return out


def basis_size(g: int, n: int) -> int:
    return comb(2 * g + n - 1, n)


def _intersecting_configurations(c: Composition, dual: Composition) -> int:
    """Count the intersecting configurations of Γ(c) with Γ†(dual).

    Arc e of Γ carries c_e points; Γ† has dual_e parallel copies of the arc
    dual to e, each meeting arc e once and every other arc of Γ nowhere.  A
    configuration picks one intersection point on each dual copy such that
    arc e receives exactly c_e of them, with distinct points.
    """
    counts, dual_counts = c.arc_counts(), dual.arc_counts()
    total = 1
    for ce, de in zip(counts, dual_counts):
        # de copies each meet arc e in exactly one point: the only configuration
        # uses all de points, so the arc must carry exactly that many.
        total *= 1 if ce == de else 0
    return total


def dual_pairing(c: Composition, dual: Composition, q: QuotientSpec = FULL) -> RingElement:
    """⟨Γ(c), Γ†(c')⟩: each configuration contributes +1 (trivial loop, positive signs)."""
    if c.g != dual.g or c.n != dual.n:
        raise ValueError("compositions of different (g, n)")
    return hz.ring_const(c.g, _intersecting_configurations(c, dual), q)


def gram_matrix(g: int, n: int, q: QuotientSpec = FULL) -> list:
    B = basis_compositions(g, n)
    return [[dual_pairing(c, d, q) for d in B] for c in B]


# ------------------------------------------------------------------ search

class SearchTooLarge(ValueError):
    def __init__(self, estimate: int, limit: int):
        super().__init__(f"search space of about {estimate} diagrams exceeds the limit {limit}")
        self.estimate = estimate


def kernel_search(
    max_k: int,
    exponent_bound: int,
    q: QuotientSpec = FULL,
    n: int = 1,
    g: int = 1,
    max_cost: int = 5_000_000,
    limit: int | None = None,
) -> list:
    """All diagrams with k ≤ max_k points whose pairing vanishes.

    Points carry alternating signs starting at +1 and loops σ^{2n_j} with
    |2n_j| ≤ exponent_bound; the first exponent is normalized to 0 for n ≥ 2
    (a global unit does not affect vanishing).  For n = 1 the result is a list
    of one-point diagrams, otherwise of n-point diagrams with A = 0.
    """
    half = exponent_bound // 2
    values = range(-half, half + 1)
    width = len(values)
    estimate = sum(width ** (k - (1 if n > 1 else 0)) for k in range(1, max_k + 1))
    if estimate > max_cost:
        raise SearchTooLarge(estimate, max_cost)
    found = []
    for k in range(1, max_k + 1):
        if n == 1 and k % 2:
            continue  # alternating signs: the augmentation is 1 for odd k
        heads = [(0,)] if n > 1 else [()]
        tails = product(values, repeat=k - (1 if n > 1 else 0))
        zero = tuple([0] * k)
        # σ-exponents as seen in the quotient; the one-point pairing is a signed
        # sum of σ^{2v}, so it vanishes iff both signs carry the same multiset
        if q.kind == "full":
            key = lambda v: v
        elif q.kind == "mod_sigma_r":
            key = lambda v: (2 * v) % q.r
        else:
            key = None
        for tail in tails:
            nj = heads[0] + tail
            if n == 1:
                if key is not None and Counter(map(key, nj[0::2])) != Counter(map(key, nj[1::2])):
                    continue
                pts = tuple(Point((-1) ** j, hz.sigma(g, 2 * v)) for j, v in enumerate(nj))
                diag = IntersectionDiagram1(g, pts)
                if pair_1pt(diag, q).is_zero():
                    found.append(diag)
            else:
                diag = NPointDiagram(nj, tuple(zero for _ in range(k)))
                if pair_npt(diag, n, q, g).is_zero():
                    found.append(diag)
            if limit is not None and len(found) >= limit:
                return found
    return found


# ------------------------------------------------------------------ JSON

def diagram_from_json(data: dict, g: int | None = None):
    kind = data.get("type")
    if kind == "one_point":
        g = int(data.get("genus", g or 1))
        pts = []
        for i, p in enumerate(data.get("points", [])):
            sign = int(p["sign"])
            if "loop" in p:
                loop = SurfaceBraidWord.parse(p["loop"], g)
            elif "sigma_exp" in p:
                loop = hz.sigma(g, int(p["sigma_exp"]))
            elif "element" in p:
                loop = hz.from_json(p["element"])
            else:
                raise ValueError(f"point {i} has no loop data")
            pts.append(Point(sign, loop))
        return IntersectionDiagram1(g, tuple(pts), data.get("name", ""))
    if kind == "n_point":
        return NPointDiagram(tuple(data["n_j"]), tuple(map(tuple, data["A"])), data.get("name", ""))
    raise ValueError(f"unknown diagram type {kind!r}")


def diagram_to_json(d) -> dict:
    if isinstance(d, IntersectionDiagram1):
        pts = []
        for p in d.points:
            if isinstance(p.loop, SurfaceBraidWord):
                pts.append({"sign": p.sign, "loop": str(p.loop)})
            elif p.loop.is_central():
                pts.append({"sign": p.sign, "sigma_exp": p.loop.l})
            else:
                pts.append({"sign": p.sign, "element": p.loop.to_json()})
        return {"type": "one_point", "genus": d.g, "points": pts}
    return {"type": "n_point", "n_j": list(d.n_j), "A": [list(r) for r in d.A]}


def load_diagram(path, g: int | None = None):
    with open(path) as fh:
        return diagram_from_json(json.load(fh), g)
