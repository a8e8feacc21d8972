"""Burau and Gassner through Fox calculus, Lawrence local systems and H_g.

Matrices follow the Fox convention Mat(β)[i][j] = ∂β(x_j)/∂x_i, abelianized;
a braid word acts as φ_{b_1 b_2} = φ_{b_1} ∘ φ_{b_2}.  Transposing (or
inverting) relates this to other conventions in the literature.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from . import heisenberg as hz
from .heisenberg import HeisenbergElement
from .ring import LaurentRing, Monomial, RingElement
from .words import (
    DiskLocalSystem,
    FreeWord,
    SurfaceBraidWord,
    artin_action,
    artin_generator_images,
    eval_disk,
    eval_heisenberg,
    fox_derivative,
    separating_word,
)


# ------------------------------------------------------------------ braid words

def parse_braid(text: str, k: int) -> tuple:
    """``s1 s2 S1`` → (1, 2, -1); uppercase is inverse, ``s1^3`` repeats."""
    from .words import _parse_letters
    from .heisenberg import ParseError

    out = []
    for kind, i, e, pos in _parse_letters(text, "s"):
        if not 1 <= i <= k - 1:
            raise ParseError(f"σ_{i} out of range for {k} strands", text, pos)
        out.extend([i if e > 0 else -i] * abs(e))
    return tuple(out)


def braid_permutation(b: Sequence[int], k: int) -> tuple:
    """p with φ_b(x_j) conjugate to x_{p[j]} (0-based)."""
    p = list(range(k))
    for i in reversed(tuple(b)):
        j = abs(i) - 1
        # φ_{σ}: x_j ↦ conj of x_{j+1}, x_{j+1} ↦ x_j; compose on the left
        swap = list(range(k))
        swap[j], swap[j + 1] = j + 1, j
        p = [swap[v] for v in p]
    return tuple(p)


def is_pure(b: Sequence[int], k: int) -> bool:
    return braid_permutation(b, k) == tuple(range(k))


# ------------------------------------------------------------------ Fox matrices

def _abelianize(x: RingElement, L: LaurentRing, single: bool) -> RingElement:
    acc: dict = {}
    for w, c in x.terms.items():
        sums = w.exponent_sums()
        exps = (sum(sums),) if single else sums
        mono = Monomial(tuple(exps), L.names)
        acc[mono] = acc.get(mono, 0) + c
    return RingElement(acc, L.unit)


def fox_jacobian(images: Sequence[FreeWord], L: LaurentRing, single: bool):
    """[i][j] = ab(∂images[j]/∂x_i)."""
    k = len(images)
    return [[_abelianize(fox_derivative(images[j], i + 1), L, single) for j in range(k)] for i in range(k)]


def _matmul(A, B):
    zero = A[0][0].zero()
    out = []
    for i in range(len(A)):
        row = []
        for j in range(len(B[0])):
            acc = zero
            for l in range(len(B)):
                if A[i][l].terms and B[l][j].terms:
                    acc = acc + A[i][l] * B[l][j]
            row.append(acc)
        out.append(row)
    return out


def _identity(L: LaurentRing, k: int):
    return [[L.const(int(i == j)) for j in range(k)] for i in range(k)]


T_RING = LaurentRing(["t"])


def adjoint(M):
    """Conjugate transpose (a_ij)* = ā_ji with t ↦ t⁻¹; reverses products."""
    return [[M[j][i].anti_involution() for j in range(len(M))] for i in range(len(M[0]))]


def burau_unreduced(b: Sequence[int], k: int, anti: bool = False):
    M = _identity(T_RING, k)
    for i in b:
        M = _matmul(M, fox_jacobian(artin_generator_images(k, i), T_RING, True))
    return adjoint(M) if anti else M


def burau_from_images(b: Sequence[int], k: int):
    """Same matrix from the Fox derivatives of the full images φ_b(x_j)."""
    imgs = [artin_action(b, FreeWord.gen(k, j)) for j in range(1, k + 1)]
    return fox_jacobian(imgs, T_RING, True)


def reduce_burau(M):
    """Restrict to the invariant submodule spanned by w_i = e_i − e_{i+1}."""
    k = len(M)
    R = [[None] * (k - 1) for _ in range(k - 1)]
    for j in range(k - 1):
        col = [M[i][j] - M[i][j + 1] for i in range(k)]
        partial = col[0].zero()
        for i in range(k - 1):
            partial = partial + col[i]
            R[i][j] = partial
    return R


def burau(b: Sequence[int], k: int, reduced: bool = True, anti: bool = False):
    M = burau_unreduced(b, k)
    if reduced:
        M = reduce_burau(M)
    return adjoint(M) if anti else M


def burau_reduced(b: Sequence[int], k: int, variant: str = "reduced"):
    return burau(b, k, reduced=(variant == "reduced"))


def gassner_ring(k: int) -> LaurentRing:
    return LaurentRing([f"t{i}" for i in range(1, k + 1)])


def _permute_vars(x: RingElement, p: Sequence[int], L: LaurentRing) -> RingElement:
    acc: dict = {}
    for mono, c in x.terms.items():
        exps = [0] * len(p)
        for j, e in enumerate(mono.exps):
            exps[p[j]] += e
        m = Monomial(tuple(exps), L.names)
        acc[m] = acc.get(m, 0) + c
    return RingElement(acc, L.unit)


def gassner(b: Sequence[int], k: int, check_pure: bool = True):
    """Crossed product of Fox Jacobians: G(φψ) = G(φ)·π_φ(G(ψ))."""
    if check_pure and not is_pure(b, k):
        raise ValueError("Gassner is defined on pure braids only")
    L = gassner_ring(k)
    G = _identity(L, k)
    perm = list(range(k))
    for i in b:
        J = fox_jacobian(artin_generator_images(k, i), L, False)
        J = [[_permute_vars(e, perm, L) for e in row] for row in J]
        G = _matmul(G, J)
        step = braid_permutation((i,), k)
        perm = [perm[step[j]] for j in range(k)]
    return G


def specialize_gassner(G):
    out = []
    for row in G:
        new = []
        for e in row:
            acc: dict = {}
            for mono, c in e.terms.items():
                m = Monomial((sum(mono.exps),), T_RING.names)
                acc[m] = acc.get(m, 0) + c
            new.append(RingElement(acc, T_RING.unit))
        out.append(new)
    return out


def at_t_equals_one(M) -> list:
    return [[e.augment() for e in row] for row in M]


def permutation_matrix(b: Sequence[int], k: int) -> list:
    p = braid_permutation(b, k)
    return [[int(i == p[j]) for j in range(k)] for i in range(k)]


def determinant(M):
    """Exact determinant by Laplace expansion (small sizes)."""
    n = len(M)
    if n == 1:
        return M[0][0]
    total = M[0][0].zero()
    for j in range(n):
        if M[0][j].is_zero():
            continue
        minor = [row[:j] + row[j + 1:] for row in M[1:]]
        term = M[0][j] * determinant(minor)
        total = total + (term if j % 2 == 0 else -term)
    return total


# ------------------------------------------------------------------ regions and local systems

REGIONS = ("S", "S_g", "V_2g")


def region_holes(region: str, g: int) -> int:
    if region == "S" or region == "S_g":
        return g
    if region == "V_2g":
        return 2 * g
    raise ValueError(f"invalid region {region!r}; expected one of {REGIONS}")


def hole_word(region: str, i: int, g: int) -> SurfaceBraidWord:
    """A loop in Σ_{g,1} going once counterclockwise around hole i of the region."""
    if not 1 <= i <= region_holes(region, g):
        raise ValueError(f"hole {i} out of range for region {region}")
    if region == "S":
        # c_i bounds the one-holed torus of handle i
        return separating_word(1, -1, g, first=i)
    if region == "S_g":
        return SurfaceBraidWord(g, 1, (("b", i, 1),))
    h = (i + 1) // 2
    a = SurfaceBraidWord(g, 1, (("a", h, 1),))
    if i % 2:
        return a
    # c_h d_h bounds handle h, so d_h = c_h^{-1} · (genus-1 separating loop)
    return a.inverse() * separating_word(1, -1, g, first=h)


def heisenberg_restriction(region: str, index: int | str, g: int) -> HeisenbergElement:
    """φ-image of a hole loop of the region, or σ for ``index == "exchange"``."""
    if index == "exchange":
        if region not in REGIONS:
            raise ValueError(f"invalid region {region!r}")
        return eval_heisenberg(SurfaceBraidWord(g, 2, (("s", 1, 1),)))
    return eval_heisenberg(hole_word(region, int(index), g))


@dataclass(frozen=True)
class SubstitutionMap:
    """Images of s_1, …, s_k and σ in H_g (monomials of Z[H_g])."""

    g: int
    images: dict

    def apply(self, mono: Monomial) -> HeisenbergElement:
        out = hz.identity(self.g)
        for name, e in zip(mono.names, mono.exps):
            if e:
                out = out * (self.images[name] ** e)
        return out

    def perturbed(self, name: str, by: HeisenbergElement | None = None) -> "SubstitutionMap":
        imgs = dict(self.images)
        imgs[name] = imgs[name] * (by or hz.sigma(self.g, 2))
        return SubstitutionMap(self.g, imgs)


def standard_substitution(region: str, g: int) -> SubstitutionMap:
    """s ↦ σ^{-2} on S; s_i ↦ b_i on S_g; s_{2k−1} ↦ a_k, s_{2k} ↦ a_k^{-1}σ^{-2} on V_2g."""
    k = region_holes(region, g)
    imgs = {"sigma": hz.sigma(g)}
    for i in range(1, k + 1):
        if region == "S":
            imgs[f"s{i}"] = hz.sigma(g, -2)
        elif region == "S_g":
            imgs[f"s{i}"] = hz.gen_b(g, i)
        else:
            h = (i + 1) // 2
            imgs[f"s{i}"] = hz.gen_a(g, h) if i % 2 else hz.gen_a(g, h, -1) * hz.sigma(g, -2)
    return SubstitutionMap(g, imgs)


def translate(word: Sequence[tuple], region: str, g: int, n: int) -> SurfaceBraidWord:
    """Disk word (h_i loops, s_j exchanges) → word in π_{n,g} through the region."""
    letters: tuple = ()
    for kind, i, e in word:
        if kind == "h":
            w = hole_word(region, i, g) ** e
            letters += w.letters
        else:
            letters += (("s", i, 1 if e > 0 else -1),) * abs(e)
    return SurfaceBraidWord(g, max(n, 2), letters)


def default_diagrams(k: int, n: int = 2) -> list:
    """Small diagram set: signed points carrying single generators and their pairs."""
    gens = [(("h", i, 1),) for i in range(1, k + 1)] + [(("s", j, 1),) for j in range(1, n)]
    out = []
    for a, b in combinations(gens, 2):
        out.append([(1, a), (-1, b), (1, a + b), (-1, b + a + a)])
    if not out:
        out = [[(1, g)] for g in gens]
    return out


def substitution_check(L: DiskLocalSystem, sub: SubstitutionMap, region: str, n: int = 2, diagrams=None) -> dict:
    g = sub.g
    k = region_holes(region, g)
    if L.k != k:
        raise ValueError(f"region {region} has {k} holes but the local system has {L.k}")
    mismatches = []
    names = list(L.ring.names)
    imgs = [sub.images[nm] for nm in names]
    for x, y in combinations(range(len(imgs)), 2):
        if hz.commutator(imgs[x], imgs[y]) != hz.identity(g):
            mismatches.append({"generator": f"{names[x]},{names[y]}", "reason": "images do not commute"})
    gens = [(f"hole {i}", (("h", i, 1),), i) for i in range(1, k + 1)]
    gens += [(f"exchange {j}", (("s", j, 1),), "exchange") for j in range(1, max(n, 2))]
    for label, word, idx in gens:
        got = sub.apply(eval_disk(word, L))
        want = heisenberg_restriction(region, idx, g)
        if got != want:
            mismatches.append({"generator": label, "substituted": str(got), "expected": str(want)})
    for d in diagrams if diagrams is not None else default_diagrams(k, max(n, 2)):
        lhs = hz.ring_const(g, 0)
        rhs = hz.ring_const(g, 0)
        for sign, word in d:
            lhs = lhs + hz.involution_sigma_neg(hz.ring(sub.apply(eval_disk(word, L))) * sign)
            rhs = rhs + hz.involution_sigma_neg(hz.ring(eval_heisenberg(translate(word, region, g, n))) * sign)
        if lhs != rhs:
            mismatches.append({"generator": "pairing", "substituted": str(lhs), "expected": str(rhs)})
    return {"region": region, "passed": not mismatches, "mismatches": mismatches}


# ------------------------------------------------------------------ subgroup actions

@dataclass(frozen=True)
class SubgroupActionRecord:
    name: str
    M: tuple
    l: tuple
    kind: str = "G"  # "G": f(a_i) = a_i b^{m^i}; "V": f(b_i) = b_i a^{m^i} σ^{l_i}

    def __post_init__(self):
        M = tuple(tuple(r) for r in self.M)
        object.__setattr__(self, "M", M)
        object.__setattr__(self, "l", tuple(self.l))
        if any(M[i][j] != M[j][i] for i in range(len(M)) for j in range(len(M))):
            raise ValueError(f"M({self.name}) must be symmetric")


def _E(g: int, pairs) -> tuple:
    M = [[0] * g for _ in range(g)]
    for i, j in pairs:
        M[i - 1][j - 1] += 1
    return tuple(map(tuple, M))


def half_surface_generators(g: int) -> dict:
    """Twists along c_i and t_{i,j}, the generators of G_g."""
    out = {}
    for i in range(1, g + 1):
        out[f"c{i}"] = SubgroupActionRecord(f"c{i}", _E(g, [(i, i)]), (0,) * g)
    for i in range(1, g + 1):
        for j in range(i + 1, g + 1):
            out[f"t{i},{j}"] = SubgroupActionRecord(
                f"t{i},{j}", _E(g, [(i, j), (j, i), (i, i), (j, j)]), (0,) * g
            )
    return out


def subgroup_Mf(word: Sequence[tuple], g: int, records: dict | None = None) -> tuple:
    """Additive (M, l) of a twist word; commutators map to zero."""
    recs = dict(half_surface_generators(g))
    recs.update(records or {})
    M = [[0] * g for _ in range(g)]
    l = [0] * g
    for name, e in word:
        if name not in recs:
            raise KeyError(f"unknown generator {name!r}")
        rec = recs[name]
        for i in range(g):
            l[i] += e * rec.l[i]
            for j in range(g):
                M[i][j] += e * rec.M[i][j]
    return tuple(map(tuple, M)), tuple(l)


def subgroup_aut(M, l, kind: str = "G") -> hz.AutPlusElement:
    """The automorphism of H_g with f(a_i) = a_i b^{m^i} (kind G) or f(b_i) = b_i a^{m^i} σ^{l_i} (kind V)."""
    g = len(M)
    n = 2 * g
    S = [[int(i == j) for j in range(n)] for i in range(n)]
    Y = [0] * n
    for i in range(g):
        for j in range(g):
            if kind == "G":
                S[g + j][i] = M[i][j]  # a_i picks up b^{m^i}
            else:
                S[j][g + i] = M[i][j]  # b_i picks up a^{m^i}
        if kind == "G":
            Y[g + i] = -M[i][i]
        else:
            Y[i] = l[i] - M[i][i]
    return hz.AutPlusElement(tuple(Y), tuple(map(tuple, S)))


def word_aut(word: Sequence[tuple], g: int, records: dict | None = None) -> hz.AutPlusElement:
    """Composite automorphism of a twist word, generator by generator."""
    recs = dict(half_surface_generators(g))
    recs.update(records or {})
    out = hz.aut_identity(g)
    for name, e in word:
        rec = recs[name]
        f = subgroup_aut(rec.M, rec.l, rec.kind)
        for _ in range(abs(e)):
            out = out * (f if e > 0 else f.inverse())
    return out
