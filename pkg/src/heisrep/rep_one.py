"""The one-point representation ρ₁: separating Dehn twists as twisted transvections.

Basis of H_1(Σ_{g,1}, ∂⁻; Z[G]) is [α_1], [β_1], …, [α_g], [β_g]; this is also
the free generating set x_1 = α_1, x_2 = β_1, … of π_1(Σ_{g,1}).  Classes are
row vectors and a mapping class f acts by v ↦ v·Mat(f) with
Mat(f)[j][i] = φ(∂f(x_j)/∂x_i), so words multiply left to right in
application order.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

from . import heisenberg as hz
from .heisenberg import FULL, HeisenbergElement, QuotientSpec
from .pairing import IntersectionDiagram1, Point, pair_1pt
from .ring import RingElement
from .words import FreeWord, SurfaceBraidWord, eval_heisenberg, fox_derivative, separating_word, substitute


# ------------------------------------------------------------------ conversions

def to_free(w: SurfaceBraidWord) -> FreeWord:
    if w.n != 1:
        raise ValueError("only one-point words are loops on the surface")
    letters = []
    for kind, i, e in w.letters:
        x = 2 * i - 1 if kind == "a" else 2 * i
        letters.append(x * e)
    return FreeWord(2 * w.g, tuple(letters))


def to_surface(w: FreeWord) -> SurfaceBraidWord:
    g = w.rank // 2
    letters = []
    for x in w.letters:
        i = (abs(x) + 1) // 2
        letters.append(("a" if abs(x) % 2 else "b", i, 1 if x > 0 else -1))
    return SurfaceBraidWord(g, 1, tuple(letters))


def phi(w: FreeWord, q: QuotientSpec = FULL) -> HeisenbergElement:
    return eval_heisenberg(to_surface(w), q)


def phi_ring(x: RingElement, g: int, q: QuotientSpec = FULL) -> RingElement:
    """Push a free-group-ring element to Z[H_g] (or its quotient)."""
    acc: dict = {}
    for w, c in x.terms.items():
        h = phi(w, q)
        acc[h] = acc.get(h, 0) + c
    return hz.ring(acc, q, g) if acc else hz.ring_const(g, 0, q)


# ------------------------------------------------------------------ vectors and matrices

@dataclass(frozen=True)
class HomologyClassVector:
    coords: tuple
    q: QuotientSpec = FULL

    @property
    def g(self) -> int:
        return len(self.coords) // 2

    def __add__(self, other: "HomologyClassVector") -> "HomologyClassVector":
        return HomologyClassVector(tuple(a + b for a, b in zip(self.coords, other.coords)), self.q)

    def __sub__(self, other):
        return HomologyClassVector(tuple(a - b for a, b in zip(self.coords, other.coords)), self.q)

    def scale(self, c: RingElement) -> "HomologyClassVector":
        """Left scalar multiplication c·v."""
        return HomologyClassVector(tuple(c * a for a in self.coords), self.q)

    def __eq__(self, other):
        return isinstance(other, HomologyClassVector) and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coords)

    def __str__(self):
        return "(" + ", ".join(str(c) for c in self.coords) + ")"


def basis_vector(g: int, j: int, q: QuotientSpec = FULL) -> HomologyClassVector:
    return HomologyClassVector(
        tuple(hz.ring_const(g, int(i == j), q) for i in range(2 * g)), q
    )


def fox_class(w: FreeWord, q: QuotientSpec = FULL) -> HomologyClassVector:
    """Lift of the loop w: coordinates φ(∂w/∂x_i)."""
    g = w.rank // 2
    return HomologyClassVector(
        tuple(phi_ring(fox_derivative(w, i), g, q) for i in range(1, w.rank + 1)), q
    )


def matmul(A, B):
    zero = A[0][0].zero()
    n, m = len(A), len(B[0])
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            acc = zero
            for k in range(len(B)):
                a, b = A[i][k], B[k][j]
                if a.terms and b.terms:
                    acc = acc + a * b
            row.append(acc)
        out.append(row)
    return out


def identity_matrix(g: int, q: QuotientSpec = FULL, size: int | None = None):
    size = size or 2 * g
    return [[hz.ring_const(g, int(i == j), q) for j in range(size)] for i in range(size)]


def is_identity(M) -> bool:
    return all(M[i][j] == int(i == j) for i in range(len(M)) for j in range(len(M)))


def act(v: HomologyClassVector, M) -> HomologyClassVector:
    zero = M[0][0].zero()
    out = []
    for i in range(len(M[0])):
        acc = zero
        for j, c in enumerate(v.coords):
            if c.terms and M[j][i].terms:
                acc = acc + c * M[j][i]
        out.append(acc)
    return HomologyClassVector(tuple(out), v.q)


def magnus_matrix(images: Sequence[FreeWord], q: QuotientSpec = FULL):
    """Mat(f)[j][i] = φ(∂f(x_j)/∂x_i) for f given by the images of the x_j."""
    g = images[0].rank // 2
    return [
        [phi_ring(fox_derivative(img, i), g, q) for i in range(1, img.rank + 1)] for img in images
    ]


# ------------------------------------------------------------------ curve data

FormalChain = dict  # symbol -> RingElement


@dataclass(frozen=True)
class SeparatingCurveData:
    """Data of a separating curve α of genus k, enough to act by τ_α.

    ``pairing_row[j]`` is ⟨α, e_j⟩ mod σ^{2k}; ``splitting[j]`` is the pair
    (ext_part, int_part) of formal chains of e_j and ``pairing_full[j]`` the
    untruncated ⟨α′, e_j⟩, both only needed for :func:`act_twist_full`.
    """

    name: str
    genus: int
    curve_class: HomologyClassVector
    pairing_row: tuple
    splitting: dict = field(default_factory=dict)
    pairing_full: tuple = ()
    word: FreeWord | None = None

    @property
    def g(self) -> int:
        return self.curve_class.g

    @property
    def q(self) -> QuotientSpec:
        return self.curve_class.q


def pairing_with(alpha: SeparatingCurveData, v: HomologyClassVector) -> RingElement:
    """⟨α, v⟩ = Σ_j v_j ⟨α, e_j⟩ (left linear in v)."""
    acc = hz.ring_const(alpha.g, 0, alpha.q)
    for vj, pj in zip(v.coords, alpha.pairing_row):
        if vj.terms and pj.terms:
            acc = acc + vj * pj
    return acc


def _check_quotient(alpha: SeparatingCurveData, v: HomologyClassVector):
    q = alpha.q
    if q != v.q:
        raise ValueError(f"quotient mismatch: {q} vs {v.q}")
    if q.kind != "mod_sigma_r" or (2 * alpha.genus) % q.r:
        raise ValueError(f"transvection formula needs σ^{2 * alpha.genus} = 1; quotient is {q}")


def act_twist_mod2k(alpha: SeparatingCurveData, v: HomologyClassVector, power: int = 1) -> HomologyClassVector:
    """τ_α^power(v) = v + power·⟨α, v⟩·[α] modulo σ^{2k} − 1."""
    _check_quotient(alpha, v)
    return v + alpha.curve_class.scale(pairing_with(alpha, v) * power)


def twist_matrix(alpha: SeparatingCurveData, power: int = 1):
    g, q = alpha.g, alpha.q
    return [list(act_twist_mod2k(alpha, basis_vector(g, j, q), power).coords) for j in range(2 * g)]


def twist_word_matrix(word: Sequence[tuple], catalog: dict):
    """Product of twist matrices in application order (leftmost applied first)."""
    mats = []
    for name, e in word:
        if name not in catalog:
            raise KeyError(f"curve {name!r} is not in the catalog")
        mats.append(twist_matrix(catalog[name], e))
    some = next(iter(catalog.values()))
    M = identity_matrix(some.g, some.q)
    for T in mats:
        M = matmul(M, T)
    return M


def kernel_certificate(word: Sequence[tuple], catalog: dict) -> dict:
    M = twist_word_matrix(word, catalog)
    return {"is_identity_on_basis": is_identity(M), "matrix": M}


def parse_twist_word(text: str) -> list:
    """``Ta Tb Ta^-1 Tb^-1`` → [("Ta", 1), ("Tb", 1), ("Ta", -1), ("Tb", -1)]."""
    out = []
    for tok in text.split():
        name, _, exp = tok.partition("^")
        out.append((name, int(exp) if exp else 1))
    return out


def commutator_word(x: str, y: str) -> list:
    return [(x, 1), (y, 1), (x, -1), (y, -1)]


# ------------------------------------------------------------------ full action

def _chain_add(a: FormalChain, b: FormalChain) -> FormalChain:
    out = dict(a)
    for k, v in b.items():
        out[k] = out[k] + v if k in out else v
    return {k: v for k, v in out.items() if not v.is_zero()}


def _chain_scale(c: RingElement, a: FormalChain) -> FormalChain:
    return {k: c * v for k, v in a.items() if not (c * v).is_zero()}


def act_twist_full(alpha: SeparatingCurveData, j: int) -> FormalChain:
    """ext_j + σ^{-2k}·int_j + ⟨α′, e_j⟩·[α] as a formal chain."""
    if j not in alpha.splitting or not alpha.pairing_full:
        raise KeyError(f"no splitting data for basis arc {j} of {alpha.name}")
    ext, intr = alpha.splitting[j]
    g = alpha.g
    s = hz.ring(hz.sigma(g, -2 * alpha.genus))
    out = _chain_add(ext, _chain_scale(s, intr))
    return _chain_add(out, _chain_scale(alpha.pairing_full[j], {"[alpha]": hz.ring_const(g, 1)}))


def collapse_chain(chain: FormalChain, alpha: SeparatingCurveData, q: QuotientSpec) -> HomologyClassVector:
    """Reduce coefficients by q, glue e_j^ext + e_j^int back into e_j, expand [α]."""
    g = alpha.g
    red = {k: hz.reduce_ring(v, q) for k, v in chain.items()}
    coords = [hz.ring_const(g, 0, q) for _ in range(2 * g)]
    pieces: dict = {}
    for sym, c in red.items():
        if c.is_zero():
            continue
        if sym == "[alpha]":
            cls = [hz.reduce_ring(x, q) for x in alpha.curve_class.coords]
            coords = [a + c * b for a, b in zip(coords, cls)]
        elif sym.startswith("e") and "." not in sym:
            idx = int(sym[1:])
            coords[idx] = coords[idx] + c
        else:
            base, part = sym.split(".")
            pieces.setdefault(int(base[1:]), {})[part] = c
    for idx, parts in pieces.items():
        ext, intr = parts.get("ext"), parts.get("int")
        if ext is None or intr is None or ext != intr:
            raise ValueError(f"pieces of e{idx} do not glue: {parts}")
        coords[idx] = coords[idx] + ext
    return HomologyClassVector(tuple(coords), q)


# ------------------------------------------------------------------ built-in catalog

def block_word(g: int, first: int, k: int) -> FreeWord:
    """∏_{i=first}^{first+k-1} [α_i^{-1}, β_i^{-1}] in F_{2g}."""
    return to_free(separating_word(k, 1, g, first))


def twist_images(c: FreeWord, inner: Iterable[int]) -> list:
    """Automorphism x ↦ c^{-1} x c on the generators of the enclosed handles."""
    inner = set(inner)
    rank = c.rank
    imgs = []
    for t in range(1, rank + 1):
        x = FreeWord.gen(rank, t)
        imgs.append(c.inverse() * x * c if t in inner else x)
    return imgs


def curve_from_block(name: str, g: int, first: int, k: int, q: QuotientSpec) -> SeparatingCurveData:
    """The separating curve enclosing handles first..first+k-1.

    Its class is the Fox lift of the boundary word c of the block.  An arc e_j
    through an enclosed handle crosses α twice, contributing −1 and +x_j, so
    ⟨α, e_j⟩ = φ(x_j) − 1; arcs through other handles miss α.
    """
    c = block_word(g, first, k)
    inner = [t for i in range(first, first + k) for t in (2 * i - 1, 2 * i)]
    row = []
    full = []
    splitting = {}
    s2k = hz.ring(hz.sigma(g, -2 * k), FULL)
    for t in range(1, 2 * g + 1):
        j = t - 1
        ej = {f"e{j}": hz.ring_const(g, 1, FULL)}
        if t in inner:
            diag = IntersectionDiagram1(g, (Point(-1, hz.identity(g)), Point(1, phi(FreeWord.gen(2 * g, t)))))
            # pair upstairs, then reduce: σ ↦ −σ needs an even modulus
            p_full = pair_1pt(diag, FULL)
            row.append(hz.reduce_ring(p_full, q))
            full.append(s2k * p_full)
            splitting[j] = ({}, ej)
        else:
            row.append(hz.ring_const(g, 0, q))
            full.append(hz.ring_const(g, 0, FULL))
            splitting[j] = (ej, {})
    return SeparatingCurveData(
        name=name,
        genus=k,
        curve_class=fox_class(c, q),
        pairing_row=tuple(row),
        splitting=splitting,
        pairing_full=tuple(full),
        word=c,
    )


def full_curve(curve: SeparatingCurveData) -> SeparatingCurveData:
    """The same curve with the class taken over the full group ring."""
    return SeparatingCurveData(
        curve.name, curve.genus, fox_class(curve.word, FULL), curve.pairing_full,
        curve.splitting, curve.pairing_full, curve.word,
    )


def kernel_pair(k: int, g: int | None = None) -> dict:
    """Two genus-2k curves whose interiors overlap in a genus-k bigon (g ≥ 3k)."""
    g = g or 3 * k
    if g < 3 * k:
        raise ValueError("the kernel pair needs g >= 3k")
    q = hz.mod_sigma(2 * k)
    return {
        "Ta": curve_from_block("Ta", g, 1, 2 * k, q),
        "Tb": curve_from_block("Tb", g, k + 1, 2 * k, q),
    }


def boundary_twist_images(g: int) -> list:
    c = block_word(g, 1, g)
    return twist_images(c, range(1, 2 * g + 1))


def twist_pairing_rows(images: Sequence[FreeWord]) -> list:
    """Diagram data for ⟨f(e_j), Γ†_i⟩: one point per occurrence of x_i^{±1} in f(x_j).

    A positive occurrence after the prefix u contributes (+1, u); a negative
    one contributes (−1, u x_i^{-1}).
    """
    rank = images[0].rank
    g = rank // 2
    rows = []
    for img in images:
        row = []
        for i in range(1, rank + 1):
            pts = []
            prefix: list = []
            for x in img.letters:
                if x == i:
                    pts.append(Point(1, to_surface(FreeWord(rank, tuple(prefix)))))
                elif x == -i:
                    pts.append(Point(-1, to_surface(FreeWord(rank, tuple(prefix) + (x,)))))
                prefix.append(x)
            row.append(IntersectionDiagram1(g, tuple(pts)))
        rows.append(row)
    return rows


def matrix_from_pairings(rows, q: QuotientSpec = FULL):
    """Assemble Mat(f) from ⟨f(e_j), dual_i⟩ given as diagrams or precomputed ring elements."""
    size = len(rows)
    if any(len(r) != size for r in rows):
        raise ValueError("incomplete pairing rows")
    out = []
    for row in rows:
        out.append([pair_1pt(e, q) if isinstance(e, IntersectionDiagram1) else hz.reduce_ring(e, q) for e in row])
    return out


def identity_rows(g: int, n: int, q: QuotientSpec = FULL) -> list:
    from .pairing import basis_compositions, dual_pairing

    B = basis_compositions(g, n)
    return [[dual_pairing(c, d, q) for d in B] for c in B]


def absolute_class(w: FreeWord, q: QuotientSpec = FULL) -> HomologyClassVector:
    """Lift of a loop in ker φ: a cycle, i.e. an absolute class."""
    if not phi(w, q).is_identity():
        raise ValueError(f"{w} does not lift to a closed loop")
    return fox_class(w, q)


# ------------------------------------------------------------------ infinite order

@dataclass(frozen=True)
class Witness:
    pairing: RingElement
    coefficients: tuple
    ok: bool
    message: str = ""


def infinite_order_witness(alpha: SeparatingCurveData, v: HomologyClassVector, n_max: int) -> Witness:
    """Coefficients λ_n with τ_α^n(v) = v + λ_n[α], checked against n·⟨α, v⟩."""
    c = pairing_with(alpha, v)
    self_pair = pairing_with(alpha, alpha.curve_class)
    lam = hz.ring_const(alpha.g, 0, alpha.q)
    w = v
    coeffs = []
    ok = True
    for n in range(1, n_max + 1):
        lam = lam + pairing_with(alpha, w)
        w = act_twist_mod2k(alpha, w)
        if w != v + alpha.curve_class.scale(lam) or lam != c * n:
            ok = False
        coeffs.append(lam)
    if c.is_zero():
        return Witness(c, tuple(coeffs), False, "no witness from this class: ⟨α, v⟩ = 0")
    if not self_pair.is_zero():
        ok = False
    return Witness(c, tuple(coeffs), ok)


# ------------------------------------------------------------------ JSON catalogs

def load_catalog(path, q: QuotientSpec | None = None) -> dict:
    with open(path) as fh:
        data = json.load(fh)
    return catalog_from_json(data, q)


def catalog_from_json(data: dict, q: QuotientSpec | None = None) -> dict:
    g = int(data["genus"])
    out = {}
    for name, entry in data["curves"].items():
        k = int(entry["genus"])
        r = entry.get("mod_sigma", data.get("mod_sigma", 2 * k))
        cq = q or hz.mod_sigma(int(r))
        if "block" in entry:
            first = int(entry["block"][0])
            out[name] = curve_from_block(name, g, first, k, cq)
        else:
            cls = tuple(hz.parse_ring(s, g, cq) for s in entry["curve_class"])
            row = tuple(hz.parse_ring(s, g, cq) for s in entry["pairing_row"])
            out[name] = SeparatingCurveData(name, k, HomologyClassVector(cls, cq), row)
    return out
