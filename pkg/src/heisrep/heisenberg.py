"""The Heisenberg group H_g, its quotients, group rings and H_g ⋊ Aut⁺(H_g).

Elements are kept in the normal form ``a_1^m_1 ... a_g^m_g b_1^n_1 ... b_g^n_g σ^l``.
The relation is ``[a_i, b_i] = σ²``, i.e. ``a_i b_i = b_i a_i σ²``; moving a
``b_i`` to the right of an ``a_i`` therefore costs ``σ^-2``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .ring import RingElement


def _dot(u, v) -> int:
    return sum(x * y for x, y in zip(u, v))


@dataclass(frozen=True, slots=True)
class QuotientSpec:
    kind: str = "full"
    r: int | None = None

    def __post_init__(self):
        if self.kind not in ("full", "mod_sigma_r", "finite_r"):
            raise ValueError(f"unknown quotient kind {self.kind!r}")
        if self.kind != "full" and (self.r is None or self.r < 1):
            raise ValueError("quotients need r >= 1")

    def __call__(self, x):
        return reduce(x, self) if isinstance(x, HeisenbergElement) else x

    @property
    def reducer(self):
        return None if self.kind == "full" else self

    def __str__(self):
        if self.kind == "full":
            return "H_g"
        return f"{'mod σ' if self.kind == 'mod_sigma_r' else 'finite'}^{self.r}"


FULL = QuotientSpec()


def mod_sigma(r: int) -> QuotientSpec:
    return QuotientSpec("mod_sigma_r", r)


def finite(r: int) -> QuotientSpec:
    return QuotientSpec("finite_r", r)


@dataclass(frozen=True, slots=True)
class HeisenbergElement:
    g: int
    m: tuple
    n: tuple
    l: int = 0

    def __post_init__(self):
        if self.g < 1 or len(self.m) != self.g or len(self.n) != self.g:
            raise ValueError(f"bad shape for genus {self.g}: m={self.m}, n={self.n}")

    def __mul__(self, other: "HeisenbergElement") -> "HeisenbergElement":
        return multiply(self, other)

    def __pow__(self, e: int) -> "HeisenbergElement":
        out = identity(self.g)
        base = self if e >= 0 else self.inverse()
        for _ in range(abs(e)):
            out = multiply(out, base)
        return out

    def inverse(self) -> "HeisenbergElement":
        return inverse(self)

    def is_identity(self) -> bool:
        return self.l == 0 and not any(self.m) and not any(self.n)

    def is_central(self) -> bool:
        return not any(self.m) and not any(self.n)

    def sort_key(self):
        return (self.m, self.n, self.l)

    @property
    def vector(self) -> tuple:
        return self.m + self.n

    @property
    def sym(self) -> int:
        """Symmetric coordinate ``l + m·n``: the product becomes c + c' + ω(X, X')."""
        return self.l + _dot(self.m, self.n)

    def to_json(self) -> dict:
        return {"m": list(self.m), "n": list(self.n), "l": self.l}

    def __str__(self):
        bits = []
        for letter, exps in (("a", self.m), ("b", self.n)):
            for i, e in enumerate(exps, 1):
                if e:
                    bits.append(f"{letter}{i}" + ("" if e == 1 else f"^{e}"))
        if self.l:
            bits.append("s" + ("" if self.l == 1 else f"^{self.l}"))
        return " ".join(bits) if bits else "1"


def identity(g: int) -> HeisenbergElement:
    return HeisenbergElement(g, (0,) * g, (0,) * g, 0)


def sigma(g: int, power: int = 1) -> HeisenbergElement:
    return HeisenbergElement(g, (0,) * g, (0,) * g, power)


def gen_a(g: int, i: int, power: int = 1) -> HeisenbergElement:
    m = [0] * g
    m[i - 1] = power
    return HeisenbergElement(g, tuple(m), (0,) * g, 0)


def gen_b(g: int, i: int, power: int = 1) -> HeisenbergElement:
    n = [0] * g
    n[i - 1] = power
    return HeisenbergElement(g, (0,) * g, tuple(n), 0)


def from_vector(g: int, X: Sequence[int], l: int = 0) -> HeisenbergElement:
    return HeisenbergElement(g, tuple(X[:g]), tuple(X[g:]), l)


def from_sym(g: int, X: Sequence[int], c: int) -> HeisenbergElement:
    """Element with abelian image X and symmetric coordinate c."""
    m, n = tuple(X[:g]), tuple(X[g:])
    return HeisenbergElement(g, m, n, c - _dot(m, n))


def multiply(x: HeisenbergElement, y: HeisenbergElement) -> HeisenbergElement:
    if x.g != y.g:
        raise ValueError(f"genus mismatch: {x.g} vs {y.g}")
    # b^n a^m' = a^m' b^n σ^{-2 n·m'}
    return HeisenbergElement(
        x.g,
        tuple(p + q for p, q in zip(x.m, y.m)),
        tuple(p + q for p, q in zip(x.n, y.n)),
        x.l + y.l - 2 * _dot(x.n, y.m),
    )


def inverse(x: HeisenbergElement) -> HeisenbergElement:
    return HeisenbergElement(
        x.g, tuple(-v for v in x.m), tuple(-v for v in x.n), -x.l - 2 * _dot(x.n, x.m)
    )


def commutator(x: HeisenbergElement, y: HeisenbergElement) -> HeisenbergElement:
    return x * y * x.inverse() * y.inverse()


def omega(X: Sequence[int], Y: Sequence[int]) -> int:
    """Standard symplectic form ω(X, Y) = (JX)ᵀY = m·n' − n·m'."""
    g = len(X) // 2
    return _dot(X[:g], Y[g:]) - _dot(X[g:], Y[:g])


def reduce(x: HeisenbergElement, q: QuotientSpec) -> HeisenbergElement:
    if q.kind == "full":
        return x
    r = q.r
    if q.kind == "mod_sigma_r":
        l = x.l % r
        return x if l == x.l else HeisenbergElement(x.g, x.m, x.n, l)
    return HeisenbergElement(
        x.g, tuple(v % r for v in x.m), tuple(v % r for v in x.n), x.l % r
    )


# ---------------------------------------------------------------- group ring

def ring(x: HeisenbergElement | dict, q: QuotientSpec = FULL, g: int | None = None) -> RingElement:
    """Group-ring element from an element or a mapping element -> coefficient."""
    if isinstance(x, HeisenbergElement):
        terms, g = {x: 1}, x.g
    else:
        terms = dict(x)
        if g is None:
            g = next(iter(terms)).g
    return RingElement(terms, identity(g), q.reducer)


def ring_const(g: int, c: int, q: QuotientSpec = FULL) -> RingElement:
    return RingElement({identity(g): c}, identity(g), q.reducer)


def ring_add(x: RingElement, y: RingElement) -> RingElement:
    return x + y


def ring_mul(x: RingElement, y: RingElement) -> RingElement:
    return x * y


def augment(x: RingElement) -> int:
    return x.augment()


def involution_sigma_neg(x: RingElement) -> RingElement:
    """σ ↦ −σ: the term c·hσ^l picks up (−1)^l."""
    for h in x.terms:
        if x.reducer is not None and x.reducer.kind != "full" and x.reducer.r % 2:
            raise ValueError("σ ↦ −σ is not defined modulo an odd power of σ")
        break
    return x.signed(lambda h: h.l)


def reduce_ring(x: RingElement, q: QuotientSpec) -> RingElement:
    return x.reduce(q) if q.kind != "full" else x


# ------------------------------------------------------------- Aut⁺ and uncrossing

def _matvec(M, v):
    return tuple(_dot(row, v) for row in M)


def _matmul(A, B):
    cols = list(zip(*B))
    return tuple(tuple(_dot(row, c) for c in cols) for row in A)


def J_matrix(g: int) -> tuple:
    """J(X, Y) = (−Y, X) on Z^g ⊕ Z^g."""
    rows = []
    for i in range(2 * g):
        row = [0] * (2 * g)
        if i < g:
            row[g + i] = -1
        else:
            row[i - g] = 1
        rows.append(tuple(row))
    return tuple(rows)


def is_symplectic(M) -> bool:
    n = len(M)
    if n % 2 or any(len(row) != n for row in M):
        return False
    J = J_matrix(n // 2)
    Mt = tuple(zip(*M))
    return _matmul(_matmul(Mt, J), M) == J


@dataclass(frozen=True, slots=True)
class AutPlusElement:
    """Automorphism X ↦ MX, c ↦ c + ω(Y, MX) of H_g in symmetric coordinates.

    Equals ι(Y)ι(M) in the supra-tautological picture; σ is fixed.
    """

    Y: tuple
    M: tuple

    def __post_init__(self):
        M = tuple(tuple(int(v) for v in row) for row in self.M)
        object.__setattr__(self, "M", M)
        object.__setattr__(self, "Y", tuple(int(v) for v in self.Y))
        if len(self.Y) != len(M) or not is_symplectic(M):
            raise ValueError("symplectic part is not in Sp_2g(Z)")

    @property
    def g(self) -> int:
        return len(self.Y) // 2

    def __call__(self, x: HeisenbergElement) -> HeisenbergElement:
        return self.apply(x)

    def apply(self, x: HeisenbergElement) -> HeisenbergElement:
        X = _matvec(self.M, x.vector)
        return from_sym(x.g, X, x.sym + omega(self.Y, X))

    def __mul__(self, other: "AutPlusElement") -> "AutPlusElement":
        Y = tuple(a + b for a, b in zip(self.Y, _matvec(self.M, other.Y)))
        return AutPlusElement(Y, _matmul(self.M, other.M))

    def inverse(self) -> "AutPlusElement":
        g = self.g
        J = J_matrix(g)
        Jinv = tuple(tuple(-v for v in row) for row in J)
        Minv = _matmul(_matmul(Jinv, tuple(zip(*self.M))), J)
        return AutPlusElement(tuple(-v for v in _matvec(Minv, self.Y)), Minv)

    def is_identity(self) -> bool:
        return not any(self.Y) and self.M == aut_identity(self.g).M

    def sort_key(self):
        return (self.Y, self.M)

    def __str__(self):
        if self.is_identity():
            return "1"
        return f"(Y={list(self.Y)}, M={[list(r) for r in self.M]})"


def aut_identity(g: int) -> AutPlusElement:
    n = 2 * g
    return AutPlusElement((0,) * n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))


def translation(Y: Sequence[int]) -> AutPlusElement:
    return AutPlusElement(tuple(Y), aut_identity(len(Y) // 2).M)


def symplectic(M) -> AutPlusElement:
    return AutPlusElement((0,) * len(M), M)


@dataclass(frozen=True, slots=True)
class SemidirectElement:
    h: HeisenbergElement
    aut: AutPlusElement

    def __mul__(self, other: "SemidirectElement") -> "SemidirectElement":
        return SemidirectElement(self.h * self.aut.apply(other.h), self.aut * other.aut)

    def inverse(self) -> "SemidirectElement":
        a = self.aut.inverse()
        return SemidirectElement(a.apply(self.h.inverse()), a)

    def sort_key(self):
        return (self.h.sort_key(), self.aut.sort_key())

    def is_identity(self) -> bool:
        return self.h.is_identity() and self.aut.is_identity()

    def __str__(self):
        if self.aut.is_identity():
            return str(self.h)
        return f"[{self.h} | {self.aut}]"


def apply_aut_ring(x: RingElement, phi: AutPlusElement) -> RingElement:
    return x.map(phi.apply)


def apply_aut_matrix(mat, phi: AutPlusElement):
    return [[apply_aut_ring(e, phi) for e in row] for row in mat]


def embed_semidirect(x: RingElement, phi: AutPlusElement | None = None) -> RingElement:
    """Image of x·(1, φ) in Z[H_g ⋊ Aut⁺]."""
    g = x.one.g
    phi = phi or aut_identity(g)
    return RingElement(
        {SemidirectElement(h, phi): c for h, c in x.terms.items()},
        SemidirectElement(identity(g), aut_identity(g)),
    )


def uncross_matrix(matB, fstar: AutPlusElement):
    """Mat·(f_* I): each entry x becomes x·(1, f_*)."""
    size = len(matB)
    if any(len(row) != size for row in matB):
        raise ValueError("uncrossing needs a square matrix")
    return [[embed_semidirect(e, fstar) for e in row] for row in matB]


def is_untwisted(mat) -> bool:
    """True when every entry of an uncrossed matrix lies in Z[H_g]."""
    return all(h.aut.is_identity() for row in mat for e in row for h in e.terms)


# ---------------------------------------------------------------- text and JSON

_TOKEN = re.compile(r"\s*([aAbBsS])(\d*)(?:\^(-?\d+))?")


class ParseError(ValueError):
    def __init__(self, msg: str, text: str, pos: int):
        super().__init__(f"{msg} at position {pos}: {text!r}")
        self.pos = pos
        self.text = text


def parse_element(text: str, g: int) -> HeisenbergElement:
    """Parse ``a1^2 b3^-1 s^4`` (uppercase letters invert; ``s`` or ``s_j`` is σ)."""
    out = identity(g)
    pos = 0
    text_s = text.strip()
    if text_s in ("", "1"):
        return out
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        mt = _TOKEN.match(text, pos)
        if not mt:
            bad = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError("unexpected character", text, bad)
        letter, idx, exp = mt.groups()
        e = int(exp) if exp is not None else 1
        if letter.isupper():
            e = -e
        letter = letter.lower()
        if letter == "s":
            out = out * sigma(g, e)
        else:
            if not idx:
                raise ParseError(f"missing index after {letter!r}", text, mt.start(1))
            i = int(idx)
            if not 1 <= i <= g:
                raise ParseError(f"index {i} out of range for genus {g}", text, mt.start(2))
            out = out * (gen_a(g, i, e) if letter == "a" else gen_b(g, i, e))
        pos = mt.end()
    return out


def from_json(d: dict) -> HeisenbergElement:
    m, n = tuple(d["m"]), tuple(d["n"])
    return HeisenbergElement(len(m), m, n, int(d.get("l", 0)))


def parse_ring(text: str, g: int, q: QuotientSpec = FULL) -> RingElement:
    """Parse ``2*a1 b1 - s^2 + 1``; negative exponents must be written ``^-k``."""
    # protect exponent minus signs before splitting into terms
    safe = re.sub(r"\^-", "^~", text)
    out = ring_const(g, 0, q)
    for mt in re.finditer(r"([+-]?)\s*([^+-]+)", safe):
        sign = -1 if mt.group(1) == "-" else 1
        body = mt.group(2).strip().replace("^~", "^-")
        coeff = 1
        mc = re.match(r"^(\d+)\s*(\*\s*|$)(.*)$", body)
        if mc:
            coeff = int(mc.group(1))
            body = mc.group(3).strip()
        out = out + ring(parse_element(body, g), q) * (sign * coeff)
    return out
