"""Matrix linearizations of H_g, H_g ⋊ Aut⁺(H_g) and Z[H_{g,r}].

* tautological: H_g → GL_{g+2}(Q), upper unitriangular Heisenberg matrices;
* suprataut: H_g ⋊ Aut⁺ → GL_{2g+2}(Z);
* iota_r: Z[H_{g,r}] → End(V^{⊗(g+1)}) with V = Z^r and symbolic s_i, t_i.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import lcm

import numpy as np
import sympy

from . import heisenberg as hz
from .heisenberg import (
    AutPlusElement,
    HeisenbergElement,
    SemidirectElement,
    J_matrix,
    _matmul,
    _matvec,
)
from .ring import LaurentRing, Monomial, RingElement


# ---------------------------------------------------------------- tautological

def tautological_scaled(x: HeisenbergElement) -> np.ndarray:
    """D·T(x)·D⁻¹ with D = diag(2, 1, …, 1): first row (1, 2m, l + 2m·n).

    Conjugating by D clears the half-integers, so products stay integral.
    """
    g = x.g
    T = np.zeros((g + 2, g + 2), dtype=object)
    for i in range(g + 2):
        T[i, i] = 1
    for i in range(g):
        T[0, 1 + i] = 2 * x.m[i]
        T[1 + i, g + 1] = x.n[i]
    T[0, g + 1] = x.l + 2 * sum(a * b for a, b in zip(x.m, x.n))
    return T


def unscale(T: np.ndarray) -> tuple:
    """Undo the diagonal conjugation, returning rational entries."""
    size = T.shape[0]
    return tuple(
        tuple(Fraction(int(T[i, j]), 2) if i == 0 and j > 0 else Fraction(int(T[i, j])) for j in range(size))
        for i in range(size)
    )


def tautological(x: HeisenbergElement) -> tuple:
    """(g+2)×(g+2) rational matrix with first row (1, m, l/2 + m·n), last column (…, n, 1)."""
    return unscale(tautological_scaled(x))


def tautological_decode(T) -> HeisenbergElement:
    size = len(T)
    g = size - 2
    m = tuple(int(T[0][1 + i]) for i in range(g))
    n = tuple(int(T[1 + i][g + 1]) for i in range(g))
    l = Fraction(T[0][g + 1]) * 2 - 2 * sum(a * b for a, b in zip(m, n))
    return HeisenbergElement(g, m, n, int(l))


# ---------------------------------------------------------------- supra-tautological

def _identity(n: int) -> list:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def suprataut_heis(x: HeisenbergElement) -> tuple:
    """Block form [[1, (JX)ᵀ, c], [0, I, X], [0, 0, 1]] with c = l + m·n."""
    g = x.g
    X = x.vector
    JX = _matvec(J_matrix(g), X)
    A = _identity(2 * g + 2)
    for i in range(2 * g):
        A[0][1 + i] = JX[i]
        A[1 + i][2 * g + 1] = X[i]
    A[0][2 * g + 1] = x.sym
    return tuple(map(tuple, A))


def suprataut_translation(Y) -> tuple:
    n = len(Y)
    A = _identity(n + 2)
    for i in range(n):
        A[1 + i][n + 1] = Y[i]
    return tuple(map(tuple, A))


def suprataut_symplectic(M) -> tuple:
    n = len(M)
    if not hz.is_symplectic(M):
        raise ValueError("matrix is not symplectic")
    A = _identity(n + 2)
    for i in range(n):
        for j in range(n):
            A[1 + i][1 + j] = M[i][j]
    return tuple(map(tuple, A))


def suprataut(z) -> tuple:
    """ι(h)·ι(Y)·ι(M) for z = (h, (Y, M)); accepts bare elements of either factor."""
    if isinstance(z, HeisenbergElement):
        return suprataut_heis(z)
    if isinstance(z, AutPlusElement):
        return _matmul(suprataut_translation(z.Y), suprataut_symplectic(z.M))
    if isinstance(z, SemidirectElement):
        return _matmul(suprataut_heis(z.h), suprataut(z.aut))
    raise TypeError(f"cannot linearize {type(z).__name__}")


def suprataut_decode(A) -> SemidirectElement:
    """Recover z from ι(z); the three blocks above the diagonal determine it."""
    size = len(A)
    n = size - 2
    g = n // 2
    M = tuple(tuple(A[1 + i][1 + j] for j in range(n)) for i in range(n))
    col = tuple(A[1 + i][n + 1] for i in range(n))
    row = tuple(A[0][1 + j] for j in range(n))  # (JX)ᵀ M
    # ι(h)ι(Y)ι(M) has row (JX)ᵀM, column X + Y, corner c + (JX)ᵀY.
    Minv = hz.AutPlusElement((0,) * n, M).inverse().M
    JX = _matvec(tuple(zip(*Minv)), row)
    J = J_matrix(g)
    Jinv = tuple(tuple(-v for v in r) for r in J)
    X = _matvec(Jinv, JX)
    Y = tuple(c - x for c, x in zip(col, X))
    c = A[0][n + 1] - sum(a * b for a, b in zip(JX, Y))
    return SemidirectElement(hz.from_sym(g, X, c), AutPlusElement(Y, M))


# ---------------------------------------------------------------- iota_r

def iota_ring(g: int) -> LaurentRing:
    return LaurentRing([f"s{i}" for i in range(1, g + 1)] + [f"t{i}" for i in range(1, g + 1)])


@dataclass(frozen=True)
class MonomialOperator:
    """Monomial-scaled permutation of the basis e_j, j ∈ (Z/r)^{g+1}.

    ``images[j] = (target, coefficient)``; each column has one nonzero entry.
    """

    g: int
    r: int
    images: dict

    @property
    def dim(self) -> int:
        return self.r ** (self.g + 1)

    def __mul__(self, other: "MonomialOperator") -> "MonomialOperator":
        out = {}
        for j, (k, c) in other.images.items():
            k2, c2 = self.images[k]
            out[j] = (k2, c2 * c)
        return MonomialOperator(self.g, self.r, out)

    def __eq__(self, other):
        if isinstance(other, MonomialOperator):
            return self.images == other.images
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.images.items()))

    def is_identity(self) -> bool:
        return all(k == j and c.is_identity() for j, (k, c) in self.images.items())

    def to_sparse(self) -> "SparseOperator":
        L = iota_ring(self.g)
        return SparseOperator(self.g, self.r, {(k, j): L.element(c) for j, (k, c) in self.images.items()})


def basis(g: int, r: int) -> list:
    return list(product(range(r), repeat=g + 1))


def _gen_operator(g: int, r: int, kind: str, i: int, e: int) -> MonomialOperator:
    L = iota_ring(g)
    if kind == "s":
        coeff = L.unit
    elif kind == "a":
        coeff = L.monomial(**{f"s{i}": e})
    else:
        coeff = L.monomial(**{f"t{i}": e})
    out = {}
    for j in basis(g, r):
        k = list(j)
        if kind == "s":
            k[g] = (k[g] + e) % r
        elif kind == "a":
            k[g] = (k[g] + 2 * e * j[i - 1]) % r
        else:
            k[i - 1] = (k[i - 1] + e) % r
        out[j] = (tuple(k), coeff)
    return MonomialOperator(g, r, out)


def iota_generator(g: int, r: int, kind: str, i: int = 1, e: int = 1) -> MonomialOperator:
    """ι(σ^e), ι(a_i^e) or ι(b_i^e) from the three action rules."""
    if r < 2:
        raise ValueError("iota_r needs r >= 2")
    op = _gen_operator(g, r, kind, i, 1 if e >= 0 else -1)
    out = identity_operator(g, r)
    for _ in range(abs(e)):
        out = out * op
    return out


def identity_operator(g: int, r: int) -> MonomialOperator:
    L = iota_ring(g)
    return MonomialOperator(g, r, {j: (j, L.unit) for j in basis(g, r)})


def iota_element(x: HeisenbergElement, r: int) -> MonomialOperator:
    """ι(a^m b^n σ^l) = ι(a)^m ι(b)^n ι(σ)^l, composed generically."""
    g = x.g
    out = identity_operator(g, r)
    for i, e in enumerate(x.m, 1):
        if e:
            out = out * iota_generator(g, r, "a", i, e)
    for i, e in enumerate(x.n, 1):
        if e:
            out = out * iota_generator(g, r, "b", i, e)
    if x.l % r:
        out = out * iota_generator(g, r, "s", 1, x.l % r)
    return out


@dataclass(frozen=True)
class SparseOperator:
    """Sparse matrix over Laurent polynomials in s_i, t_i; entries[(row, col)]."""

    g: int
    r: int
    entries: dict

    def __post_init__(self):
        object.__setattr__(self, "entries", {k: v for k, v in self.entries.items() if not v.is_zero()})

    def __add__(self, other: "SparseOperator") -> "SparseOperator":
        out = dict(self.entries)
        for k, v in other.entries.items():
            out[k] = out[k] + v if k in out else v
        return SparseOperator(self.g, self.r, out)

    def __mul__(self, other):
        if isinstance(other, int):
            return SparseOperator(self.g, self.r, {k: v * other for k, v in self.entries.items()})
        rows: dict = {}
        for (i, k), v in self.entries.items():
            rows.setdefault(k, []).append((i, v))
        out: dict = {}
        for (k, j), w in other.entries.items():
            for i, v in rows.get(k, ()):
                key = (i, j)
                out[key] = out[key] + v * w if key in out else v * w
        return SparseOperator(self.g, self.r, out)

    def __eq__(self, other):
        if isinstance(other, SparseOperator):
            return self.entries == other.entries
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.entries.items()))

    def is_zero(self) -> bool:
        return not self.entries

    def to_dense(self, max_dim: int = 4096) -> list:
        """Dense matrix in the lexicographic basis order; refused above ``max_dim``."""
        idx = basis(self.g, self.r)
        if len(idx) > max_dim:
            raise ValueError(f"dense form has dimension {len(idx)} > {max_dim}")
        pos = {j: p for p, j in enumerate(idx)}
        zero = iota_ring(self.g).zero()
        M = [[zero] * len(idx) for _ in idx]
        for (i, j), v in self.entries.items():
            M[pos[i]][pos[j]] = v
        return M

    def specialize(self, values: dict | None = None) -> list:
        """Integer matrix with s_i, t_i set to integers (default all 1)."""
        idx = basis(self.g, self.r)
        pos = {j: p for p, j in enumerate(idx)}
        M = [[0] * len(idx) for _ in idx]
        for (i, j), v in self.entries.items():
            total = 0
            for mono, c in v.terms.items():
                term = Fraction(c)
                for name, e in zip(mono.names, mono.exps):
                    if e:
                        term *= Fraction((values or {}).get(name, 1)) ** e
                total += term
            M[pos[i]][pos[j]] = total
        return M


def iota_r(x, r: int) -> SparseOperator | MonomialOperator:
    """ι on a group element (monomial operator) or a ring element (sparse operator)."""
    if r < 2:
        raise ValueError("iota_r needs r >= 2")
    if isinstance(x, HeisenbergElement):
        return iota_element(x, r)
    g = x.one.g
    out = SparseOperator(g, r, {})
    for h, c in x.terms.items():
        out = out + iota_element(h, r).to_sparse() * c
    return out


# ---------------------------------------------------------------- certificate

class CertificateError(ValueError):
    pass


@dataclass(frozen=True)
class Certificate:
    N: int
    k: int
    orders: tuple
    charpoly: str
    multiplicity_bound: int


def _cyclotomic_order(poly: sympy.Poly) -> int | None:
    x = poly.gens[0]
    deg = poly.degree()
    for d in range(1, 4 * deg * deg + 8):
        if sympy.totient(d) == deg and sympy.Poly(sympy.cyclotomic_poly(d, x), x) == poly:
            return d
    return None


def annihilator_certificate(images) -> Certificate:
    """(N, k) with (M^N − I)^k = 0 for the σ-image M.

    ``images`` is ``[M]`` (σ-image given), ``[A, B]`` (σ-image = [A, B]) or
    ``[A, B, M]``.  N is the lcm of the orders of the eigenvalues, found by
    factoring the characteristic polynomial into cyclotomic factors; k is the
    nilpotency index of M^N − I, which never exceeds the largest multiplicity.
    """
    mats = [sympy.Matrix(m) for m in images]
    if len(mats) == 1:
        M = mats[0]
    elif len(mats) in (2, 3):
        A, B = mats[0], mats[1]
        comm = A * B * A.inv() * B.inv()
        M = mats[2] if len(mats) == 3 else comm
        if M * A != A * M or M * B != B * M:
            raise CertificateError("σ-image does not commute with the generator images")
    else:
        raise ValueError("expected 1, 2 or 3 matrices")
    x = sympy.Symbol("x")
    cp = M.charpoly(x)
    _, factors = sympy.factor_list(cp.as_expr(), x)
    orders = []
    mult = 0
    for f, e in factors:
        d = _cyclotomic_order(sympy.Poly(f, x))
        if d is None:
            raise CertificateError(f"eigenvalues of {f} are not roots of unity")
        orders.append(d)
        mult = max(mult, e)
    N = lcm(*orders) if orders else 1
    I = sympy.eye(M.rows)
    D = M ** N - I
    P = I
    for k in range(1, mult + 1):
        P = P * D
        if P.is_zero_matrix:
            return Certificate(N, k, tuple(sorted(set(orders))), str(cp.as_expr()), mult)
    raise CertificateError("(M^N - I)^k did not vanish; inconsistent factorization")
