"""Integral group rings over an arbitrary coefficient group.

Group elements only need ``__mul__``, ``inverse()``, ``sort_key()`` and to be
hashable.  Laurent polynomials are the group ring of a free abelian group of
exponent vectors, so they reuse the same machinery through :class:`Monomial`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Iterator


class RingElement:
    """Finite formal sum ``sum c_h h`` with nonzero integer coefficients.

    ``one`` is the identity of the coefficient group (needed for scalars).
    ``reducer`` maps group elements onto canonical quotient representatives
    and is applied to every product; ``None`` means no quotient.
    """

    __slots__ = ("terms", "one", "reducer", "_hash")

    def __init__(self, terms, one, reducer: Callable | None = None):
        if reducer is not None:
            acc: dict = {}
            for h, c in terms.items():
                h = reducer(h)
                acc[h] = acc.get(h, 0) + c
            terms = acc
        self.terms = {h: c for h, c in terms.items() if c}
        self.one = one
        self.reducer = reducer
        self._hash = None

    # construction helpers
    @classmethod
    def of(cls, h, coeff: int = 1, reducer=None, one=None) -> "RingElement":
        one = one if one is not None else h * h.inverse()
        return cls({h: coeff}, one, reducer)

    def _new(self, terms) -> "RingElement":
        out = RingElement.__new__(RingElement)
        out.terms = {h: c for h, c in terms.items() if c}
        out.one = self.one
        out.reducer = self.reducer
        out._hash = None
        return out

    def scalar(self, c: int) -> "RingElement":
        return self._new({self.one: c})

    def zero(self) -> "RingElement":
        return self._new({})

    def _coerce(self, other) -> "RingElement":
        if isinstance(other, RingElement):
            return other
        if isinstance(other, int):
            return self.scalar(other)
        return RingElement({other: 1}, self.one, self.reducer)

    # arithmetic
    def __add__(self, other):
        other = self._coerce(other)
        acc = dict(self.terms)
        for h, c in other.terms.items():
            acc[h] = acc.get(h, 0) + c
        return self._new(acc)

    __radd__ = __add__

    def __neg__(self):
        return self._new({h: -c for h, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            return self._new({h: c * other for h, c in self.terms.items()})
        other = self._coerce(other)
        red = self.reducer
        acc: dict = {}
        for h1, c1 in self.terms.items():
            for h2, c2 in other.terms.items():
                h = h1 * h2
                if red is not None:
                    h = red(h)
                acc[h] = acc.get(h, 0) + c1 * c2
        return self._new(acc)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return self._coerce(other) * self

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative powers only exist for monomials; use inverse()")
        out = self.scalar(1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.scalar(other)
        if not isinstance(other, RingElement):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def __iter__(self) -> Iterator:
        return iter(self.sorted_terms())

    def __len__(self):
        return len(self.terms)

    # structure
    def is_zero(self) -> bool:
        return not self.terms

    def is_monomial(self) -> bool:
        return len(self.terms) == 1 and next(iter(self.terms.values())) in (1, -1)

    def inverse(self) -> "RingElement":
        """Inverse of a unit ``±h``."""
        if not self.is_monomial():
            raise ValueError(f"{self} is not a unit")
        (h, c), = self.terms.items()
        return self._new({h.inverse(): c})

    def augment(self) -> int:
        return sum(self.terms.values())

    def map(self, f: Callable, reducer=..., one=None) -> "RingElement":
        """Push forward along a group homomorphism ``f``."""
        red = self.reducer if reducer is ... else reducer
        acc: dict = {}
        for h, c in self.terms.items():
            k = f(h)
            acc[k] = acc.get(k, 0) + c
        return RingElement(acc, one if one is not None else f(self.one), red)

    def map_ring(self, f: Callable, zero: "RingElement") -> "RingElement":
        """Extend ``f: group -> ring`` linearly (f must be multiplicative)."""
        out = zero
        for h, c in self.terms.items():
            out = out + f(h) * c
        return out

    def signed(self, parity: Callable) -> "RingElement":
        return self._new({h: c * (-1 if parity(h) % 2 else 1) for h, c in self.terms.items()})

    def anti_involution(self) -> "RingElement":
        """The anti-automorphism induced by ``h -> h^{-1}``."""
        return self._new({h.inverse(): c for h, c in self.terms.items()})

    def reduce(self, reducer) -> "RingElement":
        return RingElement(self.terms, reducer(self.one), reducer)

    def sorted_terms(self) -> list:
        return sorted(self.terms.items(), key=lambda hc: hc[0].sort_key())

    def coefficient(self, h) -> int:
        return self.terms.get(h, 0)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for h, c in self.sorted_terms():
            body = str(h)
            if body == "1":
                mag = str(abs(c))
            elif abs(c) == 1:
                mag = body
            else:
                mag = f"{abs(c)}*{body}"
            parts.append(("-" if c < 0 else "+", mag))
        head = parts[0][1] if parts[0][0] == "+" else "-" + parts[0][1]
        return head + "".join(f" {s} {m}" for s, m in parts[1:])

    def __repr__(self):
        return f"RingElement({self})"


@dataclass(frozen=True, slots=True)
class Monomial:
    """Laurent monomial ``prod names[i]^exps[i]``; the free abelian group."""

    exps: tuple
    names: tuple

    def __mul__(self, other: "Monomial") -> "Monomial":
        return Monomial(tuple(a + b for a, b in zip(self.exps, other.exps)), self.names)

    def __pow__(self, e: int) -> "Monomial":
        return Monomial(tuple(a * e for a in self.exps), self.names)

    def inverse(self) -> "Monomial":
        return Monomial(tuple(-a for a in self.exps), self.names)

    def sort_key(self):
        return self.exps

    def is_identity(self) -> bool:
        return not any(self.exps)

    def degree(self, name: str) -> int:
        return self.exps[self.names.index(name)]

    def __str__(self):
        bits = []
        for name, e in zip(self.names, self.exps):
            if e == 1:
                bits.append(name)
            elif e:
                bits.append(f"{name}^{e}")
        return "*".join(bits) if bits else "1"


class LaurentRing:
    """Z[x_1^{±1}, ..., x_k^{±1}] with named variables."""

    def __init__(self, names: Iterable[str]):
        self.names = tuple(names)
        if len(set(self.names)) != len(self.names):
            raise ValueError("duplicate variable names")
        self.unit = Monomial((0,) * len(self.names), self.names)

    def monomial(self, **exps: int) -> Monomial:
        unknown = set(exps) - set(self.names)
        if unknown:
            raise KeyError(f"unknown variables {sorted(unknown)}")
        return Monomial(tuple(exps.get(n, 0) for n in self.names), self.names)

    def var(self, name: str, power: int = 1) -> RingElement:
        return RingElement({self.monomial(**{name: power}): 1}, self.unit)

    def const(self, c: int) -> RingElement:
        return RingElement({self.unit: c}, self.unit)

    def zero(self) -> RingElement:
        return self.const(0)

    def one(self) -> RingElement:
        return self.const(1)

    def element(self, m: Monomial, c: int = 1) -> RingElement:
        return RingElement({m: c}, self.unit)

    def substitute(self, x: RingElement, values: dict) -> RingElement:
        """Evaluate variables in ``values`` (name -> RingElement of the target)."""
        some = next(iter(values.values()))
        zero = some.zero()
        out = zero
        for mono, c in x.terms.items():
            term = some.scalar(c)
            for name, e in zip(mono.names, mono.exps):
                if not e:
                    continue
                v = values[name]
                term = term * (v ** e if e > 0 else v.inverse() ** (-e))
            out = out + term
        return out

    def __repr__(self):
        return f"LaurentRing{self.names}"
