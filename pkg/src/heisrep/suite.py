"""The reproduction battery: one check per acceptance item, each returning a witness."""

from __future__ import annotations

import json
import random
import time
from collections import Counter
from dataclasses import dataclass, field
from importlib import resources
from itertools import product
from math import comb

import numpy as np
import sympy

from . import heisenberg as hz
from . import lawrence as lw
from . import linearize as lin
from . import pairing as pr
from . import rep_one as r1
from .words import DiskLocalSystem, SurfaceBraidWord, eval_heisenberg, separating_word


@dataclass
class CheckResult:
    id: str
    anchor: str
    status: str
    witness: dict = field(default_factory=dict)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json(self) -> dict:
        return {"id": self.id, "anchor": self.anchor, "status": self.status,
                "seconds": round(self.seconds, 3), "witness": self.witness}


def fixture_path(name: str):
    return resources.files("heisrep") / "fixtures" / "paper" / name


def load_fixture(name: str) -> dict:
    return json.loads(fixture_path(name).read_text())


def fixture_names() -> list:
    return sorted(p.name for p in (resources.files("heisrep") / "fixtures" / "paper").iterdir()
                  if p.name.endswith(".json"))


def _status(ok: bool) -> str:
    return "pass" if ok else "fail"


# ------------------------------------------------------------------ 1

def random_letters(rng: random.Random, g: int, length: int) -> list:
    out = []
    for _ in range(length):
        kind = rng.choice("abs")
        out.append((kind, rng.randint(1, g), rng.choice((1, -1))))
    return out


def check_heisenberg_oracle(trials: int = 10_000, seed: int = 1) -> CheckResult:
    rng = random.Random(seed)
    start = time.perf_counter()
    gens = {}
    mats = {}
    for g in range(1, 5):
        for kind, i, e in product("abs", range(1, g + 1), (1, -1)):
            if kind == "a":
                x = hz.gen_a(g, i, e)
            elif kind == "b":
                x = hz.gen_b(g, i, e)
            else:
                x = hz.sigma(g, e)
            gens[g, kind, i, e] = x
            mats[g, kind, i, e] = lin.tautological_scaled(x)
    bad = []
    for t in range(trials):
        g = rng.randint(1, 4)
        word = random_letters(rng, g, rng.randint(0, 40))
        x = hz.identity(g)
        T = lin.tautological_scaled(x)
        for kind, i, e in word:
            x = hz.multiply(x, gens[g, kind, i, e])
            T = T.dot(mats[g, kind, i, e])
        if not np.array_equal(T, lin.tautological_scaled(x)):
            bad.append(t)
    secs = time.perf_counter() - start
    ok = not bad and secs < 5.0
    return CheckResult("heisenberg-oracle", "the tautological representation of H_g", _status(ok),
                       {"trials": trials, "mismatches": bad[:5], "limit_s": 5.0}, secs)


# ------------------------------------------------------------------ 2

def check_separating_curves() -> CheckResult:
    bad = []
    for g in range(1, 6):
        for k in range(1, g + 1):
            for eps in (1, -1):
                got = eval_heisenberg(separating_word(k, eps, g))
                if got != hz.sigma(g, 2 * eps * k):
                    bad.append({"g": g, "k": k, "eps": eps, "got": str(got)})
    return CheckResult("separating-curves", "separating simple closed curve of genus", _status(not bad),
                       {"cases": 30, "mismatches": bad})


# ------------------------------------------------------------------ 3

def check_kernel_pair_genus6() -> CheckResult:
    data = load_fixture("kernel_genus6.json")
    d = pr.diagram_from_json(data)
    terms = [str(t) for t in pr.pairing_terms(d)]
    total = pr.pair_1pt(d)
    ok = terms == data["expected_terms"] and total.is_zero()
    return CheckResult("kernel-pair-genus-6", "has kernel for any g≥6", _status(ok),
                       {"terms": terms, "sum": str(total)})


# ------------------------------------------------------------------ 4

def check_rho1k_kernel() -> CheckResult:
    per_k = {}
    ok = True
    for k in (1, 2, 3):
        start = time.perf_counter()
        data = load_fixture(f"kernel_pair_k{k}.json")
        cat = r1.catalog_from_json(data)
        a, b = cat["Ta"], cat["Tb"]
        ab = r1.pairing_with(a, b.curve_class)
        ba = r1.pairing_with(b, a.curve_class)
        bigon = pr.pair_1pt(pr.diagram_from_json(load_fixture(f"bigon_1pt_k{k}.json")), hz.mod_sigma(2 * k))
        cert = r1.kernel_certificate(r1.commutator_word("Ta", "Tb"), cat)
        nontrivial = not r1.kernel_certificate([("Ta", 1)], cat)["is_identity_on_basis"]
        secs = time.perf_counter() - start
        good = ab.is_zero() and ba.is_zero() and bigon.is_zero() and cert["is_identity_on_basis"] and nontrivial and secs < 1.0
        ok &= good
        per_k[k] = {"g": a.g, "pairing_ab": str(ab), "pairing_ba": str(ba), "bigon": str(bigon),
                    "commutator_identity": cert["is_identity_on_basis"], "twist_nontrivial": nontrivial,
                    "seconds": round(secs, 3)}
    return CheckResult("rho1k-kernel", "the representation ρ_{1,k} has kernel", _status(ok), per_k)


# ------------------------------------------------------------------ 5

def duality_cases(limit: int = 50) -> list:
    cases = []
    g = 1
    while 2 * g <= limit:
        n = 1
        while comb(2 * g + n - 1, n) <= limit:
            cases.append((g, n))
            n += 1
        g += 1
    return cases


def check_duality(limit: int = 50) -> CheckResult:
    bad = []
    cases = duality_cases(limit)
    for g, n in cases:
        B = pr.basis_compositions(g, n)
        if len(B) != pr.basis_size(g, n):
            bad.append((g, n, "size"))
            continue
        G = pr.gram_matrix(g, n)
        if any(G[i][j] != int(i == j) for i in range(len(B)) for j in range(len(B))):
            bad.append((g, n, "gram"))
    return CheckResult("duality", "Kronecker symbol for lists", _status(not bad),
                       {"cases": len(cases), "failures": bad})


# ------------------------------------------------------------------ 6

def check_augmentation() -> CheckResult:
    rows = {}
    ok = True
    for name in fixture_names():
        data = load_fixture(name)
        if data.get("type") == "one_point":
            d = pr.diagram_from_json(data)
            eps, count = pr.augmentation_check(d)
        elif data.get("type") == "n_point":
            d = pr.diagram_from_json(data)
            eps = pr.pair_npt(d, 2).augment()
            count = sum(pr._tuple_term(d, t)[0] for t in product(range(d.k), repeat=2))
        else:
            continue
        rows[name] = [eps, count]
        ok &= eps == count
    return CheckResult("augmentation", "augmentation morphism", _status(ok), rows)


# ------------------------------------------------------------------ 7

def random_symplectic(rng: random.Random, g: int, steps: int = 4) -> tuple:
    n = 2 * g
    M = hz.aut_identity(g).M
    for _ in range(steps):
        choice = rng.randrange(3)
        S = [[0] * g for _ in range(g)]
        i, j = rng.randrange(g), rng.randrange(g)
        S[i][j] += rng.choice((1, -1))
        if i != j:
            S[j][i] = S[i][j]
        E = [[int(a == b) for b in range(n)] for a in range(n)]
        if choice == 0:
            for a in range(g):
                for b in range(g):
                    E[a][g + b] = S[a][b]
        elif choice == 1:
            for a in range(g):
                for b in range(g):
                    E[g + a][b] = S[a][b]
        else:
            E = [list(r) for r in hz.J_matrix(g)]
        M = hz._matmul(M, tuple(map(tuple, E)))
    return M


def random_heis(rng: random.Random, g: int, bound: int = 3) -> hz.HeisenbergElement:
    return hz.HeisenbergElement(
        g, tuple(rng.randint(-bound, bound) for _ in range(g)),
        tuple(rng.randint(-bound, bound) for _ in range(g)), rng.randint(-bound, bound))


def random_semidirect(rng: random.Random, g: int) -> hz.SemidirectElement:
    aut = hz.AutPlusElement(tuple(rng.randint(-2, 2) for _ in range(2 * g)), random_symplectic(rng, g))
    return hz.SemidirectElement(random_heis(rng, g), aut)


def check_suprataut(samples: int = 1000, seed: int = 7) -> CheckResult:
    rng = random.Random(seed)
    mm = hz._matmul
    fails = []
    for g in (1, 2, 3):
        n = 2 * g
        E = [[int(i == j) for j in range(n + 2)] for i in range(n + 2)]
        E[0][n + 1] = 1
        if lin.suprataut(hz.sigma(g)) != tuple(map(tuple, E)):
            fails.append(("sigma-block", g))
        J = hz.J_matrix(g)
        for _ in range(50):
            x, y = random_heis(rng, g), random_heis(rng, g)
            X, Yv = x.vector, y.vector
            e = 2 * sum(a * b for a, b in zip(hz._matvec(J, X), Yv))
            lhs = mm(lin.suprataut(x), lin.suprataut(y))
            rhs = mm(mm(lin.suprataut(y), lin.suprataut(x)), lin.suprataut(hz.sigma(g, e)))
            if lhs != rhs:
                fails.append(("commutation", g))
            M = random_symplectic(rng, g)
            phiM = hz.symplectic(M)
            conj = mm(mm(lin.suprataut(phiM), lin.suprataut(x)), lin.suprataut(phiM.inverse()))
            MX = hz._matvec(M, X)
            JMX = hz._matvec(J, MX)
            if [conj[1 + i][n + 1] for i in range(n)] != list(MX) or list(conj[0][1:n + 1]) != list(JMX):
                fails.append(("symplectic-block", g))
            if conj != lin.suprataut(phiM.apply(x)):
                fails.append(("symplectic-action", g))
            Y = tuple(rng.randint(-2, 2) for _ in range(n))
            tY = hz.translation(Y)
            conj = mm(mm(lin.suprataut(tY), lin.suprataut(x)), lin.suprataut(tY.inverse()))
            corner = x.sym - sum(a * b for a, b in zip(hz._matvec(J, X), Y))
            if conj[0][n + 1] != corner or conj != lin.suprataut(tY.apply(x)):
                fails.append(("translation-block", g))
            z1, z2 = random_semidirect(rng, g), random_semidirect(rng, g)
            if mm(lin.suprataut(z1), lin.suprataut(z2)) != lin.suprataut(z1 * z2):
                fails.append(("homomorphism", g))
    seen = {}
    collisions = 0
    while len(seen) < samples:
        g = rng.randint(1, 3)
        z = random_semidirect(rng, g)
        if z in seen.values():
            continue
        img = lin.suprataut(z)
        if img in seen:
            collisions += 1
        seen[img] = z
        if lin.suprataut_decode(img) != z:
            fails.append(("decode", g))
    ok = not fails and collisions == 0
    return CheckResult("suprataut", "supra-tautological representation", _status(ok),
                       {"failures": fails[:10], "distinct_samples": samples, "collisions": collisions})


# ------------------------------------------------------------------ 8

def random_ring_element(rng: random.Random, g: int, r: int, terms: int = 8):
    q = hz.mod_sigma(r)
    while True:
        acc = {}
        for _ in range(rng.randint(1, terms)):
            h = hz.HeisenbergElement(g, tuple(rng.randint(-2, 2) for _ in range(g)),
                                     tuple(rng.randint(-2, 2) for _ in range(g)), rng.randrange(r))
            acc[h] = acc.get(h, 0) + rng.choice((-3, -2, -1, 1, 2, 3))
        x = hz.ring(acc, q, g)
        if not x.is_zero():
            return x


def check_iota(samples: int = 500, seed: int = 11) -> CheckResult:
    rng = random.Random(seed)
    fails = []
    for g in (1, 2):
        for r in (2, 3, 4):
            s = lin.iota_generator(g, r, "s")
            if not lin.iota_generator(g, r, "s", 1, r).is_identity():
                fails.append(("sigma^r", g, r))
            for i in range(1, g + 1):
                a, b = lin.iota_generator(g, r, "a", i), lin.iota_generator(g, r, "b", i)
                if a * b != s * s * b * a:
                    fails.append(("ab", g, r, i))
                ar = lin.iota_element(hz.gen_a(g, i, r), r)
                L = lin.iota_ring(g)
                scal = L.monomial(**{f"s{i}": r})
                if any(k != j or c != scal for j, (k, c) in ar.images.items()):
                    fails.append(("a^r", g, r, i))
            for _ in range(5):
                x, y = random_ring_element(rng, g, r, 3), random_ring_element(rng, g, r, 3)
                if lin.iota_r(x * y, r) != lin.iota_r(x, r) * lin.iota_r(y, r):
                    fails.append(("mul", g, r))
                if lin.iota_r(x + y, r) != lin.iota_r(x, r) + lin.iota_r(y, r):
                    fails.append(("add", g, r))
    zeros = 0
    for _ in range(samples):
        g, r = rng.randint(1, 2), rng.randint(2, 4)
        if lin.iota_r(random_ring_element(rng, g, r), r).is_zero():
            zeros += 1
    ok = not fails and zeros == 0
    return CheckResult("iota-faithful", "faithful morphism of algebras", _status(ok),
                       {"relation_failures": fails, "probes": samples, "zero_images": zeros})


# ------------------------------------------------------------------ 9

def check_annihilator() -> CheckResult:
    rows = []
    ok = True
    for g, r in ((1, 2), (1, 3), (1, 4), (2, 2), (2, 3)):
        S = lin.iota_element(hz.sigma(g), r).to_sparse().specialize()
        A = lin.iota_element(hz.gen_a(g, 1), r).to_sparse().specialize()
        B = lin.iota_element(hz.gen_b(g, 1), r).to_sparse().specialize()
        for label, images in (("sigma", [S]), ("commutator", [A, B])):
            cert = lin.annihilator_certificate(images)
            M = sympy.Matrix(images[0]) if len(images) == 1 else (
                sympy.Matrix(A) * sympy.Matrix(B) * sympy.Matrix(A).inv() * sympy.Matrix(B).inv())
            D = (M ** cert.N - sympy.eye(M.rows)) ** cert.k
            good = D.is_zero_matrix
            ok &= good
            rows.append({"g": g, "r": r, "image": label, "N": cert.N, "k": cert.k, "verified": good})
    expected = next(x for x in rows if (x["g"], x["r"], x["image"]) == (1, 2, "sigma"))
    ok &= (expected["N"], expected["k"]) == (2, 1)
    return CheckResult("annihilator", "(σ^{2N}-1)^k in its kernel", _status(ok), {"certificates": rows})


# ------------------------------------------------------------------ 10

def check_infinite_order(n_max: int = 100) -> CheckResult:
    q = hz.mod_sigma(1)
    g = 3
    alpha = r1.curve_from_block("Ta", g, 1, 2, q)
    rows = {}
    ok = True
    for j in (0, 1, 2):
        v = r1.basis_vector(g, j, q)
        w = r1.infinite_order_witness(alpha, v, n_max)
        c = w.pairing
        good = w.ok and all(lam == c * n for n, lam in enumerate(w.coefficients, 1))
        ok &= good
        rows[f"e{j}"] = {"pairing": str(c), "first": [str(x) for x in w.coefficients[:3]],
                         "last": str(w.coefficients[-1]), "ok": good}
    # unit pairing: coefficients 1, 2, 3, …
    one, zero = hz.ring_const(g, 1, q), hz.ring_const(g, 0, q)
    unit = r1.SeparatingCurveData("unit", 1, r1.HomologyClassVector((zero, one) + (zero,) * 4, q),
                                  (one,) + (zero,) * 5)
    w = r1.infinite_order_witness(unit, r1.basis_vector(g, 0, q), n_max)
    good = w.ok and [x.augment() for x in w.coefficients] == list(range(1, n_max + 1))
    ok &= good
    rows["unit"] = {"coefficients": [x.augment() for x in w.coefficients[:5]], "ok": good}
    return CheckResult("infinite-order", "have infinite order", _status(ok), rows)


# ------------------------------------------------------------------ 11

class WordAssemblyOracle:
    """n-point pairings from loops evaluated through surface words.

    The loop of a tuple (i_1, …, i_n) moves point j along η_{i_j} and winds
    each pair of points A_{i_l,i_j} times.  Pieces are evaluated as words in
    π_{n,g} (η via separating words, windings via σ-words) and cached; a
    tuple's monomial is the product of its central pieces.
    """

    def __init__(self, g: int = 3, n_max: int = 5):
        self.g = g
        self.n_max = n_max
        self._eta: dict = {}
        self._wind: dict = {}
        self._pair: dict = {}

    def eta(self, v: int) -> int:
        if v not in self._eta:
            w = separating_word(abs(v), 1 if v >= 0 else -1, self.g) if v else SurfaceBraidWord(self.g, 1)
            h = eval_heisenberg(w)
            assert h.is_central()
            self._eta[v] = h.l
        return self._eta[v]

    def wind(self, a: int) -> int:
        if a not in self._wind:
            w = SurfaceBraidWord(self.g, 2, (("s", 1, 1 if a > 0 else -1),) * abs(a))
            self._wind[a] = eval_heisenberg(w).l
        return self._wind[a]

    def braid_word(self, d: pr.NPointDiagram, i: int, j: int) -> SurfaceBraidWord:
        """(η_i, ξ₂) σ₁^{A_{ij}} (η_j, ξ₂) in π_{2,g}."""
        def lift(v):
            w = separating_word(abs(v), 1 if v >= 0 else -1, self.g) if v else SurfaceBraidWord(self.g, 1)
            return SurfaceBraidWord(self.g, 2, w.letters)
        a = d.A[i][j]
        mid = SurfaceBraidWord(self.g, 2, (("s", 1, 1 if a > 0 else -1),) * abs(a))
        return lift(d.n_j[i]) * mid * lift(d.n_j[j])

    def pair_two(self, d: pr.NPointDiagram) -> Counter:
        """n = 2 by literal word assembly, one word per tuple."""
        acc: Counter = Counter()
        for i, j in product(range(d.k), repeat=2):
            key = (d.n_j[i], d.A[i][j], d.n_j[j])
            if key not in self._pair:
                self._pair[key] = eval_heisenberg(self.braid_word(d, i, j))
            h = self._pair[key]
            acc[h.l] += (-1) ** (i + j) * (-1) ** h.l
        return _nonzero(acc)

    def pair(self, d: pr.NPointDiagram, n: int, tuples: np.ndarray, pairs: list) -> Counter:
        eta = np.array([self.eta(v) for v in d.n_j])
        A = np.array([[self.wind(a) for a in row] for row in d.A])
        exps = eta[tuples].sum(axis=1)
        for l, j in pairs:
            exps = exps + A[tuples[:, l], tuples[:, j]]
        signs = np.where((tuples.sum(axis=1) + exps) % 2, -1, 1)
        acc: Counter = Counter()
        vals, inv = np.unique(exps, return_inverse=True)
        sums = np.bincount(inv.ravel(), weights=signs, minlength=len(vals))
        for v, s in zip(vals, sums):
            if s:
                acc[int(v)] += int(s)
        return acc


def _nonzero(acc: Counter) -> Counter:
    # unary + on a Counter would also drop negative coefficients
    return Counter({e: c for e, c in acc.items() if c})


def _as_counter(x) -> Counter:
    acc: Counter = Counter()
    for h, c in x.terms.items():
        acc[h.l] += c
    return _nonzero(acc)


def check_npoint(k_max: int = 3, n_max: int = 4, nb: int = 3, ab: int = 2) -> CheckResult:
    start = time.perf_counter()
    oracle = WordAssemblyOracle()
    mismatches = []
    count = 0
    for k in range(1, k_max + 1):
        m = k * (k - 1) // 2
        tables = {n: np.array(list(product(range(k), repeat=n)), dtype=np.int64).reshape(-1, n)
                  for n in range(2, n_max + 1)}
        pairs = {n: [(l, j) for j in range(n) for l in range(j)] for n in tables}
        for nj in product(range(-nb, nb + 1), repeat=k):
            for up in product(range(-ab, ab + 1), repeat=m):
                d = pr.NPointDiagram.from_upper(nj, up)
                for n in range(2, n_max + 1):
                    count += 1
                    got = _as_counter(pr.pair_npt(d, n))
                    want = oracle.pair_two(d) if n == 2 else oracle.pair(d, n, tables[n], pairs[n])
                    if got != _nonzero(want):
                        mismatches.append({"n_j": nj, "A": up, "n": n})
    secs = time.perf_counter() - start
    bigon_fail = []
    bigon_cases = 0
    for k in range(1, 7):
        q = hz.mod_sigma(2 * k)
        for d in range(1, k + 1):
            if k % d:
                continue
            for n in range(1, 6):
                bigon_cases += 1
                val = pr.pair_npt(pr.bigon(d), n, q)
                if not val.is_zero():
                    bigon_fail.append({"d": d, "k": k, "n": n, "value": str(val)})
    ok = not mismatches and secs < 30.0 and not bigon_fail
    return CheckResult(
        "npoint-formula", "meet in exactly two points", _status(ok),
        {"diagram_runs": count, "oracle_mismatches": mismatches[:5], "seconds_oracle": round(secs, 2),
         "bigon_cases": bigon_cases, "bigon_nonvanishing": bigon_fail[:6],
         "bigon_nonvanishing_count": len(bigon_fail)},
        secs)


# ------------------------------------------------------------------ 12

def braid_relations(k: int) -> list:
    rels = []
    for i in range(1, k):
        for j in range(i + 1, k):
            if j - i >= 2:
                rels.append(((i, j), (j, i)))
            else:
                rels.append(((i, j, i), (j, i, j)))
    return rels


def pure_generator(i: int, j: int) -> tuple:
    """A_{ij} = σ_{j-1}⋯σ_{i+1} σ_i² σ_{i+1}^{-1}⋯σ_{j-1}^{-1}."""
    head = tuple(range(j - 1, i, -1))
    return head + (i, i) + tuple(-x for x in reversed(head))


def random_pure_word(rng: random.Random, k: int, length: int) -> tuple:
    out = ()
    for _ in range(length):
        i = rng.randint(1, k - 1)
        j = rng.randint(i + 1, k)
        a = pure_generator(i, j)
        if rng.random() < 0.5:
            a = tuple(-x for x in reversed(a))
        out += a
    return out


def check_burau_gassner(samples: int = 100, seed: int = 5) -> CheckResult:
    rng = random.Random(seed)
    fails = []
    for k in (2, 3, 4):
        for lhs, rhs in braid_relations(k):
            for red in (True, False):
                if lw.burau(lhs, k, red) != lw.burau(rhs, k, red):
                    fails.append(("burau-relation", k, lhs, red))
            w = random_pure_word(rng, k, 2)
            rel = lhs + tuple(-x for x in reversed(rhs))
            if lw.gassner(w + rel, k) != lw.gassner(w, k) or lw.gassner(rel + w, k) != lw.gassner(w, k):
                fails.append(("gassner-relation", k, lhs))
        for i in range(1, k):
            if lw.burau((i, -i), k, False) != lw.burau((), k, False):
                fails.append(("inverse", k, i))
        for _ in range(10):
            b = tuple(rng.choice((1, -1)) * rng.randint(1, k - 1) for _ in range(rng.randint(0, 8)))
            M = lw.burau(b, k, False)
            if lw.at_t_equals_one(M) != lw.permutation_matrix(b, k):
                fails.append(("permutation", k, b))
            det = lw.determinant(M)
            e = sum(1 if x > 0 else -1 for x in b)
            if not det.is_monomial() or next(iter(det.terms)).exps != (e,):
                fails.append(("determinant", k, b))
    for _ in range(samples):
        k = rng.randint(2, 4)
        w = random_pure_word(rng, k, rng.randint(1, 3))
        if lw.specialize_gassner(lw.gassner(w, k)) != lw.burau(w, k, False):
            fails.append(("specialization", k, w))
    return CheckResult("burau-gassner", "recovers the famous (reduced) Burau representation", _status(not fails),
                       {"failures": fails[:10], "pure_samples": samples})


# ------------------------------------------------------------------ 13

def check_substitutions(genera=(1, 2, 3)) -> CheckResult:
    rows = {}
    ok = True
    for g in genera:
        for region in lw.REGIONS:
            L = DiskLocalSystem(lw.region_holes(region, g))
            sub = lw.standard_substitution(region, g)
            passed = lw.substitution_check(L, sub, region, n=3)["passed"]
            caught = {}
            for name in sub.images:
                caught[name] = not lw.substitution_check(L, sub.perturbed(name), region, n=3)["passed"]
            good = passed and all(caught.values())
            ok &= good
            rows[f"{region}/g={g}"] = {"passes": passed, "perturbations_caught": sum(caught.values()),
                                       "perturbations": len(caught)}
    return CheckResult("substitutions", "evaluated at s=σ^{-2}", _status(ok), rows)


# ------------------------------------------------------------------ 14

def random_twist_word(rng: random.Random, g: int, length: int, records: dict) -> list:
    names = sorted(records)
    return [(rng.choice(names), rng.choice((1, -1, 2))) for _ in range(length)]


def _inverse_word(w):
    return [(n, -e) for n, e in reversed(w)]


def check_subgroup_action(samples: int = 50, seed: int = 3) -> CheckResult:
    rng = random.Random(seed)
    fails = []
    for g in (2, 3, 4):
        recs = dict(lw.half_surface_generators(g))
        v_recs = {}
        for i in range(1, g + 1):
            M = [[0] * g for _ in range(g)]
            M[i - 1][i - 1] = 1
            l = [0] * g
            l[i - 1] = rng.randint(-2, 2)
            v_recs[f"v{i}"] = lw.SubgroupActionRecord(f"v{i}", M, l, kind="V")
        for family in (recs, v_recs):
            for _ in range(samples):
                u = random_twist_word(rng, g, rng.randint(1, 5), family)
                v = random_twist_word(rng, g, rng.randint(1, 5), family)
                Mu, lu = lw.subgroup_Mf(u, g, v_recs)
                Mv, lv = lw.subgroup_Mf(v, g, v_recs)
                Muv, luv = lw.subgroup_Mf(u + v, g, v_recs)
                if Muv != tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(Mu, Mv)) or luv != tuple(a + b for a, b in zip(lu, lv)):
                    fails.append(("additivity", g))
                if any(Mu[i][j] != Mu[j][i] for i in range(g) for j in range(g)):
                    fails.append(("symmetry", g))
                comm = u + v + _inverse_word(u) + _inverse_word(v)
                Mc, lc = lw.subgroup_Mf(comm, g, v_recs)
                if any(any(r) for r in Mc) or any(lc):
                    fails.append(("commutator", g))
                if not lw.word_aut(comm, g, v_recs).is_identity():
                    fails.append(("commutator-aut", g))
                kind = "V" if family is v_recs else "G"
                if lw.word_aut(u, g, v_recs) != lw.subgroup_aut(Mu, lu, kind):
                    fails.append(("aut-additivity", g))
                f = lw.subgroup_aut(Mu, lu, kind)
                for i in range(1, g + 1):
                    if kind == "G":
                        want = hz.gen_a(g, i)
                        for j in range(1, g + 1):
                            want = want * hz.gen_b(g, j, Mu[i - 1][j - 1])
                        got = f(hz.gen_a(g, i))
                    else:
                        want = hz.gen_b(g, i)
                        for j in range(1, g + 1):
                            want = want * hz.gen_a(g, j, Mu[i - 1][j - 1])
                        want = want * hz.sigma(g, lu[i - 1])
                        got = f(hz.gen_b(g, i))
                    if got != want:
                        fails.append(("generator-image", g, kind))
    return CheckResult("subgroup-action", "f_*(a_i) = a_i b^{m^i(f)}", _status(not fails),
                       {"failures": fails[:10], "commutator_samples": samples * 6})


CHECKS = {
    "heisenberg-oracle": check_heisenberg_oracle,
    "separating-curves": check_separating_curves,
    "kernel-pair-genus-6": check_kernel_pair_genus6,
    "rho1k-kernel": check_rho1k_kernel,
    "duality": check_duality,
    "augmentation": check_augmentation,
    "suprataut": check_suprataut,
    "iota-faithful": check_iota,
    "annihilator": check_annihilator,
    "infinite-order": check_infinite_order,
    "npoint-formula": check_npoint,
    "burau-gassner": check_burau_gassner,
    "substitutions": check_substitutions,
    "subgroup-action": check_subgroup_action,
}


def run_suite(only=None) -> list:
    """Run the checks in order; ``only`` restricts to a set of check ids."""
    if only is not None:
        unknown = set(only) - set(CHECKS)
        if unknown:
            raise KeyError(f"unknown check ids: {sorted(unknown)}")
    out = []
    for cid, fn in CHECKS.items():
        if only is not None and cid not in only:
            continue
        start = time.perf_counter()
        try:
            res = fn()
        except Exception as exc:  # a crash is reported, not raised
            res = CheckResult(cid, "", "fail", {"error": f"{type(exc).__name__}: {exc}"})
        if not res.seconds:
            res.seconds = time.perf_counter() - start
        out.append(res)
    return out
