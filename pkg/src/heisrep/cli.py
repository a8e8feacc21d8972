"""``heisrep`` command line: every operation of the package plus ``verify --suite paper``.

Exit codes: 0 when everything requested passed, 1 when a check failed,
2 on a parse error (the message carries the offending position).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import heisenberg as hz
from . import lawrence as lw
from . import linearize as lin
from . import pairing as pr
from . import rep_one as r1
from .heisenberg import FULL, ParseError, QuotientSpec
from .words import DiskLocalSystem, SurfaceBraidWord, eval_heisenberg

EXIT_OK, EXIT_FAIL, EXIT_PARSE = 0, 1, 2


# ------------------------------------------------------------------ output helpers

def render_matrix(rows) -> str:
    """Aligned text with one row per line."""
    cells = [[str(x) for x in row] for row in rows]
    if not cells:
        return "[]"
    width = max(len(c) for row in cells for c in row)
    return "\n".join("[ " + "  ".join(c.rjust(width) for c in row) + " ]" for row in cells)


def _cell(x):
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x)
    return str(x)


def matrix_json(rows) -> list:
    return [[_cell(x) for x in row] for row in rows]


def _emit(args, text: str, payload) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, default=str, sort_keys=True))
    else:
        print(text)


def _quotient(args) -> QuotientSpec:
    if args.mod_sigma is not None and args.finite is not None:
        raise SystemExit("choose at most one of --mod-sigma and --finite")
    if args.mod_sigma is not None:
        return hz.mod_sigma(args.mod_sigma)
    if args.finite is not None:
        return hz.finite(args.finite)
    return FULL


def _resolve(path: str) -> Path:
    """A file on disk, or the name of a shipped fixture."""
    p = Path(path)
    if p.exists():
        return p
    from .suite import fixture_path

    fx = fixture_path(path if path.endswith(".json") else path + ".json")
    if fx.is_file():
        return Path(str(fx))
    raise SystemExit(f"no such file or fixture: {path}")


# ------------------------------------------------------------------ subcommands

def cmd_heis(args) -> int:
    g = args.genus or 1
    q = _quotient(args)
    xs = [hz.parse_element(t, g) for t in args.elements]
    if args.op == "mul":
        out = hz.identity(g)
        for x in xs:
            out = out * x
    elif args.op == "inv":
        if len(xs) != 1:
            raise SystemExit("inv takes one element")
        out = xs[0].inverse()
    elif args.op == "comm":
        if len(xs) != 2:
            raise SystemExit("comm takes two elements")
        out = hz.commutator(xs[0], xs[1])
    elif args.op == "eval":
        words = [SurfaceBraidWord.parse(t, g, args.n or 1) for t in args.elements]
        out = hz.identity(g)
        for w in words:
            out = out * eval_heisenberg(w)
    else:
        if len(xs) != 1:
            raise SystemExit("reduce takes one element")
        out = xs[0]
    out = hz.reduce(out, q)
    _emit(args, str(out), {"element": out.to_json(), "text": str(out), "quotient": str(q)})
    return EXIT_OK


def cmd_pair(args) -> int:
    q = _quotient(args)
    d = pr.load_diagram(_resolve(args.file), args.genus)
    if isinstance(d, pr.NPointDiagram):
        n = args.n or 1
        val = pr.pair_npt(d, n, q, args.genus or 1)
        aug = None
    else:
        val = pr.pair_1pt(d, q)
        aug = pr.augmentation_check(d)
    payload = {"value": str(val), "zero": val.is_zero(), "quotient": str(q)}
    if aug is not None:
        payload["augmentation"] = list(aug)
    _emit(args, str(val), payload)
    return EXIT_OK


def cmd_rep(args) -> int:
    q = hz.mod_sigma(args.mod_sigma) if args.mod_sigma is not None else None
    catalog = r1.load_catalog(_resolve(args.catalog), q)
    word = r1.parse_twist_word(args.word)
    cert = r1.kernel_certificate(word, catalog)
    M = cert["matrix"]
    ident = cert["is_identity_on_basis"]
    text = render_matrix(M) + f"\nidentity on basis: {ident}"
    _emit(args, text, {"word": args.word, "identity_on_basis": ident, "matrix": matrix_json(M)})
    if args.expect_identity and not ident:
        return EXIT_FAIL
    return EXIT_OK


def cmd_linearize(args) -> int:
    g = args.genus or 1
    x = hz.parse_element(args.element, g)
    payload: dict = {"element": str(x), "kind": args.kind}
    if args.kind == "taut":
        M = lin.tautological(x)
    elif args.kind == "supra":
        M = lin.suprataut(x)
    else:
        op = lin.iota_r(x, args.r)
        M = op.to_sparse().to_dense()
        if args.certificate:
            spec = op.to_sparse().specialize()
            cert = lin.annihilator_certificate([spec])
            payload["certificate"] = {"N": cert.N, "k": cert.k, "orders": list(cert.orders)}
    payload["matrix"] = matrix_json(M)
    text = render_matrix(M)
    if "certificate" in payload:
        c = payload["certificate"]
        text += f"\ncertificate: N={c['N']} k={c['k']}"
    _emit(args, text, payload)
    return EXIT_OK


def cmd_burau(args) -> int:
    b = lw.parse_braid(args.word, args.k)
    if args.gassner:
        M = lw.gassner(b, args.k)
    else:
        M = lw.burau(b, args.k, reduced=args.reduced, anti=args.anti)
    _emit(args, render_matrix(M), {"braid": list(b), "matrix": matrix_json(M)})
    return EXIT_OK


def cmd_bridge(args) -> int:
    g = args.genus or 1
    n = args.n or 2
    region = args.region
    if region not in lw.REGIONS:
        raise SystemExit(f"unknown region {region!r}; choose from {', '.join(lw.REGIONS)}")
    L = DiskLocalSystem(lw.region_holes(region, g))
    res = lw.substitution_check(L, lw.standard_substitution(region, g), region, n=n)
    text = f"{region} g={g} n={n}: {'pass' if res['passed'] else 'fail'}"
    for mm in res["mismatches"]:
        text += f"\n  {mm}"
    _emit(args, text, res)
    return EXIT_OK if res["passed"] else EXIT_FAIL


def cmd_verify(args) -> int:
    from .suite import run_suite

    results = run_suite(set(args.only) if args.only else None)
    ok = all(r.passed for r in results)
    text = "\n".join(f"{r.status.upper():4}  {r.id:<20} {r.seconds:7.2f}s  {r.anchor}" for r in results)
    _emit(args, text, {"suite": args.suite, "passed": ok, "checks": [r.to_json() for r in results]})
    return EXIT_OK if ok else EXIT_FAIL


def cmd_search(args) -> int:
    q = _quotient(args)
    try:
        found = pr.kernel_search(args.max_k, args.bound, q, n=args.n or 1, g=args.genus or 1,
                                 limit=args.limit)
    except pr.SearchTooLarge as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_FAIL
    payload = {"count": len(found), "diagrams": [pr.diagram_to_json(d) for d in found]}
    text = "\n".join(json.dumps(pr.diagram_to_json(d)) for d in found) or "no kernel diagrams found"
    _emit(args, text, payload)
    return EXIT_OK


# ------------------------------------------------------------------ parser

def _global_options(parser: argparse.ArgumentParser, suppress: bool) -> None:
    kw = {"default": argparse.SUPPRESS} if suppress else {"default": None}
    parser.add_argument("--mod-sigma", type=int, metavar="R", help="work modulo σ^R", **kw)
    parser.add_argument("--finite", type=int, metavar="R", help="work in the finite quotient of level R", **kw)
    parser.add_argument("--genus", type=int, metavar="G", help="surface genus", **kw)
    parser.add_argument("--n", type=int, metavar="N", help="number of points", **kw)
    parser.add_argument("--json", action="store_true", help="machine-readable output",
                        **({"default": argparse.SUPPRESS} if suppress else {}))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="heisrep", description=__doc__.splitlines()[0])
    _global_options(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        p = sub.add_parser(name, help=help_)
        _global_options(p, suppress=True)
        p.set_defaults(func=func)
        return p

    p = add("heis", cmd_heis, "arithmetic in the Heisenberg group")
    p.add_argument("op", choices=["mul", "inv", "comm", "reduce", "eval"])
    p.add_argument("elements", nargs="+")

    p = add("pair", cmd_pair, "twisted intersection pairing of a diagram file")
    p.add_argument("--file", required=True)

    p = add("rep", cmd_rep, "one-point representation of twist words")
    p.add_argument("action", choices=["act"])
    p.add_argument("--catalog", required=True)
    p.add_argument("--word", required=True)
    p.add_argument("--expect-identity", action="store_true", help="exit 1 unless the word acts trivially")

    p = add("linearize", cmd_linearize, "matrix images of a group element")
    p.add_argument("kind", choices=["taut", "supra", "iota"])
    p.add_argument("element")
    p.add_argument("--r", type=int, default=2, help="level for iota")
    p.add_argument("--certificate", action="store_true", help="annihilator certificate of the iota image")

    p = add("burau", cmd_burau, "Burau and Gassner matrices")
    p.add_argument("--k", type=int, required=True, help="number of strands")
    p.add_argument("--word", required=True)
    p.add_argument("--reduced", action="store_true")
    p.add_argument("--anti", action="store_true", help="conjugate transpose under t ↦ t⁻¹")
    p.add_argument("--gassner", action="store_true")

    p = add("bridge", cmd_bridge, "Lawrence substitution checks")
    p.add_argument("action", choices=["check"])
    p.add_argument("--region", required=True)

    p = add("verify", cmd_verify, "run the acceptance suite")
    p.add_argument("--suite", choices=["paper"], default="paper")
    p.add_argument("--only", nargs="*", metavar="ID")

    p = add("search", cmd_search, "enumerate small kernel diagrams")
    p.add_argument("--max-k", type=int, default=4)
    p.add_argument("--bound", type=int, default=4, help="bound on |σ-exponent| of each loop")
    p.add_argument("--limit", type=int)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        print(f"  {exc.text}\n  {' ' * exc.pos}^", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
