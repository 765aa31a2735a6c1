"""Command-line front end: ``affschub <command> [flags]``.

Exit codes: 0 success, 1 an identity check found a counterexample, 2 usage or
configuration error.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict, dataclass
from typing import Sequence

from . import typea
from .affweyl import AffineWeylElement, element_to_json
from .cartan import BudgetExceeded, CartanError, build_root_system, load_cartan_json
from .coeffring import InexactDivision, Theory
from .gkm import (VARIANTS, NoFactorizationFormula, NotCosetInvariant, TruncationError, coproduct_terms, endo,
                  expand_grassmannian, schubert_class, schubert_value, verify_coproduct, verify_divisor,
                  verify_operators, verify_recursion)
from .gkm.peterson import classical_image, peterson_assemble
from .nilhecke import verify_nilhecke

SCHEMA = "affschub/1"


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    type: str | None = None
    rank: int | None = None
    cartan: str | None = None
    theory: str = "H"
    max_length: int = 3
    radius: int | None = None
    degree: int | None = None
    n: int = 3
    w: str | None = None
    format: str = "text"
    seed: int = 0


# ------------------------------------------------------------------ helpers

def _root_system(args):
    if args.cartan:
        return load_cartan_json(args.cartan)
    if not args.type or args.rank is None:
        raise UsageError("give --type and --rank, or --cartan FILE")
    return build_root_system(args.type, args.rank)


def _theory(args) -> Theory:
    return Theory(args.theory, _root_system(args))


def _word(text: str | None) -> tuple[int, ...]:
    if text is None or text.strip() in ("", "e", "id"):
        return ()
    try:
        return tuple(int(p) for p in text.split(","))
    except ValueError as exc:
        raise UsageError(f"--w expects a comma-separated word, got {text!r}") from exc


def _element(G, text: str | None) -> AffineWeylElement:
    word = _word(text)
    if any(not 0 <= i <= G.rs.rank for i in word):
        raise UsageError(f"word {list(word)} has letters outside 0..{G.rs.rank}")
    return G.from_word(word)


def _emit(args, doc: dict, text: str) -> None:
    if args.format == "json":
        doc = {"schema": SCHEMA, "seed": args.seed, "config": asdict(run_config(args)), **doc}
        print(json.dumps(doc, indent=2, sort_keys=False))
    else:
        print(text)


def _status(ok: bool) -> int:
    return 0 if ok else 1


# ----------------------------------------------------------------- commands

def cmd_ball(args) -> int:
    G = _root_system(args).affine
    items = G.ball(args.max_length)
    doc = {"command": "ball", "max_length": args.max_length,
           "elements": [dict(element_to_json(x), length=x.length) for x in items]}
    text = "\n".join(f"{x.length}\t{','.join(map(str, x.word)) or 'e'}\tmu={list(x.mu)}" for x in items)
    _emit(args, doc, text)
    return 0


def cmd_localize(args) -> int:
    th = _theory(args)
    G = th.rs.affine
    v = _element(G, args.w)
    cls = schubert_class(th, v, args.max_length)
    vals = cls.values()
    doc = {"command": "localize", "theory": th.name, "radius": args.max_length, "element": element_to_json(v),
           "values": [{"element": element_to_json(x), "coeff": q.to_json()} for x, q in sorted(vals.items())]}
    text = "\n".join(f"{','.join(map(str, x.word)) or 'e'}\t{q!r}" for x, q in sorted(vals.items()))
    _emit(args, doc, text or "0")
    return 0


def cmd_coproduct_terms(args) -> int:
    th = _theory(args)
    w = _element(th.rs.affine, args.w)
    try:
        terms = coproduct_terms(th, w, args.variant)
    except NoFactorizationFormula as exc:
        raise UsageError(str(exc)) from exc
    doc = {"command": "coproduct-terms", "theory": th.name, "variant": args.variant, "element": element_to_json(w),
           "terms": [{"left": element_to_json(a), "right": element_to_json(b), "coefficient": c}
                     for a, b, c in terms]}
    text = "\n".join(f"{'+' if c > 0 else '-'}\t{','.join(map(str, a.word)) or 'e'}\t"
                     f"{','.join(map(str, b.word)) or 'e'}" for a, b, c in terms)
    _emit(args, doc, text)
    return 0


def cmd_verify(args) -> int:
    th = _theory(args)
    G = th.rs.affine
    what = args.identity
    reports = []
    if what == "coproduct":
        radius = args.radius if args.radius is not None else 2 * args.max_length
        elems = [_element(G, args.w)] if args.w else G.ball(args.max_length)
        variants = VARIANTS if args.variant == "all" else (args.variant,)
        for variant in variants:
            for w in elems:
                rep = verify_coproduct(th, w, radius, variant, exhaust=args.exhaust)
                reports.append(rep.to_json())
                if not rep.ok:
                    _stream(args, rep.to_json())
                    if not args.exhaust:
                        return _finish(args, what, reports)
    elif what == "divisor":
        nodes = [args.node] if args.node is not None else list(G.nodes)
        for i in nodes:
            if not 0 <= i <= th.rs.rank:
                raise UsageError(f"node {i} out of range")
            reports.append(verify_divisor(th, i, args.max_length).to_json())
            if reports[-1]["status"] != "pass":
                _stream(args, reports[-1])
    elif what == "operators":
        for rep in verify_operators(th, args.max_length, args.radius, seed=args.seed):
            reports.append(rep.to_json())
            if not rep.ok:
                _stream(args, rep.to_json())
    elif what == "nilhecke":
        reports.append(verify_nilhecke(th, y_length=args.max_length, ball_radius=min(args.max_length, 3)).to_json())
    elif what == "recursion":
        reports.append(verify_recursion(th, args.max_length).to_json())
    if what in ("nilhecke", "recursion") and reports[-1]["status"] != "pass":
        _stream(args, reports[-1])
    return _finish(args, what, reports)


def _stream(args, rep: dict) -> None:
    print(json.dumps({"counterexample": rep}), file=sys.stderr, flush=True)


def _finish(args, what: str, reports: list[dict]) -> int:
    ok = all(r["status"] == "pass" for r in reports)
    doc = {"command": f"verify {what}", "theory": args.theory, "type": args.type, "rank": args.rank,
           "status": "pass" if ok else "fail", "reports": reports}
    lines = [f"{what}: {'pass' if ok else 'FAIL'} ({len(reports)} reports)"]
    for r in reports:
        if r["status"] != "pass":
            lines.append(json.dumps(r))
    _emit(args, doc, "\n".join(lines))
    return _status(ok)


def cmd_expand_grassmannian(args) -> int:
    th = _theory(args)
    G = th.rs.affine
    w = _element(G, args.w)
    zeta = endo("theta", schubert_class(th, w, args.max_length + th.rs.weyl.longest.length))
    try:
        coeffs = expand_grassmannian(th, zeta, args.max_length)
    except (NotCosetInvariant, InexactDivision) as exc:
        raise UsageError(str(exc)) from exc
    doc = {"command": "expand-grassmannian", "theory": th.name, "element": element_to_json(w),
           "max_length": args.max_length,
           "coefficients": [{"element": element_to_json(u), "coeff": c.to_json()} for u, c in sorted(coeffs.items())]}
    text = "\n".join(f"{','.join(map(str, u.word)) or 'e'}\t{c!r}" for u, c in sorted(coeffs.items()))
    _emit(args, doc, text or "0")
    return 0


def cmd_peterson(args) -> int:
    th = _theory(args)
    u = _element(th.rs.affine, args.w)
    try:
        res = peterson_assemble(th, u, args.radius)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    doc = {"command": "peterson", "theory": th.name, "element": element_to_json(u), "radius": res.radius,
           "exact": res.exact, "result": res.element.to_json(),
           "classical_image": classical_image(res).to_json()}
    _emit(args, doc, f"{res.element!r}\n# radius {res.radius}, exact: {res.exact}")
    return 0


def _poly(args):
    n = args.n
    word = _word(args.w)
    kind = args.kind
    if any(not 0 <= i < n for i in word):
        raise UsageError(f"word {list(word)} has letters outside 0..{n - 1}")
    w = typea.element(n, word)
    D = args.degree
    if kind == "affine-schubert":
        return typea.affine_schubert_poly(w, n, D)
    if kind == "affine-grothendieck":
        return typea.affine_grothendieck_poly(w, n, D if D is not None else w.length + 3)
    if kind == "affine-stanley":
        return typea.affine_stanley(w, n, D)
    if kind == "stable-grothendieck":
        return typea.affine_stable_grothendieck(w, n, D if D is not None else w.length + 3)
    if not w.is_finite:
        raise UsageError("Schubert and Grothendieck polynomials need a word without the letter 0")
    if kind == "schubert":
        return typea.schubert_poly(w, n)
    return typea.grothendieck_poly(w, n)


def cmd_poly(args) -> int:
    p = _poly(args)
    if isinstance(p, typea.SymFunc):
        basis = args.basis if args.basis != "auto" else ("h" if all(v >= 0 for v in p.to("h").terms.values()) else "m")
        text = p.to(basis).text()
        payload = p.to(basis).to_json()
    elif isinstance(p, typea.TensorPoly):
        text = p.text(args.basis)
        payload = p.to_json()
    else:
        text = p.text()
        payload = {"terms": p.to_json()}
    doc = {"command": f"poly {args.kind}", "n": args.n, "w": list(_word(args.w)), "text": text, "value": payload}
    _emit(args, doc, text)
    return 0


def cmd_positivity(args) -> int:
    n = args.n
    elems = [typea.element(n, _word(args.w))] if args.w else typea.affine_elements(n, args.max_length)
    results = []
    ok = True
    for w in elems:
        res = typea.monomial_positivity(typea.affine_schubert_poly(w, n))
        results.append({"w": list(w.word), **res.to_json()})
        if not res.positive:
            ok = False
            _stream(args, results[-1])
            if not args.exhaust:
                break
    doc = {"command": "positivity", "n": n, "status": "pass" if ok else "fail", "results": results}
    _emit(args, doc, f"positivity n={n}: {'pass' if ok else 'FAIL'} ({len(results)} elements)")
    return _status(ok)


# ------------------------------------------------------------------- parser

def _common(p, lie=True, typea_flags=False):
    if lie:
        p.add_argument("--type", help="Cartan type letter (A, B, C, D, G)")
        p.add_argument("--rank", type=int)
        p.add_argument("--cartan", metavar="FILE", help="JSON file with a Cartan matrix")
        p.add_argument("--theory", choices=("K", "H"), default="H")
    if typea_flags:
        p.add_argument("--n", type=int, default=3)
    p.add_argument("--max-length", type=int, default=3)
    p.add_argument("--w", help="comma-separated word, e.g. 2,1,0")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--seed", type=int, default=0)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="affschub", description="Affine Schubert calculus by localization.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ball", help="list affine Weyl group elements by length")
    _common(p)
    p.set_defaults(func=cmd_ball)

    p = sub.add_parser("localize", help="localization values of a Schubert class")
    _common(p)
    p.set_defaults(func=cmd_localize)

    p = sub.add_parser("coproduct-terms", help="factorization terms of the coproduct formula")
    _common(p)
    p.add_argument("--variant", choices=VARIANTS, default="structure_sheaf")
    p.set_defaults(func=cmd_coproduct_terms)

    p = sub.add_parser("verify", help="pointwise verification of an identity family")
    p.add_argument("identity", choices=("coproduct", "divisor", "operators", "nilhecke", "recursion"))
    _common(p)
    p.add_argument("--radius", type=int)
    p.add_argument("--variant", choices=VARIANTS + ("all",), default="all")
    p.add_argument("--node", type=int)
    p.add_argument("--exhaust", action="store_true", help="keep going after the first counterexample")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("expand-grassmannian", help="Grassmannian expansion of theta(psi^w)")
    _common(p)
    p.set_defaults(func=cmd_expand_grassmannian)

    p = sub.add_parser("peterson", help="assemble a Peterson element from coefficients")
    _common(p)
    p.add_argument("--radius", type=int)
    p.set_defaults(func=cmd_peterson)

    p = sub.add_parser("poly", help="type A polynomials")
    p.add_argument("kind", choices=("affine-schubert", "affine-grothendieck", "affine-stanley",
                                    "stable-grothendieck", "schubert", "grothendieck"))
    _common(p, lie=False, typea_flags=True)
    p.add_argument("--degree", type=int)
    p.add_argument("--basis", choices=("auto",) + typea.BASES, default="auto")
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("positivity", help="monomial positivity of affine Schubert polynomials")
    _common(p, lie=False, typea_flags=True)
    p.add_argument("--exhaust", action="store_true")
    p.set_defaults(func=cmd_positivity)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:  # --help and malformed flags
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, CartanError, BudgetExceeded, TruncationError, ValueError) as exc:
        print(f"affschub: error: {exc}", file=sys.stderr)
        return 2


def run_config(args: argparse.Namespace) -> RunConfig:
    """The effective configuration of a parsed command line."""
    known = {k: getattr(args, k) for k in asdict(RunConfig("x")) if hasattr(args, k)}
    return RunConfig(**known)


if __name__ == "__main__":
    sys.exit(main())
