"""Acceptance criteria 1-9.

Run with pytest (a summary line per criterion is printed at the end) or
directly: ``python tests/test_acceptance.py``.
"""
from __future__ import annotations

import sys
import time
from pathlib import Path

import pytest

if __name__ == "__main__":
    here = Path(__file__).resolve().parent
    sys.path[:0] = [str(here.parent / "src"), str(here)]

from affschub.cartan import build_root_system
from affschub.coeffring import Theory
from affschub.gkm import (commutator_with_weight, exact_radius, peterson_assemble, verify_coproduct,
                          verify_divisor, verify_operators, verify_recursion)
from affschub.nilhecke import NilHeckeElement, classical_projection, identity, verify_nilhecke
from affschub.typea import (SymFunc, TensorPoly, XPoly, affine_elements, affine_grothendieck_poly,
                            affine_schubert_poly, affine_stable_grothendieck, monomial_positivity)
from oracles import centralizer_solve

GOLDEN = Path(__file__).parent / "golden"
RESULTS: dict[int, tuple[bool, float, str]] = {}


class Failed(AssertionError):
    pass


def check(cond: bool, msg: str) -> None:
    if not cond:
        raise Failed(msg)


# ------------------------------------------------------------------ criteria

def criterion_1() -> str:
    lines = (GOLDEN / "n3_table.txt").read_text().splitlines()
    check(len(lines) == 7, "golden table must have seven rows")
    for line in lines:
        word, expect = line.split("\t")
        w = () if word == "e" else tuple(int(c) for c in word.split(","))
        got = str(affine_schubert_poly(w, 3))
        check(got == expect, f"w={word}: {got!r} != {expect!r}")
    return "7/7 entries"


def criterion_2() -> str:
    n, D = 3, 6
    one, x1 = XPoly.one(2), XPoly.var(2, 1)
    G21 = affine_stable_grothendieck((2, 1), n, D)
    G2 = affine_stable_grothendieck((2,), n, D)
    expect = TensorPoly.from_pairs(n, D, [(G21, one - x1, 1), (G2, x1 - x1 * x1, 1),
                                          (SymFunc("m", {(): 1}, D), x1 * x1, 1)])
    got = affine_grothendieck_poly((2, 1), n, D)
    check(got == expect, "factorized form differs")
    s2 = G2.truncate(4).to("s").text()
    check(s2 == "s1 - s11 + s111 - s1111", f"G_s2 through degree 4: {s2}")
    s21 = G21.truncate(5).to("s").text()
    check(s21 == "s2 - s21 + s211 - s2111", f"G_s2s1 first four terms: {s21}")
    check(G21.truncate(4).to("s").text() == "s2 - s21 + s211", "G_s2s1 through degree 4")
    return f"D={D}, {sum(len(f) for f in got.terms.values())} terms"


def criterion_3() -> str:
    max_length, radius = 4, 8
    count = 0
    for rs in (build_root_system("A", 1), build_root_system("A", 2), build_root_system("C", 2)):
        for name in ("K", "H"):
            th = Theory(name, rs)
            for variant in ("structure_sheaf", "ideal_sheaf"):
                for w in rs.affine.ball(max_length):
                    rep = verify_coproduct(th, w, radius, variant)
                    check(rep.ok, f"{rs.name} {name} {variant}: {rep.to_json()}")
                    count += rep.points_checked
    return f"{count} point checks, radius {radius}"


def criterion_4() -> str:
    a2, g2 = build_root_system("A", 2), build_root_system("G", 2)
    check(sorted(a2.level(i) for i in (1, 2)) == [1, 1], "A2 levels")
    check(sorted(g2.level(i) for i in (1, 2)) == [1, 2], "G2 levels")
    pts = 0
    for rs, L in ((a2, 4), (g2, 12)):
        for name in ("K", "H"):
            for i in (1, 2):
                rep = verify_divisor(Theory(name, rs), i, L)
                check(rep.status == "pass" and rep.points_checked > 1, f"{rs.name} {name}: {rep.to_json()}")
                pts += rep.points_checked
    return f"{pts} translations"


def criterion_5() -> str:
    cases = 0
    for rs, radius in ((build_root_system("A", 1), 5), (build_root_system("A", 2), 4)):
        for name in ("K", "H"):
            for rep in verify_operators(Theory(name, rs), max_length=4, radius=radius):
                check(rep.ok, f"{rs.name} {name} {rep.name}: {rep.to_json()}")
                cases += rep.cases
    return f"{cases} identity instances"


def criterion_6() -> str:
    for rs in (build_root_system("A", 1), build_root_system("A", 2), build_root_system("C", 2)):
        for name in ("K", "H"):
            rep = verify_nilhecke(Theory(name, rs), y_length=5, ball_radius=3)
            check(rep.ok, f"{rs.name} {name}: {rep.to_json()}")
    return "A1, A2, C2"


def criterion_7() -> str:
    a1 = build_root_system("A", 1)
    H = Theory("H", a1)
    G = a1.affine
    res = peterson_assemble(H, G.s(0), radius=4)
    expect = NilHeckeElement(H, {G.s(0): H.one, G.s(1): H.one, G.from_word([0, 1]): H.weight((2,))})
    check(res.element.truncate(2) == expect, f"A1: {res.element}")
    check(centralizer_solve(H, G.s(0), 2) == expect, "centralizer solve disagrees")
    a2 = build_root_system("A", 2)
    G = a2.affine
    n = 0
    for name in ("K", "H"):
        th = Theory(name, a2)
        for u in G.ball(2):
            if not G.is_grassmannian(u):
                continue
            r = peterson_assemble(th, u)
            check(r.exact and r.radius == exact_radius(th, u), f"{u!r} not exact")
            for lam in ((1, 0), (0, 1)):
                check(commutator_with_weight(th, r.element, lam) == NilHeckeElement(th), f"[k_{u!r}, {lam}] != 0")
            img = classical_projection(r.element)
            check(img == (identity(th) if u == G.identity else NilHeckeElement(th)), f"cl(k_{u!r}) = {img}")
            n += 1
    return f"A1 exact, {n} A2 elements"


def criterion_8() -> str:
    a2 = build_root_system("A", 2)
    pts = 0
    for name in ("K", "H"):
        rep = verify_recursion(Theory(name, a2), 4)
        check(rep.status == "pass", f"{name}: {rep.to_json()}")
        check(rep.checked_elements == len(a2.affine.ball(4)), "not every element was rebuilt")
        pts += rep.checked_points
    return f"{pts} point checks"


def criterion_9() -> str:
    total = 0
    for n in (3, 4):
        for w in affine_elements(n, 5):
            res = monomial_positivity(affine_schubert_poly(w, n))
            check(res.positive, f"n={n} w={w.word}: {res.witness}")
            total += 1
    return f"{total} elements"


CRITERIA = {1: (criterion_1, 10), 2: (criterion_2, 30), 3: (criterion_3, 300), 4: (criterion_4, None),
            5: (criterion_5, None), 6: (criterion_6, None), 7: (criterion_7, None), 8: (criterion_8, None),
            9: (criterion_9, 120)}


def run_criterion(k: int) -> tuple[bool, float, str]:
    fn, limit = CRITERIA[k]
    t0 = time.perf_counter()
    try:
        detail = fn()
        ok = True
    except Failed as exc:
        ok, detail = False, str(exc)
    dt = time.perf_counter() - t0
    if ok and limit is not None and dt > limit:
        ok, detail = False, f"took {dt:.1f}s, limit {limit}s"
    RESULTS[k] = (ok, dt, detail)
    return RESULTS[k]


def summary_line(k: int) -> str:
    ok, dt, detail = RESULTS[k]
    return f"criterion {k}: {'PASS' if ok else 'FAIL'} ({dt:.1f}s) {detail}"


@pytest.mark.parametrize("k", sorted(CRITERIA))
def test_criterion(k, request):
    ok, _, detail = run_criterion(k)
    line = summary_line(k)
    print(line)
    request.config.__dict__.setdefault("acceptance_lines", {})[k] = line
    assert ok, detail


if __name__ == "__main__":
    failed = 0
    for k in sorted(CRITERIA):
        run_criterion(k)
        print(summary_line(k), flush=True)
        failed += not RESULTS[k][0]
    sys.exit(1 if failed else 0)
