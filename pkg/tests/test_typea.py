import itertools
from pathlib import Path

import pytest
import sympy
from hypothesis import given, strategies as st

from affschub.affweyl import compose
from affschub.typea import (SymFunc, TensorPoly, XPoly, affine_elements, affine_grothendieck_poly, affine_group,
                            affine_schubert_poly, affine_stable_grothendieck, affine_stanley,
                            affine_stanley_monomial, cd_word, conjugate, cyclically_decreasing, element,
                            grothendieck_poly, h, kostka, monomial_positivity, partitions, schubert_poly, schur)

GOLDEN = Path(__file__).parent / "golden"


# ---------------------------------------------------------------- oracles

def sym_vars(N):
    return sympy.symbols(f"z1:{N + 1}")


def sym_poly(basis, lam, N):
    """Symmetric polynomial in N variables built directly from the definition."""
    z = sym_vars(N)
    if basis == "m":
        lam = tuple(lam) + (0,) * (N - len(lam))
        if len(lam) > N:
            return sympy.Integer(0)
        return sum(sympy.prod(v ** e for v, e in zip(z, perm)) for perm in set(itertools.permutations(lam)))

    def single(k, elementary):
        if elementary:
            return sum(sympy.prod(c) for c in itertools.combinations(z, k))
        return sum(sympy.prod(c) for c in itertools.combinations_with_replacement(z, k))

    if basis in ("h", "e"):
        return sympy.prod(single(k, basis == "e") for k in lam)
    # Jacobi-Trudi
    L = len(lam)
    if L == 0:
        return sympy.Integer(1)
    mat = sympy.Matrix(L, L, lambda i, j: (single(lam[i] - i + j, False) if lam[i] - i + j >= 0 else 0))
    return mat.det()


def to_sympy(f: SymFunc, N):
    return sympy.expand(sum(c * sym_poly(f.basis, lam, N) for lam, c in f.terms.items()))


def brute_stanley(n, w, comp, demazure):
    """Signed count of sequences of cyclically decreasing elements with the given lengths."""
    G = affine_group(n)
    subsets = {k: [frozenset(c) for c in itertools.combinations(range(n), k)] for k in range(n)}
    total = 0
    for choice in itertools.product(*(subsets[k] for k in comp)):
        x = G.identity
        ok = True
        for A in choice:
            for i in cd_word(n, A):
                if G.is_right_descent(x, i):
                    if not demazure:
                        ok = False
                        break
                else:
                    x = compose(x, G.s(i))
            if not ok:
                break
        if ok and x == w:
            total += (-1) ** (sum(comp) - w.length)
    return total


# ---------------------------------------------------------------- golden values

def test_n3_table_golden():
    lines = (GOLDEN / "n3_table.txt").read_text().splitlines()
    for line in lines:
        word, expect = line.split("\t")
        w = () if word == "e" else tuple(int(c) for c in word.split(","))
        assert str(affine_schubert_poly(w, 3)) == expect


def test_grothendieck_expansions():
    assert affine_stable_grothendieck((2,), 3, 4).to("s").text() == "s1 - s11 + s111 - s1111"
    g = affine_stable_grothendieck((2, 1), 3, 5).to("s")
    assert g.text() == "s2 - s21 + s211 - s2111"
    assert g.truncate(4).text() == "s2 - s21 + s211"


def test_small_polynomials():
    assert str(grothendieck_poly((2,), 3)) == "x1 + x2 - x1*x2"
    assert str(grothendieck_poly((2, 1), 3)) == "x1^2"
    assert str(schubert_poly((2, 1), 3)) == "x1^2"
    assert str(schubert_poly((1, 2), 3)) == "x1*x2"
    assert str(schubert_poly((), 4)) == "1"


def test_affine_grothendieck_s2s1_factorization():
    n, D = 3, 4
    got = affine_grothendieck_poly((2, 1), n, D)
    one = XPoly.one(2)
    x1 = XPoly.var(2, 1)
    expect = TensorPoly.from_pairs(n, D, [
        (affine_stable_grothendieck((2, 1), n, D), one - x1, 1),
        (affine_stable_grothendieck((2,), n, D), x1 - x1 * x1, 1),
        (SymFunc("m", {(): 1}, D), x1 * x1, 1),
    ])
    assert got == expect


def test_positivity_witness():
    res = monomial_positivity(affine_grothendieck_poly((1,), 3, 2))
    assert not res.positive
    assert res.witness == {"term": "m11", "coefficient": -1}
    assert res.to_json()["positive"] is False


# ---------------------------------------------------------------- symmetric functions

def test_partitions_and_kostka():
    assert [len(partitions(d)) for d in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]
    assert partitions(4) == ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))
    assert conjugate((3, 1)) == (2, 1, 1)
    assert kostka((2, 1), (1, 1, 1)) == 2
    assert kostka((3, 2), (2, 2, 1)) == 2
    assert kostka((2, 2), (3, 1)) == 0


@pytest.mark.parametrize("d", [2, 3, 4])
@pytest.mark.parametrize("basis", ["h", "e", "s"])
def test_basis_change_against_polynomials(basis, d):
    N = d
    for lam in partitions(d):
        f = SymFunc(basis, {lam: 1}, d)
        for target in ("m", "h", "e", "s"):
            assert sympy.expand(to_sympy(f.to(target), N) - sym_poly(basis, lam, N)) == 0


@given(st.sampled_from(["m", "h", "e", "s"]), st.sampled_from(["m", "h", "e", "s"]),
       st.dictionaries(st.sampled_from(partitions(4) + partitions(3)), st.integers(-3, 3), max_size=4))
def test_basis_change_round_trip(b1, b2, terms):
    f = SymFunc(b1, terms, 4)
    back = f.to(b2).to(b1)
    assert back.terms == f.terms


@given(st.lists(st.integers(1, 3), min_size=1, max_size=3))
def test_h_is_schur_positive(lam):
    lam = sorted(lam, reverse=True)
    s = h(*lam).to("s")
    assert all(c > 0 for c in s.terms.values())


def test_products():
    assert h(1) * h(1) == schur(2) + schur(1, 1)
    assert (schur(1) * schur(1, 1)).to("s").terms == {(2, 1): 1, (1, 1, 1): 1}


def test_reduce_mod():
    f = SymFunc("m", {(3,): 1, (2, 1): 2, (1, 1, 1): 1}, 3)
    assert f.reduce_mod(3).terms == {(2, 1): 2, (1, 1, 1): 1}


def test_symfunc_json():
    f = affine_stable_grothendieck((2, 1), 3, 5)
    assert SymFunc.from_json(f.to_json()) == f


# ---------------------------------------------------------------- affine Stanley / Grothendieck

def test_cyclically_decreasing_elements():
    cd = cyclically_decreasing(3)
    assert [len(cd[k]) for k in range(3)] == [1, 3, 3]
    assert cd_word(3, {0, 2}) == (0, 2)
    assert cd_word(3, {0, 1}) == (1, 0)
    assert cd_word(4, {3, 0, 1}) == (1, 0, 3)


@pytest.mark.parametrize("n", [3, 4])
def test_stanley_monomials_against_brute_force(n):
    for w in affine_elements(n, 4):
        for k in range(1, w.length + 1):
            for comp in itertools.product(range(n), repeat=k):
                if sum(comp) != w.length:
                    continue
                assert affine_stanley_monomial(w, n, comp) == brute_stanley(n, w, comp, False), (w, comp)


@pytest.mark.parametrize("n", [3, 4])
def test_grothendieck_against_brute_force(n):
    for w in affine_elements(n, 3):
        D = w.length + 2
        g = affine_stable_grothendieck(w, n, D).to("m")
        for d in range(w.length, D + 1):
            for lam in partitions(d):
                if lam and lam[0] >= n:
                    continue
                assert g.terms.get(lam, 0) == brute_stanley(n, w, lam, True), (w, lam)


@pytest.mark.parametrize("n", [3, 4])
def test_stanley_symmetric_and_nonnegative(n):
    G = affine_group(n)
    for u in affine_elements(n, 6):
        if not G.is_grassmannian(u):
            continue
        seen = {}
        for k in range(1, u.length + 1):
            for comp in itertools.product(range(n), repeat=k):
                if sum(comp) != u.length or 0 in comp:
                    continue
                c = affine_stanley_monomial(u, n, comp)
                assert c >= 0
                key = tuple(sorted(comp, reverse=True))
                assert seen.setdefault(key, c) == c


@pytest.mark.parametrize("n", [3, 4])
def test_lowest_grothendieck_term_is_stanley(n):
    for w in affine_elements(n, 4):
        g = affine_stable_grothendieck(w, n, w.length + 1)
        assert g.lowest_part() == affine_stanley(w, n)


# ---------------------------------------------------------------- Schubert / Grothendieck polynomials

def longest(n):
    G = affine_group(n)
    return max(G.finite_elements(), key=lambda x: x.length)


def recursive_family(n, grothendieck):
    """Divided differences down from the longest element, computed with sympy."""
    x = sympy.symbols(f"x1:{n + 1}")
    top = sympy.prod(x[i] ** (n - 1 - i) for i in range(n))
    G = affine_group(n)
    out = {longest(n): top}
    stack = [longest(n)]
    while stack:
        w = stack.pop()
        f = out[w]
        for i in range(1, n):
            if G.is_right_descent(w, i):
                v = compose(w, G.s(i))
                if v in out:
                    continue
                g = f * (1 - x[i]) if grothendieck else f
                swapped = g.subs({x[i - 1]: x[i], x[i]: x[i - 1]}, simultaneous=True)
                out[v] = sympy.expand(sympy.cancel((g - swapped) / (x[i - 1] - x[i])))
                stack.append(v)
    return out, x


def xpoly_to_sympy(p, x):
    return sum(c * sympy.prod(v ** e for v, e in zip(x, k)) for k, c in p.terms.items())


@pytest.mark.parametrize("n", [3, 4])
def test_schubert_against_divided_differences(n):
    fam, x = recursive_family(n, False)
    for w, f in fam.items():
        assert sympy.expand(xpoly_to_sympy(schubert_poly(w, n), x) - f) == 0, w


@pytest.mark.parametrize("n", [3, 4])
def test_grothendieck_against_isobaric_differences(n):
    fam, x = recursive_family(n, True)
    for w, f in fam.items():
        assert sympy.expand(xpoly_to_sympy(grothendieck_poly(w, n), x) - f) == 0, w


def test_grothendieck_lowest_part_is_schubert():
    for n in (3, 4):
        for w in affine_group(n).finite_elements():
            assert grothendieck_poly(w, n).lowest_part() == schubert_poly(w, n)


def test_schubert_divided_difference_with_xpoly():
    n = 4
    G = affine_group(n)
    for w in G.finite_elements():
        for i in range(1, n - 1):
            d = schubert_poly(w, n).divided_difference(i)
            v = compose(w, G.s(i))
            expect = schubert_poly(v, n) if v.length < w.length else XPoly(n - 1)
            assert d == expect


def test_exponent_bound():
    n = 4
    for w in affine_group(n).finite_elements():
        for k in schubert_poly(w, n).terms:
            assert all(e <= n - 1 - i for i, e in enumerate(k))


def test_finite_only():
    with pytest.raises(ValueError):
        schubert_poly((0,), 3)
    with pytest.raises(ValueError):
        grothendieck_poly((0, 1), 3)


# ---------------------------------------------------------------- tensor polynomials

def test_affine_schubert_lowest_part_of_grothendieck():
    for w in affine_elements(3, 3):
        g = affine_grothendieck_poly(w, 3, w.length + 1)
        assert g.lowest_part() == affine_schubert_poly(w, 3, w.length + 1)


def test_tensor_json_and_text():
    p = affine_schubert_poly(element(3, (2, 1)), 3)
    doc = p.to_json()
    assert doc["n"] == 3 and len(doc["pairs"]) == 3
    assert p.text("m") == "m2 + m11 + m1*x1 + x1^2"
