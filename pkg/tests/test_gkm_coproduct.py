import pytest
from hypothesis import given, strategies as st

from affschub.cartan import build_root_system
from affschub.coeffring import Theory
from affschub.gkm import (NoFactorizationFormula, NotCosetInvariant, TruncationError, coproduct_terms, endo,
                          expand_grassmannian, grassmannian_elements, ideal_sheaf_value, schubert_class,
                          schubert_value, verify_coproduct, verify_divisor)

A1 = build_root_system("A", 1)
A2 = build_root_system("A", 2)
C2 = build_root_system("C", 2)
G2 = build_root_system("G", 2)


def words(terms):
    return sorted((a.word, b.word, c) for a, b, c in terms)


def test_terms_for_s0():
    for name in ("K", "H"):
        th = Theory(name, A2)
        G = A2.affine
        assert words(coproduct_terms(th, G.s(0))) == [((0,), (), 1)]


def test_terms_for_finite_generator():
    G = A2.affine
    K, H = Theory("K", A2), Theory("H", A2)
    assert words(coproduct_terms(K, G.s(1))) == [((), (1,), 1), ((1,), (), 1), ((1,), (1,), -1)]
    assert words(coproduct_terms(H, G.s(1))) == [((), (1,), 1), ((1,), (), 1)]
    assert words(coproduct_terms(K, G.s(1), "ideal_sheaf")) == [((), (1,), 1), ((1,), (), 1), ((1,), (1,), 1)]
    with pytest.raises(NoFactorizationFormula):
        coproduct_terms(H, G.s(1), "ideal_sheaf")
    with pytest.raises(ValueError):
        coproduct_terms(K, G.s(1), "other")


def test_second_factor_is_finite():
    for name in ("K", "H"):
        th = Theory(name, A2)
        for w in A2.affine.ball(4):
            for _, w2, _ in coproduct_terms(th, w):
                assert w2.is_finite


@pytest.mark.parametrize("rs", [A1, A2, C2], ids=["A1", "A2", "C2"])
@pytest.mark.parametrize("name", ["K", "H"])
@pytest.mark.parametrize("variant", ["structure_sheaf", "ideal_sheaf"])
def test_small_sweep(rs, name, variant):
    th = Theory(name, rs)
    for w in rs.affine.ball(2):
        rep = verify_coproduct(th, w, 4, variant)
        assert rep.ok, rep.to_json()


def test_radius_must_cover_element():
    th = Theory("H", A1)
    with pytest.raises(TruncationError):
        verify_coproduct(th, A1.affine.from_word([0, 1, 0]), 2)


def test_wrong_formula_is_detected():
    # feeding structure-sheaf terms to the ideal-sheaf values must fail somewhere
    th = Theory("K", A1)
    G = A1.affine
    w = G.s(1)
    terms = coproduct_terms(th, w)
    found = False
    for x in G.ball(3):
        t, v = G.translation(x.mu), G.finite(x.fin)
        rhs = th.zero
        for w1, w2, c in terms:
            rhs = rhs + ideal_sheaf_value(th, w1, t) * ideal_sheaf_value(th, w2, v) * c
        found |= rhs != ideal_sheaf_value(th, w, x)
    assert found


def test_report_records_counts():
    th = Theory("K", A2)
    G = A2.affine
    rep = verify_coproduct(th, G.from_word([1, 0]), 3)
    assert rep.ok and rep.points_checked == len(G.ball(3)) and rep.terms == len(coproduct_terms(th, G.from_word([1, 0])))
    doc = rep.to_json()
    assert doc["element"] == [1, 0] and doc["status"] == "pass"


@given(st.lists(st.integers(0, 2), max_size=3), st.sampled_from(["K", "H"]))
def test_coproduct_at_random_points(word, name):
    th = Theory(name, A2)
    G = A2.affine
    w = G.from_word(word)
    pts = [x for x in G.ball(4) if len(x.word) % 2 == len(word) % 2][:10]
    assert verify_coproduct(th, w, 4, points=pts).ok


# -------------------------------------------------------- Grassmannian expansion

def test_theta_of_finite_class_is_s0():
    for name in ("K", "H"):
        th = Theory(name, A1)
        G = A1.affine
        got = expand_grassmannian(th, endo("theta", schubert_class(th, G.s(1), 8)), 3)
        assert got == {G.s(0): th.one}


def test_grassmannian_classes_expand_to_themselves():
    th = Theory("K", A2)
    for u in grassmannian_elements(th, 3):
        assert expand_grassmannian(th, schubert_class(th, u, 6), 3) == {u: th.one}


def test_grassmannian_elements_are_minimal():
    th = Theory("H", A2)
    G = A2.affine
    us = grassmannian_elements(th, 4)
    assert [len([u for u in us if u.length == k]) for k in range(5)] == [1, 1, 2, 2, 3]
    for u in us:
        assert G.min_coset_rep(u) == u
        assert all(not G.is_right_descent(u, i) for i in G.finite_nodes)


def test_non_invariant_class_rejected():
    th = Theory("H", A1)
    with pytest.raises(NotCosetInvariant):
        expand_grassmannian(th, schubert_class(th, A1.affine.s(1), 6), 3)


def test_theta_expansion_in_a2():
    th = Theory("H", A2)
    G = A2.affine
    for i in (1, 2):
        got = expand_grassmannian(th, endo("theta", schubert_class(th, G.s(i), 10)), 3)
        assert got == {G.s(0): th.one}


# ------------------------------------------------------------------ divisors

@pytest.mark.parametrize("rs", [A1, A2, C2], ids=["A1", "A2", "C2"])
@pytest.mark.parametrize("name", ["K", "H"])
def test_divisor(rs, name):
    th = Theory(name, rs)
    for i in rs.affine.finite_nodes:
        rep = verify_divisor(th, i, 6)
        assert rep.status == "pass", rep.to_json()
        assert rep.level == rs.level(i)


def test_divisor_g2_levels():
    th = Theory("H", G2)
    assert sorted(G2.level(i) for i in (1, 2)) == [1, 2]
    for i in (1, 2):
        assert verify_divisor(th, i, 8).status == "pass"


def test_divisor_values_in_a1():
    th = Theory("K", A1)
    G = A1.affine
    t = G.translation((2,))
    a = schubert_value(th, G.s(1), t)
    b = schubert_value(th, G.s(0), t)
    assert a == b
