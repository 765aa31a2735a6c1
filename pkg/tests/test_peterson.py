import pytest

from affschub.cartan import build_root_system
from affschub.coeffring import Theory
from affschub.gkm import commutator_with_weight, exact_radius, peterson_assemble, peterson_coefficient
from affschub.nilhecke import NilHeckeElement, classical_projection, identity
from oracles import centralizer_solve

A1 = build_root_system("A", 1)
A2 = build_root_system("A", 2)


@pytest.mark.parametrize("name", ["H", "K"])
def test_a1_against_centralizer_solve(name):
    th = Theory(name, A1)
    G = A1.affine
    u = G.s(0)
    res = peterson_assemble(th, u)
    assert res.exact and res.radius == 2
    assert centralizer_solve(th, u, res.radius) == res.element


def test_a1_frozen_values():
    G = A1.affine
    H, K = Theory("H", A1), Theory("K", A1)
    assert str(peterson_assemble(H, G.s(0)).element) == "A_s0 + A_s1 + (2*w1)*A_s0s1"
    k = peterson_assemble(K, G.s(0)).element
    assert k.coeff(G.from_word([0, 1])) == K.one - K.weight((-2,))


@pytest.mark.parametrize("word", [(0,), (1, 0)])
def test_a2_against_centralizer_solve(word):
    th = Theory("H", A2)
    G = A2.affine
    u = G.from_word(word)
    res = peterson_assemble(th, u)
    assert res.exact
    assert centralizer_solve(th, u, res.radius) == res.element


@pytest.mark.parametrize("name", ["H", "K"])
def test_a2_commute_with_weights(name):
    th = Theory(name, A2)
    G = A2.affine
    for u in G.ball(3):
        if not G.is_grassmannian(u):
            continue
        res = peterson_assemble(th, u)
        assert res.exact and res.radius == exact_radius(th, u)
        for lam in ((1, 0), (0, 1)):
            assert commutator_with_weight(th, res.element, lam) == NilHeckeElement(th)


@pytest.mark.parametrize("name", ["H", "K"])
def test_classical_image_is_delta(name):
    th = Theory(name, A2)
    G = A2.affine
    for u in G.ball(3):
        if not G.is_grassmannian(u):
            continue
        img = classical_projection(peterson_assemble(th, u).element)
        assert img == (identity(th) if u == G.identity else NilHeckeElement(th))


def test_truncation_is_reported():
    th = Theory("H", A2)
    G = A2.affine
    u = G.from_word([1, 0])
    short = peterson_assemble(th, u, radius=2)
    full = peterson_assemble(th, u)
    assert not short.exact
    assert short.element == full.element.truncate(2)


def test_grassmannian_normalization():
    th = Theory("K", A2)
    G = A2.affine
    u = G.from_word([2, 0])
    el = peterson_assemble(th, u).element
    for v in G.ball(4):
        if G.is_grassmannian(v):
            assert el.coeff(v) == (th.one if v == u else th.zero)
    assert peterson_coefficient(th, u, u) == th.one


def test_non_grassmannian_rejected():
    th = Theory("H", A2)
    with pytest.raises(ValueError):
        peterson_assemble(th, A2.affine.s(1))


@pytest.mark.parametrize("name", ["H", "K"])
def test_a1_elements_commute(name):
    th = Theory(name, A1)
    G = A1.affine
    for u in G.ball(5):
        if G.is_grassmannian(u):
            res = peterson_assemble(th, u)
            assert commutator_with_weight(th, res.element, (1,)) == NilHeckeElement(th)
