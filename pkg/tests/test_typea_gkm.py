"""Agreement between the type-A polynomial side and the localization side."""
import pytest

from affschub.coeffring import Theory
from affschub.gkm import coproduct_terms, cup, endo, peterson_coefficient, schubert_class
from affschub.typea import (SymFunc, affine_grothendieck_terms, affine_group, affine_schubert_terms,
                            affine_stable_grothendieck, affine_stanley)

N = 3
G = affine_group(N)
H = Theory("H", G.rs)
K = Theory("K", G.rs)
GRASS = [u for u in G.ball(6) if G.is_grassmannian(u)]


def words(terms):
    return sorted((a.word, b.word, c) for a, b, c in terms)


@pytest.mark.parametrize("w", G.ball(4), ids=repr)
def test_factor_pairs_match_coproduct_terms(w):
    assert words(affine_schubert_terms(w, N)) == words(coproduct_terms(H, w))
    assert words(affine_grothendieck_terms(w, N)) == words(coproduct_terms(K, w))


@pytest.mark.parametrize("word", [(0,), (2, 1), (1, 0, 2)])
@pytest.mark.parametrize("th", [H, K], ids=["H", "K"])
def test_factor_pairs_rebuild_classes(th, word):
    w = G.from_word(word)
    terms = affine_schubert_terms(w, N) if not th.is_k else affine_grothendieck_terms(w, N)
    parts = [(c, cup(endo("theta", schubert_class(th, a, 0)), endo("eta", schubert_class(th, b, 0))))
             for a, b, c in terms]
    for x in G.ball(4):
        acc = th.zero
        for c, p in parts:
            acc = acc + (p(x) if c > 0 else -p(x))
        assert acc == schubert_class(th, w, 0)(x)


@pytest.mark.parametrize("w", G.ball(4), ids=repr)
def test_stanley_expands_by_peterson_coefficients(w):
    acc = SymFunc("m", {}, w.length)
    for u in GRASS:
        if u.length == w.length:
            c = peterson_coefficient(H, u, w).at_zero()
            acc = acc + affine_stanley(u, N).scale(c)
    assert acc == affine_stanley(w, N)


@pytest.mark.parametrize("w", G.ball(4), ids=repr)
def test_grothendieck_expands_by_k_peterson_coefficients(w):
    D = w.length + 2
    acc = SymFunc("m", {}, D)
    for u in GRASS:
        c = sum(peterson_coefficient(K, u, w).terms.values())
        if c:
            acc = acc + affine_stable_grothendieck(u, N, D).scale(c)
    assert acc == affine_stable_grothendieck(w, N, D)
