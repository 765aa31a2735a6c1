import pytest

from affschub.affweyl import compose
from affschub.cartan import build_root_system
from affschub.coeffring import Theory
from affschub.gkm import TensorClass, path_from_grassmannian, rebuild, schubert_value, verify_recursion
from affschub.gkm.recursion import grassmannian_tensor, translation_domain

A1 = build_root_system("A", 1)
A2 = build_root_system("A", 2)
C2 = build_root_system("C", 2)


@pytest.mark.parametrize("rs", [A1, A2, C2], ids=["A1", "A2", "C2"])
def test_paths_climb_to_grassmannian(rs):
    th = Theory("H", rs)
    G = rs.affine
    for x in G.ball(4):
        u, path = path_from_grassmannian(th, x)
        assert G.is_grassmannian(u)
        y = u
        for j in path:
            z = compose(y, G.s(j))
            assert z.length == y.length - 1
            y = z
        assert y == x
        if G.is_grassmannian(x):
            assert (u, path) == (x, [])


def test_path_examples():
    th = Theory("H", A2)
    G = A2.affine
    cases = {(1,): ((1, 0), [0]), (1, 2): ((1, 2, 0), [0]), (0, 1): ((0, 1, 2, 0), [0, 2])}
    for word, (u, path) in cases.items():
        assert path_from_grassmannian(th, G.from_word(word)) == (G.from_word(u), path)


@pytest.mark.parametrize("name", ["K", "H"])
def test_grassmannian_tensor_values(name):
    th = Theory(name, A2)
    G = A2.affine
    u = G.from_word([1, 0])
    dom = translation_domain(th, 4)
    t = grassmannian_tensor(th, u, dom)
    for mu in dom:
        for v in G.finite_elements():
            assert t.value(mu, v) == schubert_value(th, u, G.translation(mu))
    with pytest.raises(KeyError):
        t.value((9, 9), G.identity)


@pytest.mark.parametrize("rs", [A1, C2], ids=["A1", "C2"])
@pytest.mark.parametrize("name", ["K", "H"])
def test_recursion_small(rs, name):
    rep = verify_recursion(Theory(name, rs), 3)
    assert rep.status == "pass", rep.to_json()
    assert rep.checked_elements == len(rs.affine.ball(3))


def test_rebuild_single_element():
    th = Theory("K", A2)
    G = A2.affine
    x = G.from_word([0, 1])
    t = rebuild(th, x)
    assert isinstance(t, TensorClass) and t.domain
    for mu in t.domain:
        for v in G.finite_elements():
            assert t.value(mu, v) == schubert_value(th, x, compose(G.translation(mu), v))


def test_report_json():
    doc = verify_recursion(Theory("H", A1), 2).to_json()
    assert doc["identity"] == "recursion" and doc["status"] == "pass" and doc["checked_points"] > 0
