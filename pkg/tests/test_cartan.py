import json
from itertools import product

import pytest
from hypothesis import given, strategies as st

from affschub.cartan import (BudgetExceeded, CartanError, build_root_system, cartan_matrix, load_cartan_json,
                             validate_cartan, weyl_act)

KNOWN = [("A", 1, 1), ("A", 2, 3), ("A", 3, 6), ("B", 2, 4), ("B", 3, 9), ("C", 2, 4), ("C", 3, 9),
         ("D", 4, 12), ("G", 2, 6)]


@pytest.mark.parametrize("t,r,npos", KNOWN)
def test_positive_root_counts(t, r, npos):
    rs = build_root_system(t, r)
    assert len(rs.positive_roots) == npos


@pytest.mark.parametrize("t,r,order", [("A", 2, 6), ("A", 3, 24), ("B", 2, 8), ("G", 2, 12), ("D", 4, 192)])
def test_weyl_group_order(t, r, order):
    assert len(build_root_system(t, r).weyl.elements) == order


def test_rank_one(a1):
    assert a1.positive_roots == [(1,)]
    assert a1.highest_root == (1,)
    assert a1.comarks == (1, 1)


def test_a2_data(a2):
    assert a2.highest_root == (1, 1)
    assert a2.comarks == (1, 1, 1)


def test_g2_has_level_two_node(g2):
    assert sorted(g2.comarks) == [1, 1, 2]  # sums to the dual Coxeter number 4
    assert g2.comarks[0] == 1
    assert 2 in g2.comarks


@pytest.mark.parametrize("t,r", [(t, r) for t, r, _ in KNOWN])
def test_highest_root_dominates(t, r):
    rs = build_root_system(t, r)
    th = rs.highest_root
    for beta in rs.positive_roots:
        assert all(a >= b for a, b in zip(th, beta))
    # <theta^vee, theta> = 2
    tw = rs.theta_weight
    assert sum(c * x for c, x in zip(rs.highest_coroot, tw)) == 2


@pytest.mark.parametrize("t,r", [("A", 2), ("B", 3), ("C", 2), ("G", 2), ("D", 4)])
def test_comarks_give_central_element(t, r):
    # sum_i a_i^vee <alpha_i^vee, alpha_j> over affine nodes vanishes: theta^vee = sum comarks * alpha_i^vee
    rs = build_root_system(t, r)
    hc = rs.highest_coroot
    assert rs.comarks[1:] == hc
    assert rs.coroot_of(rs.highest_root) == hc


def test_weyl_act_examples(a1, a2):
    assert weyl_act(a1, [1], (1,)) == (-1,)          # omega1 - alpha1
    assert weyl_act(a2, [], (3, -2)) == (3, -2)
    # s1 s2 applied to omega1: s2 fixes omega1, then s1 gives omega1 - alpha1
    assert weyl_act(a2, [1, 2], (1, 0)) == (-1, 1)
    # omega1 - alpha1 - alpha2 is reached by the word [2, 1]
    assert weyl_act(a2, [2, 1], (1, 0)) == (0, -1)


@pytest.mark.parametrize("t,r", [("A", 2), ("B", 2), ("G", 2), ("A", 3)])
def test_length_changes_by_one(t, r):
    rs = build_root_system(t, r)
    W = rs.weyl
    for w in W.elements:
        for i in range(1, r + 1):
            assert abs((w * W.simple(i)).length - w.length) == 1


@pytest.mark.parametrize("t,r", [("A", 3), ("B", 3), ("G", 2), ("C", 3)])
def test_braid_relations(t, r):
    rs = build_root_system(t, r)
    W = rs.weyl
    a = rs.cartan
    order = {0: 2, 1: 3, 2: 4, 3: 6}
    for i, j in product(range(1, r + 1), repeat=2):
        if i == j:
            continue
        m = order[a[i - 1][j - 1] * a[j - 1][i - 1]]
        assert W.from_word([i, j] * m) == W.from_word([])


@pytest.mark.parametrize("t,r", [("A", 2), ("G", 2), ("B", 3)])
def test_rho_images_distinct(t, r):
    rs = build_root_system(t, r)
    imgs = [w.act(rs.rho) for w in rs.weyl.elements]
    assert len(set(imgs)) == len(imgs)


def test_invalid_cartan():
    with pytest.raises(CartanError):
        validate_cartan([[2, -1], [0, 2]])
    with pytest.raises(CartanError):
        build_root_system(cartan=[[2, -3], [-3, 2]])  # affine/hyperbolic, not finite
    with pytest.raises(CartanError):
        build_root_system("A", 0)


def test_budget_cap():
    with pytest.raises(BudgetExceeded):
        build_root_system("A", 3, cap=10)


def test_budget_env(monkeypatch):
    monkeypatch.setenv("AFFSCHUB_BUDGET", "5")
    with pytest.raises(BudgetExceeded):
        build_root_system("A", 2)


def test_cartan_json_roundtrip(tmp_path):
    doc = {"cartan": cartan_matrix("C", 2), "labels": ["a", "b"]}
    p = tmp_path / "c2.json"
    p.write_text(json.dumps(doc))
    rs = load_cartan_json(str(p))
    assert rs.labels == ("a", "b")
    assert len(rs.positive_roots) == 4
    assert load_cartan_json(json.dumps(doc)).cartan == rs.cartan


@given(st.lists(st.integers(1, 2), max_size=8), st.tuples(st.integers(-4, 4), st.integers(-4, 4)))
def test_weyl_action_is_action(word, lam):
    rs = build_root_system("A", 2)
    # acting by a word equals acting letter by letter from the right end
    direct = weyl_act(rs, word, lam)
    step = lam
    for i in reversed(word):
        step = weyl_act(rs, [i], step)
    assert direct == step
