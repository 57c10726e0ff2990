import pytest

from stablepieces import weyl as W
from stablepieces.pieces import (PieceLabel, beta_sequence, enumerate_pieces,
                                 group_compactification_count, piece_count_poly,
                                 poincare_polynomial, subsets, terminal_levi, w_J_of)
from stablepieces.qpoly import Q, QPoly
from stablepieces.rootsys import build

P_S3 = QPoly([1, 2, 2, 1])
SMALL = ["A1", "A2", "A3", "B2", "B3", "C3", "G2"]


def e(word, t="A2"):
    return W.from_word(word, build(t))


def test_w_J_examples():
    a2 = build("A2")
    I = a2.index_set
    assert w_J_of(I, W.identity(a2)).is_identity()
    assert w_J_of({1}, e([1, 2])).is_identity()
    w0 = W.longest_element(I, a2)
    for w in W.enumerate_elements(a2):
        assert w_J_of(set(), w) == w0 * w.inverse()


def test_label_rejects_non_min_rep():
    with pytest.raises(ValueError):
        PieceLabel({1}, e([2, 1]))
    with pytest.raises(ValueError):
        beta_sequence({1}, e([1]))


def test_beta_sequence_examples():
    a2 = build("A2")
    chain = beta_sequence(a2.index_set, W.identity(a2))
    assert len(chain.steps) == 1 and chain.terminal == a2.index_set

    chain = beta_sequence({1}, e([1, 2]))
    assert chain.steps[0].u.is_identity()
    assert chain.steps[1].J == frozenset() and chain.terminal == frozenset()

    chain = beta_sequence({1}, e([2]))
    assert chain.steps[0].u.is_identity()
    assert chain.steps[1].u == e([1])
    assert chain.terminal == frozenset()


def test_terminal_levi_examples():
    a2 = build("A2")
    assert terminal_levi(a2.index_set, W.identity(a2)) == a2.index_set
    assert terminal_levi({1, 3}, e([2, 1, 3, 2], "A3"))


def test_chain_json():
    rec = beta_sequence({1}, e([2])).to_json()
    assert rec["J"] == [1] and rec["J_inf"] == []
    assert [s["u"] for s in rec["steps"]] == ["", "1", ""]


def test_piece_count_examples():
    a1 = build("A1")
    s1 = W.from_word([1], a1)
    assert piece_count_poly(PieceLabel(set(), s1)) == 1 + Q
    assert piece_count_poly(PieceLabel({1}, W.identity(a1))) == Q ** 3 - Q
    assert piece_count_poly(PieceLabel({1}, e([1, 2]))) == P_S3 * (Q - 1) * Q


def test_poincare_polynomials():
    assert poincare_polynomial(build("A2")) == P_S3
    assert poincare_polynomial(build("G2")) == (1 + Q) * QPoly.q_integer(6)
    assert poincare_polynomial(build("E8"))(1) == 696729600


def test_compactification_examples():
    a1 = build("A1")
    assert group_compactification_count(a1) == (1 + Q) * (1 + Q * Q)
    assert group_compactification_count(a1) == QPoly([1, 1, 1, 1])
    a2 = build("A2")
    # sum over S3 of q^(l(w0 w) + |L(w0 w)|): lengths 0..3 give 1, 2q^2, 2q^3, q^5
    assert group_compactification_count(a2) == P_S3 * QPoly([1, 0, 2, 2, 0, 1])


def test_enumerate_pieces_counts():
    assert [p.to_json() for p in enumerate_pieces(build("A1"))] == [
        {"J": [], "w": ""}, {"J": [], "w": "1"}, {"J": [1], "w": ""}]
    assert len(enumerate_pieces(build("A2"))) == 13
    g2 = enumerate_pieces(build("G2"))
    assert sum(1 for p in g2 if p.J == {1}) == 6
    assert len(g2) == 12 + 6 + 6 + 1


@pytest.mark.parametrize("t", SMALL)
def test_w_J_bijection(t):
    rs = build(t)
    w0 = W.longest_element(rs.index_set, rs)
    for J in subsets(rs.index_set):
        # J* = {j* : j in J} where -w0 maps alpha_j to alpha_j*
        Jstar = frozenset(k for k in rs.index_set
                          if tuple(-c for c in w0.act_root(rs.simple_root(k)))
                          in {rs.simple_root(j) for j in J})
        dom = W.enumerate_elements(rs, right=J)
        img = {w_J_of(J, w) for w in dom}
        assert len(img) == len(dom)
        assert img == set(W.enumerate_elements(rs, left=Jstar))


@pytest.mark.parametrize("t", SMALL)
def test_chain_invariants(t):
    rs = build(t)
    for p in enumerate_pieces(rs):
        chain = beta_sequence(p.J, p.w)
        assert chain.check() == [], p.to_json()
        assert chain.steps[-1].u.is_identity()


@pytest.mark.parametrize("t", SMALL + ["A4", "B4", "D4"])
def test_partition_identity(t):
    rs = build(t)
    total = QPoly()
    for p in enumerate_pieces(rs):
        total = total + piece_count_poly(p)
    assert total == group_compactification_count(rs)


def test_piece_count_beyond_bound():
    e8 = build("E8")
    w0 = W.longest_element(e8.index_set, e8)
    p = PieceLabel(set(), w0)
    assert piece_count_poly(p) == poincare_polynomial(e8)
