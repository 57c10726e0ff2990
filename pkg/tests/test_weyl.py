import random
from itertools import product

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import (GROUP_ORDER, bruhat_by_covers, cayley_lengths, perm_of_word,
                     signed_perm_generators)
from stablepieces import weyl as W
from stablepieces.pieces import poincare_polynomial, subsets
from stablepieces.rootsys import build

SMALL = ["A1", "A2", "A3", "B2", "B3", "C3", "G2"]
RANK4 = SMALL + ["A4", "B4", "C4", "D4", "F4"]


def e(word, t):
    return W.from_word(word, build(t))


# ---------------------------------------------------------------- examples

def test_from_word_examples():
    assert e([], "A2").is_identity()
    assert e([1, 1], "A2").is_identity()
    assert e([1, 2, 1], "A2") == e([2, 1, 2], "A2")
    assert e([1, 2], "A2") != e([2, 1], "A2")


def test_lengths_and_words():
    a2 = build("A2")
    w0 = W.longest_element(a2.index_set, a2)
    assert w0.length() == 3 and w0.reduced_word() == (1, 2, 1)
    assert W.longest_element(build("G2").index_set, build("G2")).length() == 6
    assert e([1, 2], "A2").reduced_word() == (1, 2)
    assert W.identity(a2).reduced_word() == ()
    assert W.longest_element({1}, a2) == e([1], "A2")
    assert W.longest_element(set(), a2).is_identity()


def test_descents_and_support():
    assert e([1, 2], "A2").descents_right() == {2}
    assert W.identity(build("A2")).descents_right() == frozenset()
    for t in SMALL:
        rs = build(t)
        w0 = W.longest_element(rs.index_set, rs)
        assert w0.descents_right() == rs.index_set == w0.descents_left()
    assert e([1, 2], "A3").support() == {1, 2}
    a3 = build("A3")
    assert W.longest_element(a3.index_set, a3).support() == {1, 2, 3}


def test_min_reps_and_cosets():
    a2 = build("A2")
    assert W.is_min_rep(W.identity(a2), {1, 2})
    assert W.is_min_rep(e([1, 2], "A2"), {1})
    assert not W.is_min_rep(e([2, 1], "A2"), {1})
    w0 = W.longest_element(a2.index_set, a2)
    x, z = W.coset_decompose(w0, {1})
    assert (x, z) == (e([1, 2], "A2"), e([1], "A2"))
    assert W.coset_decompose(W.identity(a2), {1}) == (W.identity(a2), W.identity(a2))
    assert W.coset_decompose(e([1, 2], "A2"), {1}) == (e([1, 2], "A2"), W.identity(a2))


def test_min_double_rep():
    a2 = build("A2")
    w0 = W.longest_element(a2.index_set, a2)
    s1 = e([1], "A2")
    coset = {a * w0 * b for a in (W.identity(a2), s1) for b in (W.identity(a2), s1)}
    assert W.min_double_rep(w0, {1}, {1}) == min(coset, key=lambda u: u.length())
    assert W.min_double_rep(W.identity(a2), {1}, {2}).is_identity()
    assert W.min_double_rep(e([1, 2], "A2"), {2}, {1}) == e([1, 2], "A2")


def test_bruhat_examples():
    assert W.bruhat_leq(e([1, 2], "A2"), e([1, 2, 1], "A2"))
    assert not W.bruhat_leq(e([1, 2], "A2"), e([2, 1], "A2"))
    a2 = build("A2")
    assert all(W.bruhat_leq(W.identity(a2), w) for w in W.enumerate_elements(a2))


def test_enumeration_examples():
    a2 = build("A2")
    assert len(W.enumerate_elements(a2)) == 6
    assert W.enumerate_elements(a2, right={1}) == [W.identity(a2), e([2], "A2"), e([1, 2], "A2")]
    assert len(W.enumerate_elements(build("F4"))) == 1152


def test_enumeration_bound():
    with pytest.raises(W.EnumerationBoundError):
        W.enumerate_elements(build("E8"))
    with pytest.raises(W.EnumerationBoundError):
        W.enumerate_elements(build("B3"), bound=10)
    assert len(W.enumerate_elements(build("E8"), subgroup={1, 3, 4})) == 24


@pytest.mark.parametrize("t", sorted(GROUP_ORDER))
def test_group_order(t):
    assert W.group_order(build(t)) == GROUP_ORDER[t]


def test_element_arithmetic_in_e8():
    rs = build("E8")
    rng = random.Random(8)
    for _ in range(20):
        w = W.from_word([rng.randint(1, 8) for _ in range(30)], rs)
        assert (w * w.inverse()).is_identity()
        assert W.from_word(w.reduced_word(), rs) == w
        assert w.length() == len(w.reduced_word())
    w0 = W.longest_element(rs.index_set, rs)
    assert w0.length() == 120


# ---------------------------------------------------------------- oracles

@pytest.mark.parametrize("t", ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "D4", "D5"])
def test_lengths_match_signed_permutations(t):
    rs = build(t)
    series, n = rs.type.series, rs.rank
    gens, start = signed_perm_generators(series, n)
    dist = cayley_lengths(gens, start)
    assert len(dist) == W.group_order(rs)
    counts = np.bincount(list(dist.values()))
    assert tuple(int(c) for c in counts) == tuple(poincare_polynomial(rs).coeffs)
    rng = random.Random(t)
    for _ in range(200):
        word = [rng.randint(1, n) for _ in range(rng.randint(0, 4 * n))]
        assert W.from_word(word, rs).length() == dist[perm_of_word(series, n, word)]


@pytest.mark.parametrize("t", ["A2", "A3", "B2", "B3", "C3", "G2"])
def test_bruhat_matches_cover_oracle(t):
    rs = build(t)
    words, leq = bruhat_by_covers(rs.cartan)
    els = [W.from_word(w, rs) for w in words]
    for a, b in product(range(len(els)), repeat=2):
        assert W.bruhat_leq(els[a], els[b]) == leq[a, b]


def test_bruhat_b3_frozen():
    # number of comparable pairs in B3, from the cover-closure oracle
    g = W.indexed_group(build("B3"))
    assert int(g.leq.sum()) == 847


@pytest.mark.parametrize("t", ["A2", "A3", "B3", "G2"])
def test_bruhat_partial_order(t):
    g = W.indexed_group(build(t))
    leq = g.leq
    n = len(g.elements)
    assert leq[np.arange(n), np.arange(n)].all()
    assert not (leq & leq.T & ~np.eye(n, dtype=bool)).any()
    two = (leq.astype(np.int64) @ leq.astype(np.int64)) > 0
    assert not (two & ~leq).any()


@pytest.mark.parametrize("t", SMALL)
def test_indexed_group_tables(t):
    rs = build(t)
    g = W.indexed_group(rs)
    els = g.elements
    for a in range(0, len(els), max(1, len(els) // 12)):
        for b in range(len(els)):
            assert g.elem(g.mult[a, b]) == els[a] * els[b]
            assert g.leq[a, b] == W.bruhat_leq(els[a], els[b])


@pytest.mark.parametrize("t", SMALL)
def test_length_subadditive(t):
    rs = build(t)
    els = W.enumerate_elements(rs)
    for u in els:
        for v in els:
            uv = u * v
            assert uv.length() <= u.length() + v.length()
            reduced = W.from_word(u.reduced_word() + v.reduced_word(), rs).length() == len(
                u.reduced_word() + v.reduced_word()) and uv.length() == u.length() + v.length()
            assert reduced == (uv.length() == u.length() + v.length())


@pytest.mark.parametrize("t", RANK4)
def test_parabolic_index(t):
    rs = build(t)
    n = W.group_order(rs)
    for J in subsets(rs.index_set):
        assert len(W.enumerate_elements(rs, right=J)) * W.group_order(rs, J) == n
        assert len(W.enumerate_elements(rs, subgroup=J)) == W.group_order(rs, J)


@pytest.mark.parametrize("t", SMALL)
def test_coset_decomposition_is_bijection(t):
    rs = build(t)
    els = W.enumerate_elements(rs)
    for J in subsets(rs.index_set):
        seen = set()
        for w in els:
            x, z = W.coset_decompose(w, J)
            assert W.is_min_rep(x, J) and z.support() <= J
            assert x * z == w and x.length() + z.length() == w.length()
            seen.add((x, z))
        assert len(seen) == len(els)
        assert {x for x, _ in seen} == set(W.enumerate_elements(rs, right=J))


@pytest.mark.parametrize("t", SMALL)
def test_left_descents_and_identity(t):
    rs = build(t)
    for w in W.enumerate_elements(rs):
        assert (not w.descents_right()) == w.is_identity()
        assert w.descents_left() == w.inverse().descents_right()


@given(st.lists(st.integers(1, 6), max_size=40))
def test_reduced_word_roundtrip_e6(word):
    rs = build("E6")
    w = W.from_word(word, rs)
    rw = w.reduced_word()
    assert W.from_word(rw, rs) == w and len(rw) == w.length()
    assert len(rw) <= len(word) and (len(word) - len(rw)) % 2 == 0
    # lexicographically smallest: no reduced word starts with a smaller letter
    if rw:
        assert min(w.descents_left()) == rw[0]


def test_word_parsing():
    assert W.parse_word("-") == ()
    assert W.parse_word("2 1, 3") == (2, 1, 3)
    with pytest.raises(ValueError):
        W.parse_word("1 x")
    with pytest.raises(ValueError):
        W.from_word([4], build("A2"))
