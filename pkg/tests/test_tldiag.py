import itertools
from math import comb

import pytest

from skeinfaith.qring import LaurentPoly
from skeinfaith.tldiag import (
    LOOP,
    CapCup,
    Crossing,
    DiagramError,
    DiagramWord,
    Kink,
    PlanarMatching,
    TLElement,
    basis_matchings,
    compose,
    resolve,
    resolve_generator,
    resolve_sequential,
    twist_lemma_coefficient,
    twist_word,
)

q = LaurentPoly.monomial(1)
qi = LaurentPoly.monomial(-1)


def sigma(n, i, sign=1):
    return resolve_generator(n, Crossing(i, sign))


def e(n, i):
    return TLElement.e(n, i)


def test_crossing_expansion():
    assert sigma(2, 1) == TLElement.identity(2).scale(q) + e(2, 1).scale(qi)
    assert sigma(2, 1, -1) == TLElement.identity(2).scale(qi) + e(2, 1).scale(q)


def test_loop_value():
    assert LOOP == -(q**2) - qi**2
    m, loops = compose(PlanarMatching.cap_cup(2, 1), PlanarMatching.cap_cup(2, 1))
    assert (m, loops) == (PlanarMatching.cap_cup(2, 1), 1)


@pytest.mark.parametrize("sign, value", [(1, -(q**3)), (-1, -(qi**3))])
def test_kink(sign, value):
    assert resolve_generator(1, Kink(1, sign)) == TLElement.identity(1).scale(value)


def test_kink_on_inner_strand():
    r = resolve(DiagramWord(3, (Kink(2, 1),)))
    assert r == TLElement.identity(3).scale(-(q**3))


@pytest.mark.parametrize("n", range(1, 9))
def test_twist_lemma(n):
    assert twist_lemma_coefficient(n) == LaurentPoly.monomial(n + 2, -1)


def test_twist_word_crossing_census():
    w = twist_word(5)
    assert sum(isinstance(g, Kink) for g in w.gens) == 1
    assert sum(isinstance(g, Crossing) for g in w.gens) == 4


@pytest.mark.parametrize("n", range(2, 7))
def test_reidemeister_two(n):
    for i in range(1, n):
        assert sigma(n, i) * sigma(n, i, -1) == TLElement.identity(n)
        assert sigma(n, i, -1) * sigma(n, i) == TLElement.identity(n)


@pytest.mark.parametrize("n", range(3, 6))
def test_reidemeister_three(n):
    for i in range(1, n - 1):
        assert sigma(n, i) * sigma(n, i + 1) * sigma(n, i) == sigma(n, i + 1) * sigma(n, i) * sigma(n, i + 1)


@pytest.mark.parametrize("n", range(2, 7))
def test_tl_relations(n):
    for i in range(1, n):
        assert e(n, i) * e(n, i) == e(n, i).scale(LOOP)
        for j in (i - 1, i + 1):
            if 1 <= j < n:
                assert e(n, i) * e(n, j) * e(n, i) == e(n, i)
        for j in range(1, n):
            if abs(i - j) > 1:
                assert e(n, i) * e(n, j) == e(n, j) * e(n, i)


@pytest.mark.parametrize("n", range(0, 11))
def test_catalan(n):
    ms = basis_matchings(n)
    assert len(ms) == comb(2 * n, n) // (n + 1)
    assert len(set(ms)) == len(ms)


def test_identity_and_unit():
    for m in basis_matchings(4):
        x = TLElement.of(m, q + 3)
        assert TLElement.identity(4) * x == x == x * TLElement.identity(4)


def test_multiply_associative():
    ms = basis_matchings(4)
    for a, b, c in itertools.islice(itertools.product(ms, repeat=3), 0, None, 37):
        A, B, C = TLElement.of(a), TLElement.of(b), TLElement.of(c)
        assert (A * B) * C == A * (B * C)


def test_sequential_matches_state_sum():
    for text, n in [("s1 s2 s1' e2 k+", 3), ("k- s1' s3 e1 s2", 4), ("s1 s1 s1", 2)]:
        w = DiagramWord.parse(text, n)
        assert resolve(w) == resolve_sequential(w)


def test_parse():
    w = DiagramWord.parse("s1 s2' e1 k+ k2-", 3)
    assert w.gens == (Crossing(1, 1), Crossing(2, -1), CapCup(1), Kink(1, 1), Kink(2, -1))
    assert w.crossings == [0, 1, 3, 4]


@pytest.mark.parametrize("text, n", [("s3", 3), ("e0", 2), ("k4+", 3), ("x1", 2), ("s1", 1)])
def test_parse_rejects(text, n):
    with pytest.raises(DiagramError):
        DiagramWord.parse(text, n)


def test_matching_validation():
    with pytest.raises(DiagramError):
        PlanarMatching(2, (3, 2, 1, 0))  # bottom-left to top-right crosses
    with pytest.raises(DiagramError):
        TLElement.identity(2) * TLElement.identity(3)


def test_through_strands():
    assert PlanarMatching.identity(4).through_strands() == 4
    assert PlanarMatching.cap_cup(4, 2).through_strands() == 2
