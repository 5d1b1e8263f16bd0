import cmath

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from skeinfaith.qring import (
    CyclotomicElem,
    IntPoly,
    LaurentPoly,
    RingCtx,
    RingMismatchError,
    chebyshev,
    cyclotomic_polynomial,
    eval_poly,
    parse_laurent,
    specialize,
)

q = LaurentPoly.monomial(1)
qi = LaurentPoly.monomial(-1)

laurent = st.dictionaries(st.integers(-12, 12), st.integers(-20, 20), max_size=6).map(LaurentPoly)
nonzero_laurent = laurent.filter(lambda p: not p.is_zero())


@pytest.mark.parametrize("n, coeffs", [
    (0, (2,)),
    (1, (0, 1)),
    (2, (-2, 0, 1)),
    (3, (0, -3, 0, 1)),
    (4, (2, 0, -4, 0, 1)),
])
def test_chebyshev_small(n, coeffs):
    assert chebyshev(n) == IntPoly(coeffs)


def test_chebyshev_matches_sympy_dickson_form():
    # T_n(z) = 2 * Chebyshev_T_n(z/2), computed independently by sympy
    z = sympy.symbols("z")
    for n in range(0, 16):
        ref = sympy.Poly(sympy.expand(2 * sympy.chebyshevt(n, z / 2)), z)
        ours = sum(c * z**i for i, c in enumerate(chebyshev(n).coeffs))
        assert sympy.expand(ours - ref.as_expr()) == 0


def test_eval_examples():
    assert eval_poly(chebyshev(1), q + qi) == q + qi
    assert eval_poly(chebyshev(3), q + qi) == q**3 + qi**3
    gamma = -(q**2) - qi**2
    assert eval_poly(chebyshev(5), gamma, RingCtx.root(5)) == RingCtx.root(5)(-2)


@pytest.mark.parametrize("n", range(21))
def test_chebyshev_characterisation(n):
    assert eval_poly(chebyshev(n), q + qi) == q**n + qi**n


def test_specialize_examples():
    assert specialize(q**3, 3) == CyclotomicElem.constant(1, 3)
    assert specialize(q**2 + q + 1, 3).is_zero()
    assert not specialize(q - 1, 3).is_zero()


def test_arithmetic_examples():
    assert q * qi == LaurentPoly.constant(1)
    assert (q + qi) ** 2 == q**2 + 2 + qi**2
    assert LaurentPoly.monomial(3, -1).is_unit()
    assert not (1 + q).is_unit()
    assert not LaurentPoly.monomial(2, 3).is_unit()


def test_zero_coefficients_dropped():
    p = LaurentPoly({1: 0, 2: 3})
    assert p.terms == {2: 3}
    assert (q - q).is_zero() and (q - q).terms == {}


def test_mixing_rings_rejected():
    with pytest.raises(RingMismatchError):
        q + specialize(q, 5)
    with pytest.raises(RingMismatchError):
        specialize(q, 5) * specialize(q, 7)
    with pytest.raises(RingMismatchError):
        RingCtx.root(3)(specialize(q, 4))


def test_cyclotomic_polynomials_match_sympy():
    x = sympy.symbols("x")
    for n in range(1, 31):
        ref = sympy.Poly(sympy.cyclotomic_poly(n, x), x).all_coeffs()[::-1]
        assert tuple(int(c) for c in ref) == cyclotomic_polynomial(n)


def test_q_is_primitive_root():
    for n in range(1, 13):
        ctx = RingCtx.root(n)
        assert ctx.monomial(n) == ctx.one()
        for k in range(1, n):
            assert ctx.monomial(k) != ctx.one()
        assert ctx.monomial(-1) * ctx.q() == ctx.one()


def _numeric(p: LaurentPoly, n: int) -> complex:
    z = cmath.exp(2j * cmath.pi / n)
    return sum(c * z**e for e, c in p.terms.items())


@settings(max_examples=200)
@given(laurent, st.integers(1, 12))
def test_specialize_zero_iff_numeric_zero(p, n):
    # independent route: evaluate at exp(2 pi i / n) in floating point
    assert specialize(p, n).is_zero() == (abs(_numeric(p, n)) < 1e-6)


@settings(max_examples=200)
@given(laurent, laurent, st.integers(2, 12))
def test_specialize_is_ring_homomorphism(a, b, n):
    assert specialize(a * b, n) == specialize(a, n) * specialize(b, n)
    assert specialize(a + b, n) == specialize(a, n) + specialize(b, n)


@settings(max_examples=200)
@given(nonzero_laurent, nonzero_laurent)
def test_laurent_domain(a, b):
    assert not (a * b).is_zero()


@settings(max_examples=100)
@given(nonzero_laurent, nonzero_laurent, st.integers(1, 12))
def test_cyclotomic_domain(a, b, n):
    sa, sb = specialize(a, n), specialize(b, n)
    if not sa.is_zero() and not sb.is_zero():
        assert not (sa * sb).is_zero()


@settings(max_examples=200)
@given(laurent, laurent, laurent)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@settings(max_examples=200)
@given(laurent)
def test_text_round_trip(p):
    assert parse_laurent(str(p)) == p


@pytest.mark.parametrize("text, expected", [
    ("-1*q^3 + 2*q^-1", LaurentPoly({3: -1, -1: 2})),
    ("q", q),
    ("-q^-2", LaurentPoly.monomial(-2, -1)),
    ("3 - q^2", LaurentPoly({0: 3, 2: -1})),
    ("0", LaurentPoly()),
])
def test_parse_examples(text, expected):
    assert parse_laurent(text) == expected


@pytest.mark.parametrize("bad", ["", "q^", "2q", "1*q^3 2*q", "x^2"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        parse_laurent(bad)


def test_ringctx_parse():
    assert RingCtx.parse("generic").is_generic
    assert RingCtx.parse("root:7").order == 7
    with pytest.raises(ValueError):
        RingCtx.parse("root:0")
    with pytest.raises(ValueError):
        RingCtx.parse("complex")
