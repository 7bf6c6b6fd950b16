import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from toric_vanishing.gf import make_field
from toric_vanishing.intlin import IntMatrix
from toric_vanishing.polyring import (
    MonomialOrder,
    PolyRing,
    compare,
    is_homogeneous_poly,
    mono_degree,
    to_binomial,
)

from conftest import H2_BETA

F11 = make_field(11)
BETA = IntMatrix(H2_BETA)
S = PolyRing.standard(F11, 4, grading=BETA)


def test_mono_degree():
    assert mono_degree((0, 0, 0, 1), BETA) == (2, 1)
    assert mono_degree((0, 0, 0, 0), BETA) == (0, 0)
    assert mono_degree((2, 1, 0, 0), BETA) == (2, 1)
    with pytest.raises(ValueError):
        mono_degree((1, 2), BETA)


def test_to_binomial():
    assert str(to_binomial((2, 1, 0, -1), S)) == "x1^2*x2 - x4"
    assert to_binomial((0, 0, 0, 0), S).is_zero()
    assert str(to_binomial((5, 0, -5, 0), S)) == "x1^5 - x3^5"


def test_homogeneity():
    assert is_homogeneous_poly(S.parse("x1^2*x2 - x4"), BETA) == (True, (2, 1))
    assert not is_homogeneous_poly(S.parse("x1 - x2"), BETA)[0]
    assert is_homogeneous_poly(S.parse("3"), BETA) == (True, (0, 0))


def test_compare():
    R = PolyRing(F11, ["x", "y", "z"])
    lex = MonomialOrder.lex(3, [2, 1, 0])
    assert compare(lex, (0, 0, 1), (0, 99, 0)) > 0
    assert compare(lex, (1, 2, 3), (1, 2, 3)) == 0
    grev = MonomialOrder.grevlex(3)
    # grevlex: same degree, the smaller last exponent wins
    assert compare(grev, (1, 1, 0), (1, 0, 1)) > 0
    assert compare(grev, (0, 0, 2), (1, 0, 0)) > 0
    assert R.nvars == 3


def test_parse_and_print():
    f = S.parse("x1^2*x2 - x4")
    x1, x2, _, x4 = S.gens
    assert f == x1**2 * x2 - x4
    assert S.parse(str(f)) == f
    assert S.parse("2*x1 + 3*x1") == S.parse("5*x1")
    F4 = make_field(4)
    R = PolyRing.standard(F4, 2)
    g = R.parse("(1+u)*x1 + (u)*x2 + 1")
    assert R.parse(str(g)) == g


def test_parse_errors():
    with pytest.raises(ValueError):
        S.parse("x9 + 1")
    with pytest.raises(ValueError):
        S.parse("x1^")


exps = st.tuples(*[st.integers(min_value=-4, max_value=4)] * 4)
nonneg = st.tuples(*[st.integers(min_value=0, max_value=4)] * 4)
poly_terms = st.dictionaries(nonneg, st.integers(min_value=1, max_value=10), max_size=5)


@given(nonneg, nonneg)
def test_degree_linear(a, b):
    ab = tuple(x + y for x, y in zip(a, b))
    assert mono_degree(ab, BETA) == tuple(x + y for x, y in zip(mono_degree(a, BETA), mono_degree(b, BETA)))


@given(exps)
def test_binomial_properties(m):
    f = to_binomial(m, S)
    assert int(f.evaluate([F11(1)] * 4)) == 0
    assert to_binomial(tuple(-x for x in m), S) == -f


@settings(max_examples=50, deadline=None)
@given(poly_terms, poly_terms, poly_terms)
def test_ring_axioms(a, b, c):
    f, g, h = S.poly(a), S.poly(b), S.poly(c)
    assert (f + g) - g == f
    assert f * (g + h) == f * g + f * h
    assert f * g == g * f
    assert S.parse(str(f)) == f


kernel = st.tuples(st.integers(min_value=-2, max_value=2), st.integers(min_value=-2, max_value=2))


def homogeneous_binomial(a, k):
    # x^a * (x^{v+} - x^{v-}) for v = k1*(1,0,-1,0) + k2*(2,1,0,-1) in ker beta
    v = [k[0] + 2 * k[1], k[1], -k[0], -k[1]]
    plus = tuple(x + max(y, 0) for x, y in zip(a, v))
    minus = tuple(x + max(-y, 0) for x, y in zip(a, v))
    return S.monomial(plus) - S.monomial(minus, 3)


@settings(max_examples=50, deadline=None)
@given(nonneg, kernel, nonneg, kernel)
def test_homogeneous_product(a, k, b, l):
    f, g = homogeneous_binomial(a, k), homogeneous_binomial(b, l)
    ok_f, df = is_homogeneous_poly(f, BETA)
    ok_g, dg = is_homogeneous_poly(g, BETA)
    assert ok_f and ok_g
    ok, d = is_homogeneous_poly(f * g, BETA)
    assert ok and d == tuple(x + y for x, y in zip(df, dg))
