import numpy as np
import pytest

from skewdna.code import (
    BudgetExceeded,
    CodeError,
    NotDivisorError,
    NotMonicError,
    OddLengthError,
    component_codes,
    component_distances,
    contains,
    encode,
    gray_distance,
    make_code,
    min_distance,
    params,
    random_message,
    scalar_multiple,
    skew_shift,
    spanning_codewords,
)
from skewdna.gf16 import gf_exp
from skewdna.r16 import ONE, ZERO, R16Elem, scalar, theta
from skewdna.skewpoly import SkewPoly, from_text

from conftest import G_EX1, G_EX2
from oracles import brute_force_distance, right_eval

A = scalar(gf_exp(1))
X_PLUS_A = SkewPoly([A, ONE])
X_PLUS_1 = SkewPoly([ONE, ONE])


@pytest.fixture(scope="module")
def code1():
    return make_code(G_EX1, 6)


@pytest.fixture(scope="module")
def code2():
    return make_code(G_EX2, 6)


def test_make_code(code1, code2):
    assert code1.k == 3
    assert code2.k == 2
    with pytest.raises(OddLengthError):
        make_code(X_PLUS_A, 7)
    with pytest.raises(NotMonicError):
        make_code(from_text("1000,2000"), 6)
    with pytest.raises(NotDivisorError):
        make_code(X_PLUS_A, 4)
    with pytest.raises(CodeError, match="positive"):
        make_code(from_text("2000"), 6)
    with pytest.raises(CodeError):
        make_code(SkewPoly.x_n_minus_1(2), 2)


def test_odd_override_warns():
    with pytest.warns(UserWarning, match="cyclic"):
        code = make_code(X_PLUS_1, 3, allow_odd=True)
    assert code.k == 2


def test_encode(code1):
    assert encode(code1, SkewPoly([ONE])) == G_EX1.padded(6)
    assert encode(code1, SkewPoly()) == [ZERO] * 6
    with pytest.raises(CodeError):
        encode(code1, SkewPoly.monomial(3))


def test_encode_shift_by_x_squared():
    # degree-5 theta-palindromic generator for n = 8: x^2 g is g shifted with theta^2 = id
    from skewdna.search import THETA_PALINDROMIC, search_divisors

    g = search_divisors(8, 5, THETA_PALINDROMIC).generators[-1]
    code = make_code(g, 8)
    assert code.k == 3
    c = encode(code, SkewPoly.monomial(2))
    assert c == [ZERO, ZERO] + list(g.coeffs)
    g0, g1, g2 = g.coeffs[:3]
    assert list(g.coeffs[3:]) == [theta(g2), theta(g1), theta(g0)]


def test_contains(code1):
    assert contains(code1, encode(code1, from_text("2184,0001,1000")))
    assert contains(code1, [ZERO] * 6)
    assert not contains(code1, [ONE] + [ZERO] * 5)
    assert not contains(code1, [ZERO] * 5)


def test_contains_negative_via_right_evaluation():
    code = make_code(X_PLUS_A, 6)
    vec = [ZERO] * 4 + [ONE, scalar(gf_exp(4))]
    assert right_eval(vec, A) == scalar(gf_exp(5))
    assert not contains(code, vec)


def test_component_codes(code1):
    comps = component_codes(code1)
    assert [c.index for c in comps] == [1, 2, 3, 4]
    assert [c.dimension for c in comps] == [3, 3, 3, 3]


def test_component_codes_repetition():
    code = make_code(X_PLUS_1, 2)
    for comp in component_codes(code):
        assert comp.matrix.tolist() == [[1, 1]]


def test_distances(code1, code2):
    assert params(code1) == (6, 3, 4)
    assert params(code2) == (6, 2, 4)
    assert component_distances(code1) == [4, 4, 4, 4]
    assert gray_distance(code1) == gray_distance(code2) == 4
    assert params(make_code(X_PLUS_1, 2)) == (2, 1, 2)


def test_distance_budget(code1):
    with pytest.raises(BudgetExceeded):
        min_distance(code1, budget=1000)


def _linear_divisors_of_x2_minus_1():
    # x + a right-divides x^2 - 1 iff theta(a) a = 1
    roots = [a for a in map(R16Elem.from_value, range(1 << 16)) if theta(a) * a == ONE]
    return [SkewPoly([a, ONE]) for a in roots[:: max(1, len(roots) // 4)]]


@pytest.mark.parametrize("g", _linear_divisors_of_x2_minus_1(), ids=str)
def test_decomposition_matches_brute_force(g):
    code = make_code(g, 2)
    d_r, d_gray = brute_force_distance(g.coeffs, 2, 1)
    assert min_distance(code) == d_r
    assert gray_distance(code) == d_gray


def _random_codewords(code, rng, count):
    return [encode(code, random_message(code, rng)) for _ in range(count)]


@pytest.mark.parametrize("which", ["code1", "code2"])
def test_encode_membership_and_linearity(which, request):
    code = request.getfixturevalue(which)
    rng = np.random.default_rng(5)
    words = _random_codewords(code, rng, 10_000)
    assert all(contains(code, c) for c in words)
    for c1, c2 in zip(words[:500], words[500:1000]):
        assert contains(code, [a + b for a, b in zip(c1, c2)])
        r = R16Elem.from_value(int(rng.integers(0, 1 << 16)))
        assert contains(code, scalar_multiple(r, c1))


@pytest.mark.parametrize("which", ["code1", "code2"])
def test_skew_shift_closure(which, request):
    code = request.getfixturevalue(which)
    rng = np.random.default_rng(6)
    for c in _random_codewords(code, rng, 1000):
        assert contains(code, skew_shift(c))


def test_spanning_codewords(code1):
    span = spanning_codewords(code1)
    assert len(span) == 12
    assert span[0] == G_EX1.padded(6)
    assert all(contains(code1, c) for c in span)
