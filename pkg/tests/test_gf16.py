import itertools

import pytest

from skewdna import gf16
from skewdna.gf16 import gf_add, gf_exp, gf_frob, gf_inv, gf_log, gf_mul

from oracles import clmul_gf16

A = gf_exp(1)

# additive column of the DNA pair table, alpha^0 .. alpha^14, as (1, a, a^2, a^3) coefficients
TABLE_ADDITIVE = [
    "1", "a", "a2", "a3", "1+a", "a+a2", "a2+a3", "1+a+a3",
    "1+a2", "a+a3", "1+a+a2", "a+a2+a3", "1+a+a2+a3", "1+a2+a3", "1+a3",
]


def _parse(s: str) -> int:
    bits = {"1": 0, "a": 1, "a2": 2, "a3": 3}
    return sum(1 << bits[t] for t in s.split("+"))


def test_examples():
    assert gf_add(A, gf_exp(2)) == gf_exp(5)
    assert gf_add(1, 1) == 0
    assert gf_add(gf_exp(13), gf_exp(14)) == gf_exp(2)
    assert gf_mul(A, gf_exp(2)) == gf_exp(3)
    assert gf_mul(gf_exp(14), A) == 1
    assert gf_mul(gf_exp(4), gf_exp(4)) == gf_exp(8) == 0b0101
    assert gf_inv(1) == 1
    assert gf_inv(A) == gf_exp(14)
    assert gf_inv(gf_exp(5)) == gf_exp(10)
    assert gf_frob(A) == 0b0011 == gf_exp(4)
    assert gf_frob(0) == 0
    assert gf_log(1) == 0
    assert gf_exp(12) == 0b1111
    assert gf_log(gf_exp(7)) == 7


def test_errors():
    with pytest.raises(ZeroDivisionError):
        gf_inv(0)
    with pytest.raises(ValueError):
        gf_log(0)


@pytest.mark.parametrize("i", range(15))
def test_exp_reproduces_table_row(i):
    assert gf_exp(i) == _parse(TABLE_ADDITIVE[i])


def test_mul_matches_carryless_oracle():
    for x, y in itertools.product(range(16), repeat=2):
        assert gf_mul(x, y) == clmul_gf16(x, y)


def test_field_axioms_exhaustive():
    for x, y in itertools.product(range(16), repeat=2):
        assert gf_add(x, y) == gf_add(y, x)
        assert gf_mul(x, y) == gf_mul(y, x)
    for x, y, z in itertools.product(range(16), repeat=3):
        assert gf_mul(gf_mul(x, y), z) == gf_mul(x, gf_mul(y, z))
        assert gf_add(gf_add(x, y), z) == gf_add(x, gf_add(y, z))
        assert gf_mul(x, gf_add(y, z)) == gf_add(gf_mul(x, y), gf_mul(x, z))


def test_frobenius_is_automorphism():
    for x, y in itertools.product(range(16), repeat=2):
        assert gf_frob(gf_add(x, y)) == gf_add(gf_frob(x), gf_frob(y))
        assert gf_frob(gf_mul(x, y)) == gf_mul(gf_frob(x), gf_frob(y))
    assert all(gf_frob(gf_frob(x)) == x for x in range(16))
    assert all(gf_frob(x) == gf16.gf_pow(x, 4) for x in range(16))


def test_multiplicative_group_cyclic():
    orbit = []
    x = 1
    for _ in range(15):
        orbit.append(x)
        x = gf_mul(x, A)
    assert x == 1
    assert sorted(orbit) == list(range(1, 16))
    for x in range(1, 16):
        assert gf_mul(x, gf_inv(x)) == 1
        assert gf_exp(gf_log(x)) == x


def test_hex_encoding():
    assert gf16.to_hex(A) == "2"
    assert gf16.to_hex(gf_exp(4)) == "3"
    assert gf16.to_hex(gf_exp(12)) == "F"
    assert all(gf16.from_hex(gf16.to_hex(x)) == x for x in range(16))
    with pytest.raises(ValueError):
        gf16.from_hex("10")
