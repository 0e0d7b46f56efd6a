"""The ring R16 = F16 + uF16 + vF16 + uvF16 with u^2 = u, v^2 = v.

An element ``a + ub + vc + uvd`` is the 16-bit int ``a<<12 | b<<8 | c<<4 | d``
(so its hex form is the text encoding "abcd").  The Gray map sends it to
``(a+b+c+d, a+c, a+b, a)``, the values at ``(u, v) = (1,1), (0,1), (1,0),
(0,0)``; those evaluations are ring homomorphisms onto F16, so the Gray map is
the CRT isomorphism ``R16 -> F16^4`` and multiplication is coordinatewise
there.

The automorphism ``theta`` acts on Gray coordinates as
``(g1, g2, g3, g4) -> (g4^4, g3^4, g2^4, g1^4)``.
"""

from __future__ import annotations

import string
from collections.abc import Iterator

from .gf16 import FROB, INV, MUL, Gf16

GrayVector = tuple[Gf16, Gf16, Gf16, Gf16]

SIZE = 1 << 16

_xor = int.__xor__


class R16Elem(int):
    """Element of R16.  Instances are interned; use ``R16Elem(a, b, c, d)`` or ``from_value``."""

    __slots__ = ()

    def __new__(cls, a: Gf16, b: Gf16, c: Gf16, d: Gf16) -> R16Elem:
        return _ELEMS[(a << 12) | (b << 8) | (c << 4) | d]

    @classmethod
    def from_value(cls, v: int) -> R16Elem:
        return _ELEMS[v]

    @property
    def a(self) -> Gf16:
        return self >> 12

    @property
    def b(self) -> Gf16:
        return (self >> 8) & 15

    @property
    def c(self) -> Gf16:
        return (self >> 4) & 15

    @property
    def d(self) -> Gf16:
        return self & 15

    @property
    def value(self) -> int:
        return int(self)

    def __iter__(self) -> Iterator[Gf16]:
        return iter((self >> 12, (self >> 8) & 15, (self >> 4) & 15, self & 15))

    def __add__(self, other, _e=None):  # type: ignore[override]
        return _e[_xor(self, other)]

    __sub__ = __add__
    __radd__ = __add__

    def __mul__(self, other, _g=None, _m=None, _gi=None, _e=None):  # type: ignore[override]
        # r_mul inlined with table lookups bound as locals; hot path of every skew product
        gx = _g[self]
        gy = _g[other]
        return _e[_gi[(_m[(gx & 0xFF00) | (gy >> 8)] << 8) | _m[((gx & 0xFF) << 8) | (gy & 0xFF)]]]

    def __repr__(self) -> str:
        return f"R16Elem({to_hex(self)!r})"

    def __str__(self) -> str:
        return to_hex(self)

    def is_unit(self) -> bool:
        return all(gray(self))


def _build() -> tuple[list[R16Elem], list[int], list[int], list[int], list[int]]:
    elems = [int.__new__(R16Elem, v) for v in range(SIZE)]
    gray_t = [0] * SIZE
    gray_inv_t = [0] * SIZE
    theta_t = [0] * SIZE
    for v in range(SIZE):
        a, b, c, d = v >> 12, (v >> 8) & 15, (v >> 4) & 15, v & 15
        g = ((a ^ b ^ c ^ d) << 12) | ((a ^ c) << 8) | ((a ^ b) << 4) | a
        gray_t[v] = g
        gray_inv_t[g] = v
        theta_t[v] = (FROB[a ^ b ^ c ^ d] << 12) | (FROB[b ^ d] << 8) | (FROB[c ^ d] << 4) | FROB[d]
    # coordinatewise product of two bytes holding two Gray coordinates each
    mul_bytes = [0] * SIZE
    for x in range(256):
        for y in range(256):
            mul_bytes[(x << 8) | y] = (MUL[(x & 0xF0) | (y >> 4)] << 4) | MUL[((x & 15) << 4) | (y & 15)]
    return elems, gray_t, gray_inv_t, theta_t, mul_bytes


_ELEMS, _GRAY, _GRAY_INV, _THETA, _MUL_BYTES = _build()
R16Elem.__mul__.__defaults__ = (_GRAY, _MUL_BYTES, _GRAY_INV, _ELEMS)
R16Elem.__add__.__defaults__ = (_ELEMS,)

ZERO = R16Elem(0, 0, 0, 0)
ONE = R16Elem(1, 0, 0, 0)
U = R16Elem(0, 1, 0, 0)
V = R16Elem(0, 0, 1, 0)
UV = R16Elem(0, 0, 0, 1)
BASIS = (ONE, U, V, UV)


def scalar(x: Gf16) -> R16Elem:
    return _ELEMS[x << 12]


def r_add(x: R16Elem, y: R16Elem) -> R16Elem:
    return _ELEMS[_xor(x, y)]


def gray(x: R16Elem) -> GrayVector:
    g = _GRAY[x]
    return (g >> 12, (g >> 8) & 15, (g >> 4) & 15, g & 15)


def gray_inv(g: GrayVector) -> R16Elem:
    g1, g2, g3, g4 = g
    return _ELEMS[_GRAY_INV[(g1 << 12) | (g2 << 8) | (g3 << 4) | g4]]


def r_mul(x: R16Elem, y: R16Elem) -> R16Elem:
    gx = _GRAY[x]
    gy = _GRAY[y]
    p = (_MUL_BYTES[(gx & 0xFF00) | (gy >> 8)] << 8) | _MUL_BYTES[((gx & 0xFF) << 8) | (gy & 0xFF)]
    return _ELEMS[_GRAY_INV[p]]


_THETA_ELEMS = [_ELEMS[t] for t in _THETA]

# theta(x): the order-2 automorphism.  A bound list lookup rather than a
# Python function, since it sits in every skew product.
theta = _THETA_ELEMS.__getitem__


def theta_gray(g: GrayVector) -> GrayVector:
    """theta expressed on Gray coordinates: reverse, then Frobenius."""
    return (FROB[g[3]], FROB[g[2]], FROB[g[1]], FROB[g[0]])


def theta_pow(x: R16Elem, i: int) -> R16Elem:
    """theta applied ``i`` times; theta has order 2 so only the parity matters."""
    return _THETA_ELEMS[x] if i & 1 else x


def r_inv(x: R16Elem) -> R16Elem:
    g = gray(x)
    if not all(g):
        raise ZeroDivisionError(f"{to_hex(x)} is not a unit of R16")
    return gray_inv((INV[g[0]], INV[g[1]], INV[g[2]], INV[g[3]]))


def all_elements() -> list[R16Elem]:
    """All 65,536 ring elements in hex order."""
    return list(_ELEMS)


def theta_fixed_elements() -> list[R16Elem]:
    return [x for x in _ELEMS if _THETA[x] == x]


def to_hex(x: R16Elem) -> str:
    return format(int(x), "04X")


def from_hex(s: str) -> R16Elem:
    s = s.strip()
    if len(s) != 4 or not all(ch in string.hexdigits for ch in s):
        raise ValueError(f"R16 word must be 4 hex digits, got {s!r}")
    return _ELEMS[int(s, 16)]
