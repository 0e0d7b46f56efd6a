"""GF(16) arithmetic.

Elements are plain ints in ``0..15``; bit ``i`` is the coefficient of
``alpha**i`` in the basis ``{1, alpha, alpha^2, alpha^3}``.  The field is
``F2[alpha] / (alpha^4 + alpha + 1)``.
"""

from __future__ import annotations

import numpy as np

Gf16 = int

MODULUS = 0b10011  # x^4 + x + 1
ORDER = 16

# Additive form of alpha^i, i = 0..14, transcribed from the DNA pair table.
# Used only to cross-check the generated tables.
_TABLE_ADDITIVE = (
    0b0001, 0b0010, 0b0100, 0b1000, 0b0011, 0b0110, 0b1100, 0b1011,
    0b0101, 0b1010, 0b0111, 0b1110, 0b1111, 0b1101, 0b1001,
)


def _clmul(x: int, y: int) -> int:
    """Carry-less multiply followed by reduction mod MODULUS."""
    acc = 0
    for i in range(4):
        if (y >> i) & 1:
            acc ^= x << i
    for i in (6, 5, 4):
        if (acc >> i) & 1:
            acc ^= MODULUS << (i - 4)
    return acc


def _build_tables() -> tuple[list[int], list[int]]:
    exp = [0] * 30
    log = [-1] * 16
    value = 1
    for i in range(15):
        exp[i] = exp[i + 15] = value
        log[value] = i
        value = _clmul(value, 0b0010)
    if value != 1 or sorted(exp[:15]) != list(range(1, 16)):
        raise RuntimeError("alpha does not generate GF(16)*")
    if tuple(exp[:15]) != _TABLE_ADDITIVE:
        raise RuntimeError("generated exp table disagrees with the DNA pair table")
    return exp, log


EXP, LOG = _build_tables()

# Flat 256-entry product table, index (x << 4) | y.
MUL = [0 if x == 0 or y == 0 else EXP[LOG[x] + LOG[y]] for x in range(16) for y in range(16)]
INV = [0] + [EXP[15 - LOG[x]] for x in range(1, 16)]
FROB = [MUL[(MUL[(x << 4) | x] << 4) | MUL[(x << 4) | x]] for x in range(16)]

# numpy views for vectorised kernels
MUL_NP = np.array(MUL, dtype=np.uint8).reshape(16, 16)
FROB_NP = np.array(FROB, dtype=np.uint8)


def gf_add(x: Gf16, y: Gf16) -> Gf16:
    return x ^ y


def gf_mul(x: Gf16, y: Gf16) -> Gf16:
    return MUL[(x << 4) | y]


def gf_inv(x: Gf16) -> Gf16:
    if x == 0:
        raise ZeroDivisionError("0 has no inverse in GF(16)")
    return INV[x]


def gf_frob(x: Gf16) -> Gf16:
    """Return ``x**4``."""
    return FROB[x]


def gf_log(x: Gf16) -> int:
    if x == 0:
        raise ValueError("log of 0 is undefined")
    return LOG[x]


def gf_exp(i: int) -> Gf16:
    return EXP[i % 15]


def gf_pow(x: Gf16, e: int) -> Gf16:
    if e == 0:
        return 1
    if x == 0:
        return 0
    return EXP[(LOG[x] * e) % 15]


def to_hex(x: Gf16) -> str:
    return format(x, "X")


def from_hex(s: str) -> Gf16:
    if len(s) != 1:
        raise ValueError(f"expected one hex digit, got {s!r}")
    return int(s, 16)


def describe(x: Gf16) -> str:
    """Human-readable power form, e.g. ``'a^7'``; ``'0'`` and ``'1'`` for the trivial ones."""
    if x == 0:
        return "0"
    i = LOG[x]
    if i == 0:
        return "1"
    return "a" if i == 1 else f"a^{i}"
