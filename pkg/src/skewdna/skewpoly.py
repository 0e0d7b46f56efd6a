"""Skew polynomials over R16 with the twisted rule ``x a = theta(a) x``."""

from __future__ import annotations

from collections.abc import Iterable

from .r16 import ONE, ZERO, R16Elem, from_hex, r_add, r_mul, theta, to_hex


class SkewPolyError(ValueError):
    pass


class SkewPoly:
    """Dense polynomial in R16[x; theta], lowest degree first.

    Trailing zeros are stripped, so the zero polynomial has ``coeffs == ()``
    and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[R16Elem] = ()):
        cs = list(coeffs)
        while cs and cs[-1] == ZERO:
            cs.pop()
        self.coeffs: tuple[R16Elem, ...] = tuple(cs)

    @classmethod
    def monomial(cls, i: int, c: R16Elem = ONE) -> SkewPoly:
        return cls([ZERO] * i + [c])

    @classmethod
    def x_n_minus_1(cls, n: int) -> SkewPoly:
        # characteristic 2: x^n - 1 == x^n + 1
        return cls([ONE] + [ZERO] * (n - 1) + [ONE])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self) -> R16Elem:
        return self.coeffs[-1] if self.coeffs else ZERO

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.lead == ONE

    def coeff(self, i: int) -> R16Elem:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else ZERO

    def padded(self, n: int) -> list[R16Elem]:
        if len(self.coeffs) > n:
            raise SkewPolyError(f"degree {self.degree} does not fit in length {n}")
        return list(self.coeffs) + [ZERO] * (n - len(self.coeffs))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, SkewPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: SkewPoly) -> SkewPoly:
        return sp_add(self, other)

    __sub__ = __add__

    def __mul__(self, other: SkewPoly) -> SkewPoly:
        return sp_mul(self, other)

    def __repr__(self) -> str:
        return f"SkewPoly({to_text(self)!r})"


def scale(c: R16Elem, f: SkewPoly) -> SkewPoly:
    """Left multiplication by a constant: ``c * f``."""
    return SkewPoly(r_mul(c, a) for a in f.coeffs)


def sp_add(f: SkewPoly, g: SkewPoly) -> SkewPoly:
    n = max(len(f.coeffs), len(g.coeffs))
    return SkewPoly(r_add(f.coeff(i), g.coeff(i)) for i in range(n))


def sp_mul(f: SkewPoly, g: SkewPoly) -> SkewPoly:
    if f.is_zero() or g.is_zero():
        return SkewPoly()
    gt = (g.coeffs, tuple(theta(b) for b in g.coeffs))
    out = [ZERO] * (len(f.coeffs) + len(g.coeffs) - 1)
    for i, a in enumerate(f.coeffs):
        if a == ZERO:
            continue
        # x^i b = theta^i(b) x^i
        for j, b in enumerate(gt[i & 1]):
            out[i + j] = r_add(out[i + j], r_mul(a, b))
    return SkewPoly(out)


def sp_right_divmod(f: SkewPoly, g: SkewPoly) -> tuple[SkewPoly, SkewPoly]:
    """Return ``(q, r)`` with ``f = q * g + r`` and ``deg r < deg g``.

    Only monic divisors are accepted.
    """
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if not g.is_monic():
        raise SkewPolyError(f"divisor must be monic, leading coefficient is {to_hex(g.lead)}")
    t = g.degree
    gt = (g.coeffs, tuple(theta(b) for b in g.coeffs))
    r = list(f.coeffs)
    q = [ZERO] * max(len(r) - t, 0)
    for top in range(len(r) - 1, t - 1, -1):
        c = r[top]
        if c == ZERO:
            continue
        s = top - t
        q[s] = c
        # subtract c x^s g = sum c theta^s(g_j) x^(s+j)
        for j, b in enumerate(gt[s & 1]):
            r[s + j] = r_add(r[s + j], r_mul(c, b))
    return SkewPoly(q), SkewPoly(r[:t])


def right_remainder(f: SkewPoly, g: SkewPoly) -> SkewPoly:
    return sp_right_divmod(f, g)[1]


def right_divides_xn_minus_1(g: SkewPoly, n: int) -> bool:
    return right_remainder(SkewPoly.x_n_minus_1(n), g).is_zero()


def apply_theta(g: SkewPoly) -> SkewPoly:
    return SkewPoly(theta(a) for a in g.coeffs)


def is_palindromic(g: SkewPoly) -> bool:
    cs = g.coeffs
    return bool(cs) and all(cs[i] == cs[-1 - i] for i in range(len(cs)))


def is_theta_palindromic(g: SkewPoly) -> bool:
    cs = g.coeffs
    return bool(cs) and all(cs[i] == theta(cs[-1 - i]) for i in range(len(cs)))


def to_text(f: SkewPoly) -> str:
    return ",".join(to_hex(c) for c in f.coeffs) if f.coeffs else "0000"


def from_text(text: str) -> SkewPoly:
    words = text.strip().split(",")
    if not text.strip() or any(not w.strip() for w in words):
        raise SkewPolyError(f"malformed polynomial {text!r}")
    try:
        return SkewPoly(from_hex(w) for w in words)
    except ValueError as exc:
        raise SkewPolyError(str(exc)) from None
