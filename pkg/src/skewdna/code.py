"""Skew cyclic codes ``C = (g)`` over R16.

A code of even length ``n`` is the left module ``{f g : deg f < k}`` with
``k = n - deg g``.  Since R16 is a product of four copies of F16 via the Gray
map, ``C`` splits into four F16-linear component codes, one per Gray
coordinate, and all distance computations go through them.
"""

from __future__ import annotations

import warnings
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from .gf16 import INV, MUL, MUL_NP
from .r16 import BASIS, R16Elem, gray, r_mul, theta
from .skewpoly import (
    SkewPoly,
    is_palindromic,
    is_theta_palindromic,
    right_divides_xn_minus_1,
    right_remainder,
    scale,
    sp_mul,
    to_text,
)

DEFAULT_BUDGET = 1 << 24

Codeword = list[R16Elem]


class CodeError(ValueError):
    """Invalid code parameters."""


class NotMonicError(CodeError):
    pass


class NotDivisorError(CodeError):
    pass


class OddLengthError(CodeError):
    pass


class BudgetExceeded(RuntimeError):
    """An enumeration would exceed the configured budget."""


@dataclass(frozen=True)
class SkewCyclicCode:
    n: int
    g: SkewPoly

    @property
    def k(self) -> int:
        return self.n - self.g.degree

    @property
    def degree(self) -> int:
        return self.g.degree

    def __str__(self) -> str:
        return f"({to_text(self.g)}) n={self.n} k={self.k}"


@dataclass(frozen=True)
class ComponentCode:
    index: int  # 1..4, Gray coordinate order
    matrix: np.ndarray  # row-reduced generator matrix over GF(16), shape (dim, n)

    @property
    def dimension(self) -> int:
        return self.matrix.shape[0]


def make_code(g: SkewPoly, n: int, allow_odd: bool = False) -> SkewCyclicCode:
    if n <= 0:
        raise CodeError(f"length must be positive, got {n}")
    if n % 2:
        if not allow_odd:
            raise OddLengthError(
                f"length {n} is odd; theta has order 2, so odd-length skew cyclic codes are "
                "ordinary cyclic codes (pass allow_odd to build one anyway)"
            )
        warnings.warn(f"odd length {n}: the code degenerates to an ordinary cyclic code", stacklevel=2)
    if g.degree <= 0:
        raise CodeError(f"generator degree must be positive, got {to_text(g)}")
    if not g.is_monic():
        raise NotMonicError(f"generator {to_text(g)} is not monic")
    if g.degree >= n:
        raise CodeError(f"generator degree {g.degree} must be less than n = {n}")
    if not right_divides_xn_minus_1(g, n):
        raise NotDivisorError(f"{to_text(g)} does not right-divide x^{n} - 1")
    return SkewCyclicCode(n, g)


def encode(code: SkewCyclicCode, f: SkewPoly) -> Codeword:
    if f.degree >= code.k:
        raise CodeError(f"message degree {f.degree} must be below k = {code.k}")
    return sp_mul(f, code.g).padded(code.n)


def contains(code: SkewCyclicCode, c: Sequence[R16Elem]) -> bool:
    if len(c) != code.n:
        return False
    return right_remainder(SkewPoly(c), code.g).is_zero()


def skew_shift(c: Sequence[R16Elem]) -> Codeword:
    """``(theta(c[n-1]), theta(c[0]), ..., theta(c[n-2]))``, i.e. ``x c mod x^n - 1``."""
    return [theta(c[-1])] + [theta(a) for a in c[:-1]]


def spanning_codewords(code: SkewCyclicCode) -> list[Codeword]:
    """The ``4k`` codewords ``e x^j g`` for ``e`` in ``(1, u, v, uv)`` and ``j < k``."""
    out = []
    for j in range(code.k):
        xjg = sp_mul(SkewPoly.monomial(j), code.g)
        for e in BASIS:
            out.append(scale(e, xjg).padded(code.n))
    return out


def random_message(code: SkewCyclicCode, rng: np.random.Generator) -> SkewPoly:
    vals = rng.integers(0, 1 << 16, size=code.k)
    return SkewPoly(R16Elem.from_value(int(v)) for v in vals)


def _rref(rows: list[list[int]]) -> list[list[int]]:
    """Row-reduce a matrix over GF(16); returns the nonzero rows."""
    m = [list(r) for r in rows]
    if not m:
        return []
    ncols = len(m[0])
    pivot_row = 0
    for col in range(ncols):
        pr = next((r for r in range(pivot_row, len(m)) if m[r][col]), None)
        if pr is None:
            continue
        m[pivot_row], m[pr] = m[pr], m[pivot_row]
        inv = INV[m[pivot_row][col]]
        m[pivot_row] = [MUL[(inv << 4) | x] for x in m[pivot_row]]
        for r in range(len(m)):
            if r != pivot_row and m[r][col]:
                f = m[r][col]
                m[r] = [x ^ MUL[(f << 4) | y] for x, y in zip(m[r], m[pivot_row])]
        pivot_row += 1
        if pivot_row == len(m):
            break
    return m[:pivot_row]


def component_codes(code: SkewCyclicCode) -> list[ComponentCode]:
    span = spanning_codewords(code)
    grays = [[gray(a) for a in c] for c in span]
    out = []
    for i in range(4):
        rows = _rref([[g[i] for g in cw] for cw in grays])
        mat = np.array(rows, dtype=np.uint8).reshape(len(rows), code.n)
        out.append(ComponentCode(i + 1, mat))
    return out


def _component_weights(comp: ComponentCode, chunk: int = 1 << 16):
    """Yield Hamming weights of every nonzero codeword of a component code."""
    G = comp.matrix
    dim = G.shape[0]
    if dim == 0:
        return
    total = 16**dim
    for start in range(1, total, chunk):
        idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
        words = np.zeros((idx.size, G.shape[1]), dtype=np.uint8)
        for r in range(dim):
            digit = ((idx >> (4 * r)) & 15).astype(np.uint8)
            words ^= MUL_NP[digit[:, None], G[r][None, :]]
        yield np.count_nonzero(words, axis=1)


def component_distance(comp: ComponentCode) -> int | None:
    """Minimum distance of one component; ``None`` for the zero code."""
    best = None
    for w in _component_weights(comp):
        m = int(w.min())
        best = m if best is None else min(best, m)
    return best


def _check_budget(code: SkewCyclicCode, budget: int) -> None:
    cost = 4 * 16**code.k
    if cost > budget:
        raise BudgetExceeded(f"k = {code.k}: 4*16^k = {cost} component words exceeds budget {budget}")


def component_distances(code: SkewCyclicCode, budget: int = DEFAULT_BUDGET) -> list[int | None]:
    _check_budget(code, budget)
    return [component_distance(c) for c in component_codes(code)]


def min_distance(code: SkewCyclicCode, budget: int = DEFAULT_BUDGET) -> int:
    """Hamming distance over the ``n`` R16 symbols.

    A codeword whose Gray components are ``(c1, c2, c3, c4)`` is nonzero in
    position ``j`` iff some ``ci[j]`` is nonzero, and every single-component
    word lies in ``C``, so the minimum is the smallest component distance.
    """
    ds = [d for d in component_distances(code, budget) if d is not None]
    return min(ds)


def gray_distance(code: SkewCyclicCode, budget: int = DEFAULT_BUDGET) -> int:
    """Hamming distance of the Gray image in ``F16^(4n)``.

    The Gray weight of a codeword is the sum of its component weights; with
    the components independent, the minimum over nonzero codewords is again
    attained with a single nonzero component.
    """
    ds = [d for d in component_distances(code, budget) if d is not None]
    return min(ds)


def params(code: SkewCyclicCode, budget: int = DEFAULT_BUDGET) -> tuple[int, int, int]:
    return code.n, code.k, min_distance(code, budget)


def class_flags(g: SkewPoly) -> dict[str, bool]:
    return {"palindromic": is_palindromic(g), "theta_palindromic": is_theta_palindromic(g)}


def scalar_multiple(r: R16Elem, c: Sequence[R16Elem]) -> Codeword:
    return [r_mul(r, a) for a in c]
