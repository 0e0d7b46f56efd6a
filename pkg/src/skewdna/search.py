"""Search for palindromic / theta-palindromic monic right divisors of x^n - 1.

Candidates are handled in Gray (CRT) coordinates as uint8 arrays of shape
``(N, t + 1, 4)``.  Multiplication is coordinatewise there and theta only
exchanges coordinates 1<->4 and 2<->3 (with a Frobenius), so the remainder of
``x^n - 1`` on the coordinate pair ``{1, 4}`` depends only on that pair of
the candidate, and likewise for ``{2, 3}``.  Exhaustive search therefore
tests the two halves separately and takes the product of the survivors.
"""

from __future__ import annotations

import itertools
import math
import os
from collections.abc import Iterable, Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .code import DEFAULT_BUDGET, CodeError
from .gf16 import FROB_NP, MUL_NP
from .r16 import R16Elem, theta_fixed_elements
from .skewpoly import SkewPoly, is_palindromic, is_theta_palindromic, to_text

PALINDROMIC = "palindromic"
THETA_PALINDROMIC = "theta_palindromic"
CLASSES = (PALINDROMIC, THETA_PALINDROMIC)

# Gray coordinate pairs swapped by theta (0-based)
ORBITS = ((0, 3), (1, 2))

_CHUNK = 1 << 15


def thread_count() -> int:
    env = os.environ.get("SKEWDNA_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def to_gray_np(values: np.ndarray) -> np.ndarray:
    """Packed 16-bit ring elements -> Gray coordinates, new trailing axis of 4."""
    v = values.astype(np.uint16)
    a, b, c, d = (v >> 12) & 15, (v >> 8) & 15, (v >> 4) & 15, v & 15
    return np.stack([a ^ b ^ c ^ d, a ^ c, a ^ b, a], axis=-1).astype(np.uint8)


def from_gray_np(g: np.ndarray) -> np.ndarray:
    g1, g2, g3, g4 = (g[..., i].astype(np.uint16) for i in range(4))
    a, b, c, d = g4, g3 ^ g4, g2 ^ g4, g1 ^ g2 ^ g3 ^ g4
    return (a << 12) | (b << 8) | (c << 4) | d


def theta_np(g: np.ndarray) -> np.ndarray:
    return FROB_NP[g[..., ::-1]]


def remainder_xn_minus_1(coeffs: np.ndarray, n: int) -> np.ndarray:
    """Right remainder of ``x^n - 1`` by each monic candidate.

    ``coeffs`` has shape ``(N, t + 1, 4)`` in Gray coordinates with the
    leading coefficient equal to one.  Iterates ``r <- x r mod g`` starting
    from ``r = 1``; returns shape ``(N, t, 4)``.
    """
    N, t1, _ = coeffs.shape
    t = t1 - 1
    low = coeffs[:, :t, :]
    r = np.zeros((N, t, 4), dtype=np.uint8)
    r[:, 0, :] = 1
    for _ in range(n):
        # x * sum r_j x^j = sum theta(r_j) x^(j+1); the x^t term c is replaced by c*g_low
        tr = theta_np(r)
        top = tr[:, t - 1, :]
        shifted = np.zeros_like(r)
        shifted[:, 1:, :] = tr[:, : t - 1, :]
        r = shifted ^ MUL_NP[top[:, None, :], low]
    r[:, 0, :] ^= 1
    return r


def divides_mask(coeffs: np.ndarray, n: int, coords: Sequence[int] = (0, 1, 2, 3)) -> np.ndarray:
    rem = remainder_xn_minus_1(coeffs, n)
    return ~rem[:, :, list(coords)].any(axis=(1, 2))


@dataclass(frozen=True)
class CandidateShape:
    """Which coefficients of a degree-``t`` candidate are free, and how the rest follow."""

    degree: int
    cls: str

    @property
    def pair_slots(self) -> list[int]:
        return list(range(1, (self.degree + 1) // 2))

    @property
    def middle(self) -> int | None:
        t = self.degree
        return t // 2 if t % 2 == 0 and t > 0 else None

    @property
    def n_free(self) -> int:
        return len(self.pair_slots) + (self.middle is not None)

    def slot_sizes(self) -> list[int]:
        sizes = [1 << 16] * len(self.pair_slots)
        if self.middle is not None:
            sizes.append(256 if self.cls == THETA_PALINDROMIC else 1 << 16)
        return sizes

    def space_size(self) -> int:
        return math.prod(self.slot_sizes())

    def exhaustive_cost(self) -> int:
        """Number of half-candidates the split exhaustive search tests."""
        per_orbit = 1
        for size in self.slot_sizes():
            per_orbit *= 16 if size == 256 else 256
        return 2 * per_orbit

    def assemble(self, slots: np.ndarray) -> np.ndarray:
        """Slot values in Gray coordinates ``(N, n_free, 4)`` -> full coefficients ``(N, t+1, 4)``."""
        N = slots.shape[0]
        t = self.degree
        out = np.zeros((N, t + 1, 4), dtype=np.uint8)
        out[:, 0, :] = 1
        out[:, t, :] = 1
        for s, i in enumerate(self.pair_slots):
            out[:, i, :] = slots[:, s, :]
            out[:, t - i, :] = slots[:, s, :] if self.cls == PALINDROMIC else theta_np(slots[:, s, :])
        if self.middle is not None:
            out[:, self.middle, :] = slots[:, -1, :]
        return out

    def orbit_slot_values(self, orbit: tuple[int, int]) -> list[np.ndarray]:
        """Per slot, every value supported on ``orbit`` (other coordinates zero)."""
        i, j = orbit
        vals = []
        for size in self.slot_sizes():
            if size == 256:
                # theta-fixed middle: coordinate j is the Frobenius of coordinate i
                x = np.arange(16, dtype=np.uint8)
                v = np.zeros((16, 4), dtype=np.uint8)
                v[:, i], v[:, j] = x, FROB_NP[x]
            else:
                x, y = np.divmod(np.arange(256), 16)
                v = np.zeros((256, 4), dtype=np.uint8)
                v[:, i], v[:, j] = x, y
            vals.append(v)
        return vals

    def slots_of(self, g: SkewPoly) -> np.ndarray | None:
        """Free-slot values of ``g`` as packed ints, or ``None`` if ``g`` has another shape."""
        if g.degree != self.degree or not g.is_monic() or not class_predicate(self.cls)(g):
            return None
        vals = [g.coeffs[i].value for i in self.pair_slots]
        if self.middle is not None:
            vals.append(g.coeffs[self.middle].value)
        return np.array(vals, dtype=np.uint16)


def class_predicate(cls: str):
    if cls == PALINDROMIC:
        return is_palindromic
    if cls == THETA_PALINDROMIC:
        return is_theta_palindromic
    raise CodeError(f"unknown class {cls!r}; expected one of {CLASSES}")


@dataclass
class SearchResult:
    generators: list[SkewPoly]
    mode: str
    tested: int
    space: int


def _to_polys(coeffs: np.ndarray) -> list[SkewPoly]:
    packed = from_gray_np(coeffs)
    return [SkewPoly(R16Elem.from_value(int(v)) for v in row) for row in packed]


def _parallel_mask(coeffs: np.ndarray, n: int, coords: Sequence[int], threads: int) -> np.ndarray:
    chunks = [coeffs[i : i + _CHUNK] for i in range(0, coeffs.shape[0], _CHUNK)]
    if threads <= 1 or len(chunks) <= 1:
        masks = [divides_mask(c, n, coords) for c in chunks]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            masks = list(pool.map(lambda c: divides_mask(c, n, coords), chunks))
    return np.concatenate(masks) if masks else np.zeros(0, dtype=bool)


def _exhaustive(shape: CandidateShape, n: int, threads: int) -> list[SkewPoly]:
    if shape.n_free == 0:
        cand = shape.assemble(np.zeros((1, 0, 4), dtype=np.uint8))
        return _to_polys(cand[divides_mask(cand, n)])
    halves = []
    for orbit in ORBITS:
        per_slot = shape.orbit_slot_values(orbit)
        idx = np.array(list(itertools.product(*(range(len(v)) for v in per_slot))), dtype=np.int64)
        slots = np.stack([per_slot[s][idx[:, s]] for s in range(len(per_slot))], axis=1)
        mask = _parallel_mask(shape.assemble(slots), n, orbit, threads)
        halves.append(slots[mask])
    a, b = halves
    if not len(a) or not len(b):
        return []
    combined = (a[:, None] ^ b[None, :]).reshape(-1, shape.n_free, 4)
    cand = shape.assemble(combined)
    return _to_polys(cand)


def _decode_indices(idx: np.ndarray, sizes: list[int], fixed: np.ndarray) -> np.ndarray:
    """Mixed-radix indices -> packed slot values ``(N, n_free)``."""
    out = np.zeros((idx.size, len(sizes)), dtype=np.uint16)
    rest = idx.astype(np.int64)
    for s, size in enumerate(sizes):
        digit = rest % size
        rest = rest // size
        out[:, s] = fixed[digit] if size == 256 else digit
    return out


def _draw_rows(rng: np.random.Generator, sizes: list[int], fixed: np.ndarray, count: int) -> np.ndarray:
    space = math.prod(sizes)
    if space < (1 << 62):
        return _decode_indices(rng.choice(space, size=min(count, space), replace=False), sizes, fixed)
    cols = [
        fixed[rng.integers(0, 256, size=count)] if size == 256 else rng.integers(0, size, size=count)
        for size in sizes
    ]
    return np.stack(cols, axis=1).astype(np.uint16)


def _random(
    shape: CandidateShape,
    n: int,
    budget: int,
    seed: int | None,
    include: Iterable[SkewPoly],
    threads: int,
) -> tuple[list[SkewPoly], int]:
    rng = np.random.default_rng(seed)
    sizes = shape.slot_sizes()
    fixed = np.array([x.value for x in theta_fixed_elements()], dtype=np.uint16)
    want = min(budget, shape.space_size())
    rows: list[np.ndarray] = []
    seen: set[bytes] = set()

    def take(row: np.ndarray) -> None:
        key = row.tobytes()
        if key not in seen and len(rows) < want:
            seen.add(key)
            rows.append(row)

    for g in include:
        slots = shape.slots_of(g)
        if slots is None:
            raise CodeError(f"{to_text(g)} is not a degree-{shape.degree} monic {shape.cls} polynomial")
        take(slots)
    while len(rows) < want:
        for row in _draw_rows(rng, sizes, fixed, want - len(rows) + len(seen)):
            take(row)
    packed = np.array(rows, dtype=np.uint16).reshape(len(rows), shape.n_free)
    cand = shape.assemble(to_gray_np(packed))
    mask = _parallel_mask(cand, n, (0, 1, 2, 3), threads)
    return _to_polys(cand[mask]), len(rows)


def search_divisors(
    n: int,
    degree: int,
    cls: str,
    budget: int = DEFAULT_BUDGET,
    seed: int | None = 0,
    mode: str = "auto",
    include: Iterable[SkewPoly] = (),
) -> SearchResult:
    """Monic ``cls`` polynomials of the given degree that right-divide ``x^n - 1``.

    ``mode`` is ``"exhaustive"``, ``"random"`` or ``"auto"`` (exhaustive when
    its cost fits in ``budget``).  Random mode draws ``budget`` distinct
    candidates with ``seed``, after the ones listed in ``include``.  Results
    are sorted by hex encoding.
    """
    if n <= 0 or n % 2:
        raise CodeError(f"search needs a positive even length, got {n}")
    if not 0 < degree < n:
        raise CodeError(f"degree must satisfy 0 < degree < n, got {degree}")
    if budget <= 0:
        raise CodeError("budget must be positive")
    class_predicate(cls)
    shape = CandidateShape(degree, cls)
    threads = thread_count()
    if mode == "auto":
        mode = "exhaustive" if shape.exhaustive_cost() <= budget else "random"
    if mode == "exhaustive":
        gens = _exhaustive(shape, n, threads)
        tested = shape.exhaustive_cost()
    elif mode == "random":
        gens, tested = _random(shape, n, budget, seed, include, threads)
    else:
        raise CodeError(f"unknown search mode {mode!r}")
    gens.sort(key=lambda g: [c.value for c in g.coeffs])
    return SearchResult(gens, mode, tested, shape.space_size())
