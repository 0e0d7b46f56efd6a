"""DNA 8-mer encoding of R16 codewords and the reversibility check.

Each GF(16) element maps to a DNA pair through a fixed table in which
``x`` and ``x**4`` always get mutually reversed pairs.  A ring element maps
to the four pairs of its Gray vector, and a codeword to the concatenation of
its symbols' 8-mers.  Reversing the DNA string of ``c`` gives the DNA string
of ``rho(c)``, the coordinate reversal of ``c`` with ``theta`` applied, so a
code is reversible exactly when it is closed under ``rho``.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .code import (
    Codeword,
    SkewCyclicCode,
    contains,
    encode,
    random_message,
    spanning_codewords,
)
from .gf16 import EXP, FROB, Gf16
from .r16 import R16Elem, from_hex, gray, gray_inv, theta, to_hex
from .skewpoly import from_text, to_text

ALPHABET = frozenset("ACGT")

# (power of alpha or None for zero, DNA pair)
TABLE1: tuple[tuple[int | None, str], ...] = (
    (None, "AA"),
    (0, "TT"),
    (1, "AT"),
    (2, "GC"),
    (3, "AG"),
    (4, "TA"),
    (5, "CC"),
    (6, "AC"),
    (7, "GT"),
    (8, "CG"),
    (9, "CA"),
    (10, "GG"),
    (11, "CT"),
    (12, "GA"),
    (13, "TG"),
    (14, "TC"),
)

_TAU: list[str] = [""] * 16
for _power, _pair in TABLE1:
    _TAU[0 if _power is None else EXP[_power]] = _pair
_TAU_INV = {p: x for x, p in enumerate(_TAU)}


def _self_check() -> None:
    if len(_TAU_INV) != 16 or sorted(_TAU_INV) != sorted(a + b for a in "ACGT" for b in "ACGT"):
        raise RuntimeError("DNA pair table is not a bijection onto the 16 pairs")
    for x in range(16):
        if _TAU[FROB[x]] != _TAU[x][::-1]:
            raise RuntimeError(f"pair table breaks tau(x^4) = reverse(tau(x)) at x = {x:X}")


_self_check()


class DnaError(ValueError):
    pass


def _check_dna(s: str) -> None:
    bad = set(s) - ALPHABET
    if bad:
        raise DnaError(f"invalid DNA letters {''.join(sorted(bad))!r} in {s!r}")


def tau(x: Gf16) -> str:
    return _TAU[x]


def tau_inv(pair: str) -> Gf16:
    _check_dna(pair)
    if len(pair) != 2:
        raise DnaError(f"expected a DNA pair, got {pair!r}")
    return _TAU_INV[pair]


def phi_dna(x: R16Elem) -> str:
    return "".join(_TAU[t] for t in gray(x))


def dna_to_elem(s: str) -> R16Elem:
    if len(s) != 8:
        raise DnaError(f"expected an 8-mer, got {s!r}")
    return gray_inv(tuple(tau_inv(s[i : i + 2]) for i in range(0, 8, 2)))  # type: ignore[arg-type]


def codeword_to_dna(c: Iterable[R16Elem]) -> str:
    return "".join(phi_dna(a) for a in c)


def dna_to_codeword(s: str) -> Codeword:
    if len(s) % 8:
        raise DnaError(f"DNA length {len(s)} is not a multiple of 8")
    return [dna_to_elem(s[i : i + 8]) for i in range(0, len(s), 8)]


def dna_reverse(s: str) -> str:
    return s[::-1]


def rho(c: Sequence[R16Elem]) -> Codeword:
    """Reverse the coordinates and apply theta to each."""
    return [theta(a) for a in reversed(c)]


@dataclass
class ReversibilityReport:
    checked: int = 0
    samples: int = 0
    passed: bool = True
    witness: Codeword | None = None

    def as_dict(self) -> dict:
        return {
            "checked": self.checked,
            "samples": self.samples,
            "pass": self.passed,
            "witness": None if self.witness is None else ",".join(to_hex(a) for a in self.witness),
        }


def verify_reversible(
    code: SkewCyclicCode,
    samples: int = 0,
    seed: int | None = None,
    basis: bool = True,
) -> ReversibilityReport:
    """Check that ``rho(c)`` is in the code for the spanning codewords.

    ``rho`` is additive and ``rho(r c) = theta(r) rho(c)``, so closure on the
    ``4k`` spanning codewords implies closure on all of ``C``.  ``samples``
    extra random codewords are checked afterwards.
    """
    report = ReversibilityReport()
    candidates: list[Codeword] = []
    if basis:
        candidates.extend(spanning_codewords(code))
    if samples:
        rng = np.random.default_rng(seed)
        candidates.extend(encode(code, random_message(code, rng)) for _ in range(samples))
        report.samples = samples
    for c in candidates:
        report.checked += 1
        if not contains(code, rho(c)):
            report.passed = False
            report.witness = c
            break
    return report


@dataclass
class Codebook:
    n: int
    k: int
    generator: str
    entries: list[tuple[Codeword, str]] = field(default_factory=list)

    def add(self, c: Codeword) -> None:
        self.entries.append((c, codeword_to_dna(c)))


class CodebookFormatError(ValueError):
    pass


def codebook_lines(book: Codebook) -> list[str]:
    lines = [f"# n={book.n} k={book.k} generator={book.generator}"]
    for c, s in book.entries:
        lines.append(f"{','.join(to_hex(a) for a in c)}\t{s}")
    return lines


def write_codebook(book: Codebook, path: str | Path) -> None:
    Path(path).write_text("\n".join(codebook_lines(book)) + "\n", encoding="utf-8")


def parse_codebook(text: str) -> Codebook:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise CodebookFormatError("empty codebook")
    header = lines[0]
    if not header.startswith("#"):
        raise CodebookFormatError("missing header line '# n=.. k=.. generator=..'")
    try:
        fields = dict(tok.split("=", 1) for tok in header[1:].split())
        n, k, generator = int(fields["n"]), int(fields["k"]), fields["generator"]
        from_text(generator)
    except (KeyError, ValueError) as exc:
        raise CodebookFormatError(f"bad header {header!r}: {exc}") from None
    book = Codebook(n, k, generator)
    for lineno, line in enumerate(lines[1:], start=2):
        parts = line.split("\t")
        if len(parts) != 2:
            raise CodebookFormatError(f"line {lineno}: expected '<hex words>\\t<DNA>'")
        try:
            c = [from_hex(w) for w in parts[0].split(",")]
        except ValueError as exc:
            raise CodebookFormatError(f"line {lineno}: {exc}") from None
        if len(c) != n:
            raise CodebookFormatError(f"line {lineno}: {len(c)} symbols, header says n={n}")
        s = parts[1].strip()
        if len(s) != 8 * n or set(s) - ALPHABET:
            raise CodebookFormatError(f"line {lineno}: DNA field must be {8 * n} letters over ACGT")
        book.entries.append((c, s))
    return book


def read_codebook(path: str | Path) -> Codebook:
    return parse_codebook(Path(path).read_text(encoding="utf-8"))


def build_codebook(code: SkewCyclicCode, codewords: Iterable[Codeword]) -> Codebook:
    book = Codebook(code.n, code.k, to_text(code.g))
    for c in codewords:
        book.add(c)
    return book
