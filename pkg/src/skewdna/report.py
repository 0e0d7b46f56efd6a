"""Code reports and the two worked example codes."""

from __future__ import annotations

import logging
from dataclasses import dataclass

from .code import DEFAULT_BUDGET, SkewCyclicCode, class_flags, component_codes, gray_distance, min_distance
from .dna import verify_reversible
from .skewpoly import SkewPoly, from_text, to_text

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class ReferenceCode:
    name: str
    n: int
    g: SkewPoly
    h: SkewPoly
    stated: tuple[int, int, int]  # [n, k, d] as published


REFERENCE_CODES = (
    ReferenceCode(
        "odd-degree theta-palindromic",
        6,
        from_text("1000,B220,D330,1000"),
        from_text("1000,B220,B220,1000"),
        (6, 3, 4),
    ),
    ReferenceCode(
        "even-degree palindromic",
        6,
        from_text("1000,8440,0000,8440,1000"),
        from_text("1000,8440,1000"),
        (6, 4, 4),
    ),
)


def reference_for(code: SkewCyclicCode) -> ReferenceCode | None:
    return next((r for r in REFERENCE_CODES if r.g == code.g and r.n == code.n), None)


def code_report(
    code: SkewCyclicCode,
    samples: int = 0,
    seed: int | None = 0,
    budget: int = DEFAULT_BUDGET,
) -> dict:
    rev = verify_reversible(code, samples=samples, seed=seed)
    report = {
        "n": code.n,
        "k": code.k,
        "degree": code.degree,
        "generator": to_text(code.g),
        "class": class_flags(code.g),
        "d_r16": min_distance(code, budget),
        "d_gray_f16": gray_distance(code, budget),
        "component_dimensions": [c.dimension for c in component_codes(code)],
        "reversibility": rev.as_dict(),
    }
    ref = reference_for(code)
    if ref is not None:
        computed = (code.n, code.k, report["d_r16"])
        report["stated_params"] = list(ref.stated)
        if computed != ref.stated:
            msg = (
                f"stated parameters {list(ref.stated)} differ from computed {list(computed)} "
                f"(k = n - deg g = {code.n} - {code.degree})"
            )
            log.warning(msg)
            report["notes"] = [msg]
    return report
