"""Claim registry: every published reference value, re-derived in one sweep.

Each claim pairs a stable id (safe to pin in CI) with the published
location of the value, the expected value, and a closure that recomputes
it from scratch.  Exact claims compare in rational or surd arithmetic with
zero tolerance; optimizer claims carry a 1e-6 tolerance.  Sections group
claims so a single location can be re-checked in isolation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from .catalog import (
    Ak,
    CAClass,
    CubicFamily,
    CyclicQuotient,
    Smooth,
    ade_family_volume,
    check_nv_mld,
    classify_volume_ge_9,
    cover_transfer,
    known_volume_list,
    mld_of,
    quotient_volume,
)
from .optimizer import OptimizerOptions, minimize_bound
from .screener import allowed_shrinks, liu_lower_bound, screen_fano
from .support import parse_polynomial
from .surd import SurdValue
from .valuation import nv_bound

OPTIMIZER_TOL = 1e-6


@dataclass(frozen=True)
class Claim:
    id: str
    section: str
    source: str
    expected: object
    compute: Callable[[], object]
    tolerance: Optional[float]  # None: exact (or literal) equality


@dataclass(frozen=True)
class ClaimResult:
    id: str
    section: str
    source: str
    expected: str
    computed: str
    delta: Optional[float]
    tolerance: Optional[float]
    passed: bool


def _minimize_value(poly: str, opts: OptimizerOptions) -> Callable[[], float]:
    def compute() -> float:
        return minimize_bound(parse_polynomial(poly, 4), opts).value

    return compute


def _bound_value(poly: str, weight) -> Callable[[], object]:
    def compute():
        return nv_bound(parse_polynomial(poly, 4), weight).bound

    return compute


_SIX_ROOT_THREE = SurdValue(0, 6, 3)


def build_claims(opts: OptimizerOptions | None = None) -> tuple[Claim, ...]:
    opts = opts or OptimizerOptions()
    claims: list[Claim] = []

    def add(claim_id, section, source, expected, compute, tolerance=None):
        claims.append(Claim(claim_id, section, source, expected, compute, tolerance))

    # The eight A/D/E normal forms with known local volumes.
    ade_rows = [
        ("ex5.1.1-a1-volume", "x1*x2 + x3^2 + x4^2", Fraction(16), "Example 5.1(1), k=1"),
        ("ex5.1.1-a2-volume", "x1*x2 + x3^2 + x4^3", Fraction(125, 9), "Example 5.1(1), k=2"),
        ("ex5.1.1-ak-volume", "x1*x2 + x3^2 + x4^4", Fraction(27, 2), "Example 5.1(1), k>=3"),
        ("ex5.1.3-d4-volume", "x1*x2 + x3^3 + x4^3", Fraction(32, 3), "Example 5.1(3), k=3"),
        ("ex5.1.3-e6-volume", "x1*x2 + x3^3 + x4^4", Fraction(343, 36), "Example 5.1(3), k=4"),
        ("ex5.1.3-e8-volume", "x1*x2 + x3^3 + x4^5", Fraction(2048, 225), "Example 5.1(3), k=5"),
        ("ex5.1.4-dk-volume", "x1*x2 + x3^2*x4 + x4^4", _SIX_ROOT_THREE, "Example 5.1(4)"),
        ("ex5.1.5-e7-volume", "x1*x2 + x3^3 + x3*x4^3", Fraction(250, 27), "Example 5.1(5)"),
    ]
    for claim_id, poly, expected, source in ade_rows:
        add(claim_id, "example-5.1", source, expected,
            _minimize_value(poly, opts), OPTIMIZER_TOL)

    # Closed-form family values, plus one optimizer cross-check at k = 6.
    for k, expected in ((3, Fraction(32, 3)), (4, Fraction(343, 36)),
                        (5, Fraction(2048, 225)), (6, Fraction(9))):
        add(f"cubic-family-k{k}", "cubic-family", "Example 5.1(3) closed form",
            expected, lambda k=k: ade_family_volume(k))
    add("cubic-family-k6-minimize", "cubic-family", "Example 5.1(3), k=6",
        Fraction(9), _minimize_value("x1*x2 + x3^3 + x4^6", opts), OPTIMIZER_TOL)

    # Fixed-weight bounds and screening thresholds.
    add("thresh-mult2-non-cA", "thresholds", "proof bound 27/4 at w=(3,2,2,2)",
        Fraction(27, 4), _bound_value("x1^2 + x2^3 + x3^3 + x4^3", (3, 2, 2, 2)))
    add("thresh-cA3", "thresholds", "proof bound 8 at w=(2,2,1,1)",
        Fraction(8), _bound_value("x1*x2 + x3^4 + x4^4", (2, 2, 1, 1)))
    add("thresh-cA2", "thresholds", "proof bound 32/3 at w=(3,3,2,2)",
        Fraction(32, 3), _bound_value("x1*x2 + x3^3 + x4^3", (3, 3, 2, 2)))
    add("thresh-non-isolated", "thresholds", "proof bound 9 at w=(3,3,2,1)",
        Fraction(9), _bound_value("x1*x2 + x3^3 + x3^2*x4^2", (3, 3, 2, 1)))
    for volume, expected in ((26, Fraction(351, 32)), (22, Fraction(297, 32)),
                             (11, Fraction(297, 64))):
        add(f"thresh-liu-{volume}", "thresholds", f"27V/64 at V={volume}",
            expected, lambda volume=volume: liu_lower_bound(volume))

    # Exact witness evaluations (zero tolerance, surd arithmetic where needed).
    add("witness-a1", "witnesses", "Example 5.1(1) k=1 witness", Fraction(16),
        _bound_value("x1*x2 + x3^2 + x4^2", (1, 1, 1, 1)))
    add("witness-a2", "witnesses", "Example 5.1(1) k=2 witness", Fraction(125, 9),
        _bound_value("x1*x2 + x3^2 + x4^3", (3, 3, 3, 2)))
    add("witness-ak", "witnesses", "Example 5.1(1) k>=3 witness", Fraction(27, 2),
        _bound_value("x1*x2 + x3^2 + x4^4", (2, 2, 2, 1)))
    for k in (3, 4, 5, 6):
        add(f"witness-cubic-k{k}", "witnesses", f"Example 5.1(3) k={k} witness",
            ade_family_volume(k),
            _bound_value(f"x1*x2 + x3^3 + x4^{k}",
                         (Fraction(3, 2), Fraction(3, 2), Fraction(1), Fraction(3, k))))
    add("witness-e7", "witnesses", "Example 5.1(5) witness", Fraction(250, 27),
        _bound_value("x1*x2 + x3^3 + x3*x4^3", (9, 9, 6, 4)))
    add("witness-dk", "witnesses", "Example 5.1(4) surd witness", _SIX_ROOT_THREE,
        _bound_value("x1*x2 + x3^2*x4 + x4^4",
                     (Fraction(1), Fraction(1), SurdValue(-1, 1, 3), SurdValue(4, -2, 3))))

    # Quotient volumes and degree transfer.
    add("quot-order-3", "quotients", "1/3(1,1,1) has volume 9", Fraction(9),
        lambda: quotient_volume(3, 3))
    add("quot-order-1", "quotients", "trivial quotient is smooth", Fraction(27),
        lambda: quotient_volume(3, 1))
    add("quot-order-2", "quotients", "1/2(1,1,1) has volume 27/2", Fraction(27, 2),
        lambda: quotient_volume(3, 2))
    add("cover-double", "quotients", "degree-2 cover doubles the volume", Fraction(9),
        lambda: cover_transfer(Fraction(9, 2), 2))
    add("cover-consistency-r5", "quotients", "27/r recovers 27 on the smooth cover",
        Fraction(27), lambda: quotient_volume(3, 5) * 5)

    # vol <= 9*mld, with the exact equality family.
    add("mld-quotient-3", "mld", "mld of 1/3(1,1,1) is 1", Fraction(1),
        lambda: mld_of(CyclicQuotient(3, (1, 1, 1))))
    add("nvmld-quotient-5", "mld", "equality case 27/5 = 9*(3/5)", "holds,equality",
        lambda: _nvmld_tag(CyclicQuotient(5, (1, 1, 1))))
    add("nvmld-a1", "mld", "strict case 16 < 18", "holds,strict",
        lambda: _nvmld_tag(Ak(1)))
    add("nvmld-smooth", "mld", "equality case 27 = 9*3", "holds,equality",
        lambda: _nvmld_tag(Smooth()))

    # The ten-value list.
    add("volume-list-count", "volume-list", "ten known values in [9, 27]", 10,
        lambda: len(known_volume_list()))
    add("volume-list-order", "volume-list", "ascending exact order",
        "9 < 2048/225 < 250/27 < 343/36 < 6*sqrt(3) < 32/3 < 27/2 < 125/9 < 16 < 27",
        lambda: " < ".join(str(kv.value) for kv in known_volume_list()))

    # Screening lists and monotone shrinkage.
    add("screen-26-allowed", "screening", "allowed classes at V=26",
        "cA1 | cyclic-quotient-1/2(1,1,1)",
        lambda: _allowed_tags(26, False))
    add("screen-26-smoothable", "screening", "smoothable strikes 1/2(1,1,1)",
        "cA1", lambda: _allowed_tags(26, True))
    add("screen-22-allowed", "screening", "allowed classes at V=22",
        "D-infinity | cA1 | cyclic-quotient-1/2(1,1,1) | isolated-cA2",
        lambda: _allowed_tags(22, False))
    add("screen-10-none", "screening", "below every threshold",
        "no-restriction", lambda: _allowed_tags(10, False))
    add("screen-monotone", "screening", "allowed lists shrink as V grows",
        True, _monotone_chain)

    # Classification spot checks.
    add("classify-quotient-1/3(1,1,2)", "classification", "listed quotient type",
        True, lambda: classify_volume_ge_9(CyclicQuotient(3, (1, 1, 2))).ge9)
    add("classify-cA3", "classification", "cA_{>=3} is below 9",
        False, lambda: classify_volume_ge_9(CAClass(3)).ge9)
    add("classify-quotient-1/4", "classification", "27/4 < 9",
        False, lambda: classify_volume_ge_9(CyclicQuotient(4, (1, 1, 3))).ge9)

    return tuple(claims)


def _nvmld_tag(descriptor) -> str:
    check = check_nv_mld(descriptor)
    if not check.holds:
        return "violated"
    return "holds,equality" if check.equality else "holds,strict"


def _allowed_tags(volume: int, smoothable: bool) -> str:
    return " | ".join(sorted(screen_fano(volume, smoothable).allowed_tags))


def _monotone_chain() -> bool:
    reports = [screen_fano(v) for v in (10, 11, 22, 26, 64)]
    return all(
        allowed_shrinks(high.allowed_tags, low.allowed_tags)
        for low, high in zip(reports, reports[1:])
    )


def _display(value) -> str:
    if isinstance(value, float):
        return f"{value:.12g}"
    return str(value)


def run_claim(claim: Claim) -> ClaimResult:
    computed = claim.compute()
    if claim.tolerance is None:
        passed = computed == claim.expected
    else:
        passed = abs(float(computed) - float(claim.expected)) <= claim.tolerance
    delta: Optional[float] = None
    numeric_kinds = (int, Fraction, SurdValue, float)
    if (
        isinstance(claim.expected, numeric_kinds)
        and isinstance(computed, numeric_kinds)
        and not isinstance(claim.expected, bool)
        and not isinstance(computed, bool)
    ):
        delta = abs(float(computed) - float(claim.expected))
    return ClaimResult(
        id=claim.id,
        section=claim.section,
        source=claim.source,
        expected=_display(claim.expected),
        computed=_display(computed),
        delta=delta,
        tolerance=claim.tolerance,
        passed=passed,
    )


def run_claims(
    section: str | None = None, opts: OptimizerOptions | None = None
) -> list[ClaimResult]:
    claims = build_claims(opts)
    if section is not None:
        claims = tuple(c for c in claims if c.section == section)
        if not claims:
            from .errors import InputError

            sections = sorted({c.section for c in build_claims(opts)})
            raise InputError(f"unknown section {section!r}; known: {', '.join(sections)}")
    return [run_claim(c) for c in claims]


def sections() -> tuple[str, ...]:
    seen: list[str] = []
    for claim in build_claims():
        if claim.section not in seen:
            seen.append(claim.section)
    return tuple(seen)
