"""Acceptance gate: one test per criterion, one printed pass/fail line each.

Run with `pytest tests/test_acceptance.py -v -s` to see the lines.
"""

import functools
import math
import random
import time
from fractions import Fraction

from nvol import (
    Ak,
    CAClass,
    CubicFamily,
    CyclicQuotient,
    Dk,
    Ek,
    INFINITY,
    NoValidWeightError,
    OptimizerOptions,
    Smooth,
    SurdValue,
    WeightVector,
    check_nv_mld,
    classify_volume_ge_9,
    grid_search,
    minimize_bound,
    monomial_valuation,
    nv_bound,
    parse_polynomial,
    prune_support,
    screen_fano,
    known_volume_list,
)
from nvol.screener import (
    CA1,
    CA2_ISOLATED,
    D_INFINITY,
    GORENSTEIN_CANONICAL,
    NONGOR_QUOT_CA2,
    NO_RESTRICTION,
    QUOT_HALF,
    allowed_shrinks,
)
from helpers import random_exact_weight, random_support, random_valid_exact_weight

SIX_ROOT_THREE = SurdValue(0, 6, 3)


def criterion(label):
    def wrap(fn):
        @functools.wraps(fn)
        def runner(*args, **kwargs):
            try:
                fn(*args, **kwargs)
            except BaseException:
                print(f"{label}: FAIL")
                raise
            print(f"{label}: pass")

        return runner

    return wrap


@criterion("criterion 1 (fixed-weight bounds, exact, <1ms)")
def test_criterion_1_fixed_weight_bounds():
    cases = [
        ("x1^2 + x2^3 + x3^3 + x4^3", (3, 2, 2, 2), Fraction(27, 4)),
        ("x1*x2 + x3^4 + x4^4", (2, 2, 1, 1), Fraction(8)),
        ("x1*x2 + x3^3 + x4^3", (3, 3, 2, 2), Fraction(32, 3)),
        ("x1*x2 + x3^3 + x3^2*x4^2", (3, 3, 2, 1), Fraction(9)),
    ]
    for poly, weight, expected in cases:
        f = parse_polynomial(poly, 4)
        w = WeightVector.of(weight)
        assert nv_bound(f, w).bound == expected
        elapsed = min(
            _timed(lambda: nv_bound(f, w)) for _ in range(3)
        )
        assert elapsed < 1e-3, f"{poly}: {elapsed * 1e3:.3f} ms"


def _timed(thunk):
    start = time.perf_counter()
    thunk()
    return time.perf_counter() - start


@criterion("criterion 2 (optimizer vs reference volumes, 1e-5, <30s)")
def test_criterion_2_optimizer_reference_volumes():
    opts = OptimizerOptions(grid_denominator=60, restarts=8)
    targets = [
        ("x1*x2 + x3^2 + x4^2", Fraction(16)),
        ("x1*x2 + x3^2 + x4^3", Fraction(125, 9)),
        ("x1*x2 + x3^2 + x4^4", Fraction(27, 2)),
        ("x1*x2 + x3^3 + x4^3", Fraction(32, 3)),
        ("x1*x2 + x3^3 + x4^4", Fraction(343, 36)),
        ("x1*x2 + x3^3 + x4^5", Fraction(2048, 225)),
        ("x1*x2 + x3^3 + x4^6", Fraction(9)),
        ("x1*x2 + x3^2*x4 + x4^4", SIX_ROOT_THREE),
        ("x1*x2 + x3^2*x4", SIX_ROOT_THREE),
        ("x1*x2 + x3^3 + x3*x4^3", Fraction(250, 27)),
    ]
    start = time.perf_counter()
    for poly, expected in targets:
        result = minimize_bound(parse_polynomial(poly, 4), opts)
        assert abs(result.value - float(expected)) <= 1e-5, poly
    assert time.perf_counter() - start < 30


@criterion("criterion 3 (witness weights evaluate exactly, zero tolerance)")
def test_criterion_3_witnesses_exact():
    assert nv_bound(
        parse_polynomial("x1*x2 + x3^2 + x4^2", 4), (1, 1, 1, 1)
    ).bound == 16
    assert nv_bound(
        parse_polynomial("x1*x2 + x3^2 + x4^3", 4), (3, 3, 3, 2)
    ).bound == Fraction(125, 9)
    assert nv_bound(
        parse_polynomial("x1*x2 + x3^2 + x4^4", 4), (2, 2, 2, 1)
    ).bound == Fraction(27, 2)
    for k in (3, 4, 5, 6):
        f = parse_polynomial(f"x1*x2 + x3^3 + x4^{k}", 4)
        w = (Fraction(3, 2), Fraction(3, 2), Fraction(1), Fraction(3, k))
        assert nv_bound(f, w).bound == Fraction(4 * (3 + k) ** 3, 9 * k**2)
    assert nv_bound(
        parse_polynomial("x1*x2 + x3^3 + x3*x4^3", 4), (9, 9, 6, 4)
    ).bound == Fraction(250, 27)
    surd_weight = (Fraction(1), Fraction(1), SurdValue(-1, 1, 3), SurdValue(4, -2, 3))
    assert nv_bound(
        parse_polynomial("x1*x2 + x3^2*x4 + x4^4", 4), surd_weight
    ).bound == SIX_ROOT_THREE


def _free_in_codimension_one(r, weights):
    for k in range(1, r):
        if sum((k * w) % r != 0 for w in weights) < 2:
            return False
    return True


def _effective(r, weights):
    return math.gcd(r, *weights) == 1


@criterion("criterion 4 (classification over the generated family, exact)")
def test_criterion_4_classifier_family():
    for k in range(0, 7):
        assert classify_volume_ge_9(CAClass(k)).ge9 == (k <= 2)

    checked = 0
    for r in range(1, 13):
        for a in range(r):
            for b in range(r):
                for c in range(r):
                    weights = (a, b, c)
                    if r > 1 and not (
                        _effective(r, weights)
                        and _free_in_codimension_one(r, weights)
                    ):
                        continue
                    descriptor = CyclicQuotient(r, weights)
                    verdict = classify_volume_ge_9(descriptor)
                    assert verdict.ge9 == (r <= 3), descriptor
                    # Cross-check against the exact quotient volume.
                    assert verdict.ge9 == (Fraction(27, r) >= 9)
                    checked += 1
    assert checked > 100


@criterion("criterion 5 (vol <= 9*mld with exact equality cases)")
def test_criterion_5_nv_mld_suite():
    for r in range(1, 51):
        check = check_nv_mld(CyclicQuotient(r, (1, 1, 1)))
        assert check.holds and check.equality, r

    check = check_nv_mld(Smooth())
    assert check.holds and check.equality

    strict_cases = (
        [Ak(k) for k in range(1, 7)]
        + [Dk(k) for k in range(4, 9)]
        + [Ek(k) for k in (6, 7, 8)]
        + [CubicFamily(k) for k in (3, 4, 5, 6)]
    )
    for descriptor in strict_cases:
        check = check_nv_mld(descriptor)
        assert check.holds and not check.equality, descriptor


@criterion("criterion 6 (screener thresholds, lists, monotonicity, exact)")
def test_criterion_6_screener():
    assert screen_fano(26).liu_bound == Fraction(351, 32)
    assert screen_fano(22).liu_bound == Fraction(297, 32)
    assert screen_fano(11).liu_bound == Fraction(297, 64)

    assert screen_fano(26).allowed_tags == {CA1, QUOT_HALF}
    assert screen_fano(22).allowed_tags == {CA1, CA2_ISOLATED, D_INFINITY, QUOT_HALF}
    assert screen_fano(11).allowed_tags == {GORENSTEIN_CANONICAL, NONGOR_QUOT_CA2}
    assert screen_fano(10).allowed_tags == {NO_RESTRICTION}

    reports = [screen_fano(v) for v in (10, 11, 22, 26, 64)]
    for low, high in zip(reports, reports[1:]):
        assert allowed_shrinks(high.allowed_tags, low.allowed_tags)

    for v in (11, 22, 26, 64):
        assert QUOT_HALF not in screen_fano(v, smoothable=True).allowed_tags
    assert screen_fano(26, smoothable=True).allowed_tags == {CA1}


@criterion("criterion 7 (property suites, <60s)")
def test_criterion_7_property_suites():
    start = time.perf_counter()
    rng = random.Random(2024)

    # Scaling invariance, exact, 500 support/weight pairs.
    for _ in range(500):
        f = random_support(rng)
        w = random_valid_exact_weight(rng, f)
        lam = Fraction(rng.randint(1, 12), rng.randint(1, 12))
        scaled = WeightVector.of(tuple(lam * x for x in w.entries))
        assert nv_bound(f, scaled).bound == nv_bound(f, w).bound

    # Prune soundness: 200 supports x 50 weights.
    for _ in range(200):
        f = random_support(rng)
        pruned = prune_support(f)
        for _ in range(50):
            w = random_exact_weight(rng, f.nvars)
            assert monomial_valuation(f, w).value == monomial_valuation(pruned, w).value

    # Concavity and homogeneity of v_w, fuzzed.
    for _ in range(300):
        f = random_support(rng)
        w1 = random_exact_weight(rng, f.nvars)
        w2 = random_exact_weight(rng, f.nvars)
        mid = WeightVector.of(tuple((a + b) / 2 for a, b in zip(w1.entries, w2.entries)))
        assert (
            2 * monomial_valuation(f, mid).value
            >= monomial_valuation(f, w1).value + monomial_valuation(f, w2).value
        )
        lam = Fraction(rng.randint(1, 12), rng.randint(1, 12))
        scaled = WeightVector.of(tuple(lam * x for x in w1.entries))
        assert monomial_valuation(f, scaled).value == lam * monomial_valuation(f, w1).value

    # Optimizer never beats its own exact oracle: 50 supports at D = 24.
    opts = OptimizerOptions(grid_denominator=24, restarts=2, max_iters=1500)
    done = 0
    while done < 50:
        f = random_support(rng)
        try:
            _, oracle = grid_search(f, 24)
        except NoValidWeightError:
            continue
        result = minimize_bound(f, opts)
        assert result.value <= float(oracle) + 1e-9
        done += 1

    # Determinism: bit-identical repeat runs.
    f = parse_polynomial("x1*x2 + x3^2*x4 + x4^4", 4)
    assert minimize_bound(f, opts) == minimize_bound(f, opts)

    assert time.perf_counter() - start < 60


@criterion("criterion 8 (the ten-value list, exact order)")
def test_criterion_8_volume_list():
    values = [kv.value for kv in known_volume_list()]
    assert values == [
        Fraction(9),
        Fraction(2048, 225),
        Fraction(250, 27),
        Fraction(343, 36),
        SIX_ROOT_THREE,
        Fraction(32, 3),
        Fraction(27, 2),
        Fraction(125, 9),
        Fraction(16),
        Fraction(27),
    ]
    assert values[0] == 9 and values[-1] == 27
    for smaller, larger in zip(values, values[1:]):
        assert smaller < larger
    for kv in known_volume_list():
        assert kv.witnesses
