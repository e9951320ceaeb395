"""Deterministic random generators shared by the property suites."""

from __future__ import annotations

import random
from fractions import Fraction

from nvol import PolySupport, WeightVector, nv_bound
from nvol.errors import InvalidWeightError


def random_support(rng: random.Random, nvars: int | None = None) -> PolySupport:
    """Random germ support with multiplicity below nvars.

    The low-degree term guarantees that uniform-ish weights are valid
    (w_sum > v), so every generated support has a nonempty valid region.
    """
    m = nvars if nvars is not None else rng.choice((2, 3, 4))
    terms: dict[tuple[int, ...], Fraction] = {}

    low = [0] * m
    low[rng.randrange(m)] = rng.randint(1, m - 1)
    terms[tuple(low)] = Fraction(rng.choice((-3, -2, -1, 1, 2, 3)))

    for _ in range(rng.randint(1, 5)):
        exp = tuple(rng.randint(0, 4) for _ in range(m))
        if sum(exp) == 0 or exp in terms:
            continue
        coef = rng.randint(-5, 5)
        if coef:
            terms[exp] = Fraction(coef)
    return PolySupport.from_terms(m, terms)


def random_exact_weight(rng: random.Random, m: int) -> WeightVector:
    return WeightVector.of(
        tuple(Fraction(rng.randint(1, 12), rng.randint(1, 12)) for _ in range(m))
    )


def random_float_weight(rng: random.Random, m: int) -> WeightVector:
    return WeightVector.of(tuple(rng.uniform(0.05, 3.0) for _ in range(m)))


def random_valid_exact_weight(rng: random.Random, f: PolySupport) -> WeightVector:
    """An exact weight in the valid region of f (w_sum > v_w(f))."""
    for _ in range(200):
        w = random_exact_weight(rng, f.nvars)
        try:
            nv_bound(f, w)
        except InvalidWeightError:
            continue
        return w
    raise AssertionError(f"could not find a valid weight for {f}")
