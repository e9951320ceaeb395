import random
from fractions import Fraction

import pytest

from nvol import SupportError, is_reduced_bivariate, parse_polynomial
from nvol.squarefree import (
    PolySupport,
    poly_diff,
    poly_gcd,
    poly_mul,
    poly_of_support,
    poly_total_degree,
)


def support_of(poly, terms):
    return PolySupport.from_terms(2, terms)


class TestExamples:
    def test_cusp_is_reduced(self):
        assert is_reduced_bivariate(parse_polynomial("x1^2 + x2^3", 2))

    def test_squared_line_factor(self):
        # x^2 * (x + y)
        assert not is_reduced_bivariate(parse_polynomial("x1^3 + x1^2*x2", 2))

    def test_x_squared_y(self):
        assert not is_reduced_bivariate(parse_polynomial("x1^2*x2", 2))

    def test_node_is_reduced(self):
        assert is_reduced_bivariate(parse_polynomial("x1^2 - x2^2", 2))

    def test_higher_k_normal_form(self):
        # x^2 * (x + y^k) for k = 2, 3.
        for k in (2, 3):
            assert not is_reduced_bivariate(
                parse_polynomial(f"x1^3 + x1^2*x2^{k}", 2)
            )

    def test_nonbivariate_rejected(self):
        with pytest.raises(SupportError):
            is_reduced_bivariate(parse_polynomial("x1*x2 + x3^2", 3))


class TestGcd:
    def test_gcd_with_zero(self):
        f = {(2, 1): Fraction(1)}
        assert poly_gcd(f, {}) == f
        assert poly_gcd({}, f) == f

    def test_common_monomial_factor(self):
        # gcd(x^2 y, x y^2) = x y (up to normalization).
        g = poly_gcd({(2, 1): Fraction(1)}, {(1, 2): Fraction(1)})
        assert poly_total_degree(g) == 2
        assert set(g) == {(1, 1)}

    def test_coprime(self):
        f = poly_of_support(parse_polynomial("x1^2 + x2^3", 2))
        g = poly_of_support(parse_polynomial("x1 + x2", 2))
        assert poly_total_degree(poly_gcd(f, g)) == 0

    def test_shared_linear_factor(self):
        x_plus_y = {(1, 0): Fraction(1), (0, 1): Fraction(1)}
        x_minus_y = {(1, 0): Fraction(1), (0, 1): Fraction(-1)}
        f = poly_mul(x_plus_y, x_minus_y)
        g = poly_mul(x_plus_y, x_plus_y)
        h = poly_gcd(f, g)
        assert poly_total_degree(h) == 1

    def test_derivatives(self):
        f = {(2, 1): Fraction(3)}
        assert poly_diff(f, 0) == {(1, 1): Fraction(6)}
        assert poly_diff(f, 1) == {(2, 0): Fraction(3)}


# -- brute-force oracle: known factorizations ----------------------------------


def _monic_in_x_divides(q, f):
    """Exact division check for q monic in x (long division over Q[y])."""
    f = {k: v for k, v in f.items()}

    def deg_x(p):
        return max((i for i, _ in p), default=-1)

    dq = deg_x(q)
    while f and deg_x(f) >= dq:
        df = deg_x(f)
        lead = {j: c for (i, j), c in f.items() if i == df}
        for (i, j), c in list(q.items()):
            for jj, cc in lead.items():
                key = (i + df - dq, j + jj)
                f[key] = f.get(key, Fraction(0)) - c * cc
        f = {k: v for k, v in f.items() if v}
    return not f


def _random_factors(rng, count):
    """Distinct pairwise-coprime irreducible factors, monic in x."""
    family = []
    for a in range(-4, 5):
        family.append({(1, 0): Fraction(1), (0, 1): Fraction(a)})      # x + a*y
        if a != 0:
            family.append({(1, 0): Fraction(1), (0, 2): Fraction(a)})  # x + a*y^2
    return rng.sample(family, count)


def _to_support(poly):
    return PolySupport.from_terms(2, poly)


def test_square_detection_against_construction_oracle():
    rng = random.Random(37)
    for _ in range(40):
        factors = _random_factors(rng, 4)
        g_parts, h_parts = factors[:2], factors[2:]
        g = g_parts[0]
        for p in g_parts[1:]:
            g = poly_mul(g, p)
        h = h_parts[0]
        for p in h_parts[1:]:
            h = poly_mul(h, p)

        product = poly_mul(g, h)             # g*h: square-free by construction
        squared = poly_mul(poly_mul(g, g), h)  # g^2*h: has a repeated factor

        assert is_reduced_bivariate(_to_support(product))
        assert not is_reduced_bivariate(_to_support(squared))

        # Independent brute-force check: some known factor squares into
        # squared, and no factor in the family squares into product.
        assert any(
            _monic_in_x_divides(poly_mul(q, q), squared) for q in g_parts
        )
        assert not any(
            _monic_in_x_divides(poly_mul(q, q), product)
            for q in _random_factors(random.Random(0), 17)
        )
