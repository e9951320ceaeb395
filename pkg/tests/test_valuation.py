import math
import random
from fractions import Fraction

import pytest

from nvol import (
    DimensionMismatchError,
    InputError,
    InvalidWeightError,
    SurdValue,
    WeightVector,
    monomial_valuation,
    multiplicity,
    nv_bound,
    parse_polynomial,
    prune_support,
)
from nvol.catalog import (
    Ak,
    CubicFamily,
    Dk,
    Ek,
    INFINITY,
    catalog_volume,
    defining_support,
)
from helpers import (
    random_exact_weight,
    random_float_weight,
    random_support,
    random_valid_exact_weight,
)

SIX_ROOT_THREE = SurdValue(0, 6, 3)


class TestWeightVector:
    def test_parse_exact_and_numeric(self):
        w = WeightVector.parse("3/2,1,2")
        assert w.is_exact
        assert w.entries == (Fraction(3, 2), Fraction(1), Fraction(2))
        v = WeightVector.parse("1,1,0.7320508,0.5358984")
        assert not v.is_exact

    def test_positivity_enforced(self):
        with pytest.raises(InputError):
            WeightVector.of((1, 0, 1))
        with pytest.raises(InputError):
            WeightVector.of((1.0, -2.0))
        with pytest.raises(InputError):
            WeightVector.parse("1,,2")

    def test_surd_entries_are_exact(self):
        w = WeightVector.of((1, 1, SurdValue(-1, 1, 3), SurdValue(4, -2, 3)))
        assert w.is_exact


class TestMonomialValuation:
    def test_non_isolated_normal_form(self):
        # x1x2 + x3^2(x3 + x4^k), k >= 2: weight (3,3,2,1) gives 6.
        for k in (2, 3, 5):
            f = parse_polynomial(f"x1*x2 + x3^3 + x3^2*x4^{k}", 4)
            assert monomial_valuation(f, (3, 3, 2, 1)).value == 6

    def test_unit_weights_give_multiplicity(self):
        rng = random.Random(3)
        for _ in range(50):
            f = random_support(rng)
            assert monomial_valuation(f, (1,) * f.nvars).value == multiplicity(f)

    def test_all_active_ties_reported(self):
        f = parse_polynomial("x1*x2 + x3^3 + x3*x4^3", 4)
        result = monomial_valuation(f, (9, 9, 6, 4))
        assert result.value == 18
        assert set(result.active) == {(1, 1, 0, 0), (0, 0, 3, 0), (0, 0, 1, 3)}

    def test_dimension_mismatch(self):
        f = parse_polynomial("x1*x2", 2)
        with pytest.raises(DimensionMismatchError):
            monomial_valuation(f, (1, 1, 1))


class TestNvBound:
    def test_multiplicity_two_non_cA(self):
        f = parse_polynomial("x1^2 + x2^3 + x3^3 + x4^3", 4)
        evaluation = nv_bound(f, (3, 2, 2, 2))
        assert evaluation.v == 6
        assert evaluation.bound == Fraction(27, 4)

    def test_cA_geq_3(self):
        f = parse_polynomial("x1*x2 + x3^4 + x4^4", 4)
        assert nv_bound(f, (2, 2, 1, 1)).bound == 8

    def test_cA2(self):
        f = parse_polynomial("x1*x2 + x3^3 + x4^3", 4)
        assert nv_bound(f, (3, 3, 2, 2)).bound == Fraction(32, 3)

    def test_d_family_surd_weight(self):
        w = (1, 1, SurdValue(-1, 1, 3), SurdValue(4, -2, 3))
        for k in (5, 6, 9):
            f = parse_polynomial(f"x1*x2 + x3^2*x4 + x4^{k - 1}", 4)
            evaluation = nv_bound(f, w)
            assert evaluation.bound == SIX_ROOT_THREE
        numeric = nv_bound(
            parse_polynomial("x1*x2 + x3^2*x4 + x4^4", 4),
            (1.0, 1.0, math.sqrt(3) - 1, 4 - 2 * math.sqrt(3)),
        )
        assert abs(numeric.bound - float(SIX_ROOT_THREE)) < 1e-12

    def test_fields_are_consistent(self):
        f = parse_polynomial("x1*x2 + x3^2 + x4^3", 4)
        evaluation = nv_bound(f, (3, 3, 3, 2))
        assert evaluation.w_sum == 11
        assert evaluation.w_prod == 54
        assert evaluation.ld_factor == 5
        assert evaluation.v == 6
        assert evaluation.bound == Fraction(125, 9)
        assert evaluation.bound > 0

    def test_exact_flavor_returns_fractions(self):
        f = parse_polynomial("x1*x2 + x3^2", 3)
        assert isinstance(nv_bound(f, (2, 2, 1)).bound, Fraction)
        assert isinstance(nv_bound(f, (2.0, 2.0, 1.0)).bound, float)

    def test_invalid_weight_rejected(self):
        f = parse_polynomial("x1^2*x2^2 + x1^3", 2)
        with pytest.raises(InvalidWeightError):
            nv_bound(f, (1, 1))

    def test_explicit_dimension_parameter(self):
        # Same support, one dimension lower: (w_sum - v)^n changes degree.
        f = parse_polynomial("x1*x2 + x3^2", 3)
        full = nv_bound(f, (2, 2, 1))
        lower = nv_bound(f, (2, 2, 1), n=1)
        assert full.bound == Fraction(9 * 2, 4) == Fraction(9, 2)
        assert lower.bound == Fraction(3 * 2, 4) == Fraction(3, 2)


class TestInvariants:
    def test_scaling_invariance_exact(self):
        rng = random.Random(17)
        for _ in range(200):
            f = random_support(rng)
            w = random_valid_exact_weight(rng, f)
            lam = Fraction(rng.randint(1, 9), rng.randint(1, 9))
            base = nv_bound(f, w)
            scaled = nv_bound(f, WeightVector.of(tuple(lam * x for x in w.entries)))
            assert scaled.bound == base.bound
            assert set(scaled.active) == set(base.active)

    def test_homogeneity_of_v(self):
        rng = random.Random(19)
        for _ in range(200):
            f = random_support(rng)
            w = random_exact_weight(rng, f.nvars)
            lam = Fraction(rng.randint(1, 9), rng.randint(1, 9))
            scaled = WeightVector.of(tuple(lam * x for x in w.entries))
            assert monomial_valuation(f, scaled).value == lam * monomial_valuation(f, w).value

    def test_concavity_of_v(self):
        rng = random.Random(29)
        for _ in range(200):
            f = random_support(rng)
            w1 = random_exact_weight(rng, f.nvars)
            w2 = random_exact_weight(rng, f.nvars)
            mid = WeightVector.of(
                tuple((a + b) / 2 for a, b in zip(w1.entries, w2.entries))
            )
            v_mid = monomial_valuation(f, mid).value
            v1 = monomial_valuation(f, w1).value
            v2 = monomial_valuation(f, w2).value
            assert 2 * v_mid >= v1 + v2

    def test_pruned_support_equality(self):
        rng = random.Random(31)
        for _ in range(100):
            f = random_support(rng)
            pruned = prune_support(f)
            w = random_valid_exact_weight(rng, f)
            assert nv_bound(f, w).bound == nv_bound(pruned, w).bound

    def test_exact_numeric_agreement(self):
        rng = random.Random(41)
        for _ in range(200):
            f = random_support(rng)
            w = random_valid_exact_weight(rng, f)
            exact = nv_bound(f, w).bound
            numeric = nv_bound(f, WeightVector.of(w.as_floats())).bound
            assert abs(numeric - float(exact)) <= 1e-12 * abs(float(exact))

    def test_upper_bound_against_catalog(self):
        # Every weight certifies an upper bound, so no weight can dip below
        # the known local volume of a catalog hypersurface.
        rng = random.Random(43)
        entries = [
            Ak(1), Ak(2), Ak(3), Ak(INFINITY),
            Dk(4), Dk(5), Dk(INFINITY),
            Ek(6), Ek(7), Ek(8),
            CubicFamily(6),
        ]
        for descriptor in entries:
            f = defining_support(descriptor)
            v0 = float(catalog_volume(descriptor).volume)
            for _ in range(500):
                w = random_float_weight(rng, f.nvars)
                try:
                    evaluation = nv_bound(f, w)
                except InvalidWeightError:
                    continue
                assert evaluation.bound >= v0 - 1e-9
