import math
from fractions import Fraction

import mpmath
import pytest

from moebius_km.constants import (
    ConstantEstimate,
    PrecisionError,
    alpha,
    alpha_n,
    apostol_A,
    euler_factor,
    zeta,
)
from moebius_km.functions import psi_k
from moebius_km.primes import prime_list_up_to


class TestZeta:
    def test_known_closed_forms(self):
        assert abs(zeta(2, 1e-12).value - math.pi**2 / 6) <= 1e-12
        assert abs(zeta(4, 1e-12).value - math.pi**4 / 90) <= 1e-12

    def test_bound_respected_and_consistent(self):
        loose = zeta(3, 1e-6)
        tight = zeta(3, 1e-10)
        assert loose.tail_bound <= 1e-6
        assert tight.tail_bound <= 1e-10
        assert abs(loose.value - tight.value) <= loose.tail_bound + tight.tail_bound

    def test_unreachable_tolerance(self):
        with pytest.raises(PrecisionError):
            zeta(2, 1e-300)

    def test_domain(self):
        with pytest.raises(ValueError):
            zeta(1, 1e-6)
        with pytest.raises(ValueError):
            zeta(3, 0.0)

    def test_against_mpmath(self):
        for k in (2, 3, 5, 11):
            est = zeta(k, 1e-13)
            assert abs(est.value - float(mpmath.zeta(k))) <= est.tail_bound + 1e-15


class TestEulerFactor:
    @pytest.mark.parametrize(
        "p,km,expected",
        [
            (2, (2, 3), Fraction(11, 12)),
            (3, (2, 3), Fraction(35, 36)),
            (2, (2, 2), Fraction(5, 6)),
        ],
    )
    def test_examples(self, p, km, expected):
        assert euler_factor(p, km) == expected

    def test_identity_with_psi(self):
        # same factor via 1 - 1/(p^(m-1) psi_k(p)), exactly
        for k in (2, 3, 4):
            for m in range(k, k + 5):
                for p in prime_list_up_to(10**4):
                    lhs = euler_factor(p, (k, m))
                    rhs = 1 - 1 / (Fraction(p) ** (m - 1) * psi_k(p, k))
                    assert lhs == rhs, (p, k, m)


class TestAlphaN:
    def test_examples(self):
        assert alpha_n((2, 3), 1) == 1
        assert alpha_n((2, 3), 6) == Fraction(385, 72)
        assert alpha_n((2, 2), 2) == Fraction(5, 3)


class TestProducts:
    def test_values_in_unit_interval(self):
        for km in ((2, 2), (2, 3), (3, 3), (3, 7), (4, 6)):
            est = alpha(km, 10**4)
            assert 0.0 < est.value < 1.0
        for k in (2, 3, 4):
            est = apostol_A(k, 10**4)
            assert 0.0 < est.value < 1.0

    def test_doubling_stays_within_bound(self):
        for km in ((2, 2), (2, 3)):
            small = alpha(km, 10**5)
            big = alpha(km, 2 * 10**5)
            assert abs(big.value - small.value) <= small.tail_bound
        a_small = apostol_A(2, 10**5)
        a_big = apostol_A(2, 2 * 10**5)
        assert abs(a_big.value - a_small.value) <= a_small.tail_bound

    def test_bound_nonincreasing_in_prime_limit(self):
        bounds = [alpha((2, 3), p).tail_bound for p in (10**3, 10**4, 10**5)]
        assert bounds[0] >= bounds[1] >= bounds[2]

    def test_single_factor_product(self):
        # below the correction threshold the value is the literal product
        for k in (2, 3):
            est = apostol_A(k, 2)
            expected = 1 - 2 / 2**k + 1 / 2 ** (k + 1)
            assert est.value == pytest.approx(expected, abs=1e-15)
            assert est.tail_bound > 0.01

    def test_nearly_single_factor_for_large_m(self):
        est = alpha((2, 12), 10**5)
        product = 1.0
        for p in prime_list_up_to(100):
            product *= float(euler_factor(p, (2, 12)))
        assert abs(est.value - product) < 1e-9

    def test_three_is_closer_to_one(self):
        assert 1 - apostol_A(3, 10**5).value < 1 - apostol_A(2, 10**5).value

    def test_closing_identity_within_combined_bounds(self):
        for k in (2, 3):
            a = alpha((k, k), 10**5)
            z = zeta(k, 1e-12)
            ak = apostol_A(k, 10**5)
            diff = abs(a.value - z.value * ak.value)
            combined = (
                a.tail_bound
                + z.value * ak.tail_bound
                + ak.value * z.tail_bound
                + z.tail_bound * ak.tail_bound
            )
            assert diff <= combined

    def test_domain(self):
        with pytest.raises(ValueError):
            alpha((2, 3), 1)
        with pytest.raises(ValueError):
            apostol_A(1, 100)


class TestTailMachinery:
    def test_power_tail_against_mpmath(self):
        import numpy as np

        from moebius_km.constants import _power_tail
        from moebius_km.primes import primes_up_to

        for s in (2, 3, 5):
            for limit in (10**4, 10**5):
                pf = primes_up_to(limit).astype(np.float64)
                got, err = _power_tail(s, limit, pf)
                oracle = float(mpmath.primezeta(s)) - float((pf ** float(-s)).sum())
                assert abs(got - oracle) <= err + 1e-14, (s, limit)

    def test_estimates_carry_positive_bounds(self):
        for est in (alpha((2, 3), 10**4), apostol_A(2, 10**4), zeta(2, 1e-10)):
            assert isinstance(est, ConstantEstimate)
            assert est.tail_bound > 0
