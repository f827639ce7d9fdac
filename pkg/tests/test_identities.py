"""Closed-form constructors and the exact numeric checkers."""

from fractions import Fraction

import pytest

import known_identities as known
from harmonic_sums import (
    LinearArg,
    build_closed_form,
    corollary_check,
    evaluate_cf,
    faulhaber_poly,
    harmonic_direct,
    int_pow,
    lhs_direct,
    offset_sum_f,
    offset_sum_g,
    sbp_check,
    sum_f,
    sum_g,
)

S0 = LinearArg(0, 0)


class TestForwardSums:
    @pytest.mark.parametrize("p,m", sorted(known.F_SUMS))
    def test_catalog(self, p, m):
        assert sum_f(p, m) == known.F_SUMS[(p, m)]

    def test_spot_value(self):
        # 0*H_0 + 1*H_1 + 2*H_2 = 0 + 1 + 3
        assert evaluate_cf(sum_f(1, 1), 2) == 4
        assert lhs_direct("F", 1, 1, S0, 2) == 4

    def test_coefficient_degree_bound(self):
        for p in range(7):
            for m in range(1, 6):
                cf = sum_f(p, m)
                assert cf.constant.is_polynomial
                assert cf.constant.num.degree <= p + 1
                for _, coeff in cf.terms:
                    assert coeff.is_polynomial
                    assert coeff.num.degree <= p + 1

    def test_negative_exponent_rejected(self):
        with pytest.raises(ValueError):
            sum_f(-1, 1)


class TestReversedSums:
    @pytest.mark.parametrize("p,m", sorted(known.G_SUMS))
    def test_catalog(self, p, m):
        assert sum_g(p, m) == known.G_SUMS[(p, m)]

    @pytest.mark.parametrize("m", [1, 2, 3, 4])
    def test_p0_equals_forward_sum(self, m):
        assert sum_g(0, m) == sum_f(0, m)

    def test_spot_value(self):
        # 1*H_2 + 4*H_1 + 9*H_0 = 3/2 + 4
        assert evaluate_cf(sum_g(2, 1), 3) == Fraction(11, 2)

    def test_reversal_consistency(self):
        # sum k**p H_{n-k} equals sum (n-k)**p H_k, both brute force
        for p in range(4):
            for m in (1, 2):
                for n in range(12):
                    reversed_weight = sum(
                        int_pow(Fraction(n - k), p) * harmonic_direct(0, k, m)
                        for k in range(n + 1)
                    )
                    assert lhs_direct("G", p, m, S0, n) == reversed_weight


class TestOffsetSums:
    @pytest.mark.parametrize("p,m,s", sorted(known.OFFSET_F_SUMS))
    def test_forward_catalog(self, p, m, s):
        assert offset_sum_f(p, m, LinearArg(*s)) == known.OFFSET_F_SUMS[(p, m, s)]

    @pytest.mark.parametrize("p,m,s", sorted(known.OFFSET_G_SUMS))
    def test_reversed_catalog(self, p, m, s):
        assert offset_sum_g(p, m, LinearArg(*s)) == known.OFFSET_G_SUMS[(p, m, s)]

    @pytest.mark.parametrize("p", range(6))
    @pytest.mark.parametrize("m", range(1, 5))
    def test_zero_offset_degenerates_to_plain_sum(self, p, m):
        assert offset_sum_f(p, m, S0) == sum_f(p, m)
        assert offset_sum_g(p, m, S0) == sum_g(p, m)

    def test_p0_families_coincide_at_equal_offset(self):
        s = LinearArg(1, 0)
        assert offset_sum_f(0, 1, s) == offset_sum_g(0, 1, s)

    def test_constant_offset_spot_value(self):
        # 0*H_3 + 1*H_4 + 2*H_5, frozen from the brute-force oracle
        cf = offset_sum_f(1, 1, LinearArg(0, 3))
        expected = lhs_direct("F", 1, 1, LinearArg(0, 3), 2)
        assert expected == Fraction(133, 20)
        assert evaluate_cf(cf, 2) == expected

    def test_negative_offset_rejected(self):
        with pytest.raises(ValueError):
            offset_sum_f(1, 1, LinearArg(1, -1))

    @pytest.mark.parametrize("family,builder", [("F", offset_sum_f), ("G", offset_sum_g)])
    def test_offset_harmonic_variant(self, family, builder):
        # the H_{s,k} variant equals the literal sum over H_{s,*} and also
        # the plain variant minus H_s^(m) * (power sum + [p = 0])
        for p in range(4):
            for m in (1, 2):
                for a, b in [(0, 0), (0, 2), (1, 0), (1, 1), (2, 1)]:
                    s = LinearArg(a, b)
                    variant = builder(p, m, s, offset_harmonic=True)
                    plain = builder(p, m, s)
                    weight = faulhaber_poly(p) + (1 if p == 0 else 0)
                    for n in range(8):
                        h_s = harmonic_direct(0, s.at(n), m)
                        correction = h_s * weight.evaluate(n)
                        plain_value = evaluate_cf(plain, n)
                        assert evaluate_cf(variant, n) == plain_value - correction
                        if family == "F":
                            literal = sum(
                                int_pow(Fraction(k), p)
                                * harmonic_direct(s.at(n), k, m)
                                for k in range(n + 1)
                            )
                        else:
                            literal = sum(
                                int_pow(Fraction(k), p)
                                * harmonic_direct(s.at(n), n - k, m)
                                for k in range(n + 1)
                            )
                        assert evaluate_cf(variant, n) == literal

    def test_build_dispatch(self):
        assert build_closed_form("f", 2, 1, S0) == sum_f(2, 1)
        assert build_closed_form("G", 2, 1, S0) == sum_g(2, 1)
        with pytest.raises(ValueError):
            build_closed_form("x", 0, 1, S0)


class TestCanonicalEquality:
    """Structural equality of canonical forms tracks pointwise equality.

    Forward direction spot-checked on known equal pairs; the converse
    (agreement on a short window forces equality) is checked empirically
    across every pair of catalogue entries.
    """

    def _window(self, x, y) -> int:
        degree = max(
            [x.constant.num.degree, y.constant.num.degree]
            + [c.num.degree for _, c in x.terms]
            + [c.num.degree for _, c in y.terms]
        )
        symbols = len(set(x.symbols()) | set(y.symbols()))
        return 2 * (max(degree, 0) + symbols) + 4

    def test_equal_forms_agree_on_grid(self):
        pairs = [(sum_f(0, m), sum_g(0, m)) for m in range(1, 5)]
        s = LinearArg(1, 0)
        pairs.append((offset_sum_f(0, 1, s), offset_sum_g(0, 1, s)))
        for x, y in pairs:
            assert x == y
            for n in range(41):
                assert evaluate_cf(x, n) == evaluate_cf(y, n)

    def test_distinct_forms_differ_within_window(self):
        catalog = (
            [sum_f(p, m) for (p, m) in known.F_SUMS]
            + [sum_g(p, m) for (p, m) in known.G_SUMS]
            + [offset_sum_f(p, m, LinearArg(*s)) for (p, m, s) in known.OFFSET_F_SUMS]
            + [offset_sum_g(p, m, LinearArg(*s)) for (p, m, s) in known.OFFSET_G_SUMS]
        )
        for i, x in enumerate(catalog):
            for y in catalog[i + 1 :]:
                if x == y:
                    continue
                window = self._window(x, y)
                assert any(
                    evaluate_cf(x, n) != evaluate_cf(y, n) for n in range(window + 1)
                ), (x, y)


class TestNegativeOrders:
    def test_collapse_to_polynomial(self):
        for p in range(4):
            for q in range(4):
                cf = sum_f(p, -q)
                assert cf.is_polynomial
                for n in range(31):
                    assert evaluate_cf(cf, n) == lhs_direct("F", p, -q, S0, n)

    def test_reversed_collapse(self):
        for p in range(3):
            for q in range(3):
                cf = sum_g(p, -q)
                assert cf.is_polynomial
                for n in range(20):
                    assert evaluate_cf(cf, n) == lhs_direct("G", p, -q, S0, n)


class TestSummationByParts:
    @pytest.mark.parametrize("m,w,n", [(1, 2, 5), (2, -1, 0), (3, -2, 10), (0, 3, 7), (-2, -3, 12)])
    def test_samples(self, m, w, n):
        report = sbp_check(m, w, n)
        assert report.all_passed
        assert report.rows[0].lhs == report.rows[0].rhs

    def test_zero_weight_exponent_degenerates(self):
        # w = 0 makes every summand vanish and the right side cancel
        for n in range(10):
            report = sbp_check(2, 0, n)
            assert report.rows[0].lhs == 0
            assert report.rows[0].rhs == 0

    def test_full_sweep(self):
        for m in range(-2, 4):
            for w in range(-3, 4):
                for n in range(31):
                    assert sbp_check(m, w, n).all_passed, (m, w, n)


class TestCorollaries:
    def test_first_values(self):
        report = corollary_check("inv_k", 1)
        assert report.rows[0].lhs == 1
        assert report.rows[0].rhs == 1

    def test_spot_value(self):
        report = corollary_check("inv_k", 3)
        assert report.rows[0].lhs == Fraction(85, 36)
        assert report.all_passed

    def test_shifted_variant(self):
        report = corollary_check("inv_k_plus_1", 2)
        assert report.rows[0].lhs == 1
        assert report.all_passed

    def test_ranges(self):
        assert all(corollary_check("inv_k", n).all_passed for n in range(1, 101))
        assert all(corollary_check("inv_k_plus_1", n).all_passed for n in range(101))

    def test_validation(self):
        with pytest.raises(ValueError):
            corollary_check("inv_k", 0)
        with pytest.raises(ValueError):
            corollary_check("nonsense", 3)
