"""Brute-force evaluators and grid verification."""

from fractions import Fraction

import pytest

from harmonic_sums import (
    ClosedForm,
    GridSpec,
    LinearArg,
    build_closed_form,
    harmonic_direct,
    int_pow,
    lhs_direct,
    verify_grid,
)

S0 = LinearArg(0, 0)


class TestHarmonicDirect:
    def test_plain_values(self):
        assert harmonic_direct(0, 4, 1) == Fraction(25, 12)
        assert harmonic_direct(0, 0, 7) == 0

    def test_offset_value(self):
        # 1/9 + 1/16 + 1/25
        assert harmonic_direct(2, 3, 2) == Fraction(769, 3600)

    def test_negative_order_is_power_sum(self):
        assert harmonic_direct(0, 4, -3) == 100

    def test_recurrence(self):
        for c in (0, 1, 5):
            for m in (-2, 1, 3):
                for n in range(20):
                    step = harmonic_direct(c, n, m) + int_pow(Fraction(c + n + 1), -m)
                    assert harmonic_direct(c, n + 1, m) == step

    def test_offset_splits_into_difference(self):
        for c in range(6):
            for m in (1, 2, 4):
                for n in range(15):
                    assert harmonic_direct(c, n, m) == harmonic_direct(
                        0, c + n, m
                    ) - harmonic_direct(0, c, m)

    def test_validation(self):
        with pytest.raises(ValueError):
            harmonic_direct(-1, 3, 1)
        with pytest.raises(ValueError):
            harmonic_direct(0, -3, 1)


class TestLhsDirect:
    def test_forward_examples(self):
        assert lhs_direct("F", 0, 1, S0, 2) == Fraction(5, 2)
        assert lhs_direct("F", 0, 1, S0, 0) == 0

    def test_reversed_example(self):
        assert lhs_direct("G", 1, 1, S0, 2) == 1

    def test_unknown_family_rejected(self):
        with pytest.raises(ValueError):
            lhs_direct("Q", 0, 1, S0, 1)


class TestVerifyGrid:
    def test_small_grid_passes(self):
        spec = GridSpec("F", (0, 2), (1, 2), (S0, LinearArg(1, 0)), (0, 10))
        report = verify_grid(spec, build_closed_form)
        assert report.total == spec.cell_count() == 3 * 2 * 2 * 11
        assert report.all_passed
        assert report.failures() == []

    def test_corrupted_form_is_caught(self):
        def corrupt(family, p, m, s):
            cf = build_closed_form(family, p, m, s)
            return ClosedForm(cf.constant + 1, cf.terms)

        spec = GridSpec("G", (1, 1), (1, 1), (S0,), (0, 5))
        report = verify_grid(spec, corrupt)
        assert not report.all_passed
        assert report.failed == 6
        cell = report.failures()[0]
        assert cell.rhs - cell.lhs == 1

    def test_empty_ranges_rejected(self):
        with pytest.raises(ValueError):
            GridSpec("F", (2, 1), (1, 1), (S0,), (0, 5))
        with pytest.raises(ValueError):
            GridSpec("F", (0, 1), (1, 1), (), (0, 5))
        with pytest.raises(ValueError):
            GridSpec("F", (0, 1), (1, 1), (S0,), (-1, 5))
