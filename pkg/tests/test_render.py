"""Rendering and the JSON serialization contract."""

import json
from fractions import Fraction

import jsonschema
import pytest

from harmonic_sums import (
    CLOSED_FORM_SCHEMA,
    ClosedForm,
    HarmonicSymbol,
    LinearArg,
    Polynomial,
    RationalFunction,
    closed_form_to_json,
    faulhaber_poly,
    offset_sum_f,
    parse_closed_form,
    render,
    sum_f,
    sum_g,
)
from harmonic_sums.render import polynomial_text

N = Polynomial.variable()


class TestTextRendering:
    def test_weighted_sum_shape(self):
        assert render(sum_f(1, 1)) == "H_n^(-1) H_{n+1} - 1/4 n(n+1)"

    def test_zero(self):
        assert render(ClosedForm.zero()) == "0"

    def test_plain_sum(self):
        assert render(sum_f(0, 1)) == "(n+1) H_{n+1} - (n+1)"

    def test_term_order_is_deterministic(self):
        # descending order first, then descending argument slope
        cf = offset_sum_f(0, 2, LinearArg(1, 0))
        text = render(cf)
        assert text.index("H_{2n+1}^(2)") < text.index("H_n^(2)")
        assert text.index("H_n^(2)") < text.index("H_{2n+1} ")

    def test_integer_coefficient_display(self):
        assert render(sum_g(3, 2)) == (
            "H_n^(-3) H_{n+1}^(2) - 3 H_n^(-2) H_{n+1} + 13/24 n(n+1)(2n+1)"
        )

    def test_rational_function_constant(self):
        cf = ClosedForm(RationalFunction(1, N + 1))
        assert render(cf) == "(1)/((n+1))"


class TestPolynomialDisplay:
    @pytest.mark.parametrize(
        "p,expected",
        [
            (0, "n"),
            (1, "1/2 n(n+1)"),
            (2, "1/6 n(n+1)(2n+1)"),
            (3, "1/4 n^2(n+1)^2"),
            (4, "1/30 n(n+1)(2n+1)(3n^2+3n-1)"),
            (5, "1/12 n^2(n+1)^2(2n^2+2n-1)"),
        ],
    )
    def test_power_sum_factoring(self, p, expected):
        assert polynomial_text(faulhaber_poly(p)) == expected

    def test_irreducible_part_kept_whole(self):
        poly = N * (N + 1) * (72 * N**3 + 243 * N**2 + 167 * N - 32)
        assert polynomial_text(poly) == "n(n+1)(72n^3+243n^2+167n-32)"

    def test_constant_polynomial(self):
        assert polynomial_text(Polynomial([Fraction(-3, 4)])) == "-3/4"
        assert polynomial_text(Polynomial()) == "0"


class TestLatexRendering:
    def test_weighted_sum(self):
        assert render(sum_f(1, 1), "latex") == (
            "H_n^{(-1)} H_{n+1} - \\frac{1}{4}n(n+1)"
        )

    def test_order_superscript(self):
        text = render(sum_f(0, 2), "latex")
        assert "H_{n+1}^{(2)}" in text

    def test_offset_identity(self):
        text = render(offset_sum_f(2, 1, LinearArg(2, 0)), "latex")
        assert text == (
            "\\frac{1}{2}n(2n+1)(3n+1) H_{3n+1}"
            " - \\frac{1}{3}n(2n+1)(4n+1) H_{2n}"
            " - \\frac{1}{36}n(n+1)(40n+17)"
        )


class TestJsonContract:
    def _forms(self):
        yield ClosedForm.zero()
        yield sum_f(0, 1)
        yield sum_f(5, 4)
        yield sum_g(4, 3)
        yield offset_sum_f(3, 2, LinearArg(2, 1))
        yield ClosedForm(
            RationalFunction(N + 1, 2 * N + 3),
            {HarmonicSymbol(LinearArg(3, -2), 4): RationalFunction(1, N + 5)},
        )

    def test_round_trip(self):
        for cf in self._forms():
            assert parse_closed_form(render(cf, "json")) == cf

    def test_validates_against_published_schema(self):
        for cf in self._forms():
            jsonschema.validate(closed_form_to_json(cf), CLOSED_FORM_SCHEMA)

    def test_integers_are_strings(self):
        data = closed_form_to_json(sum_f(1, 1))
        assert data["constant"]["num"] == ["0", "-1", "-1"]
        assert data["constant"]["den"] == ["4"]
        for term in data["terms"]:
            assert all(isinstance(c, str) for c in term["coeff"]["num"])

    def test_rendered_json_is_parseable_text(self):
        text = render(sum_f(2, 2), "json")
        data = json.loads(text)
        assert set(data) == {"constant", "terms"}

    def test_unknown_format_rejected(self):
        with pytest.raises(ValueError):
            render(ClosedForm.zero(), "html")
