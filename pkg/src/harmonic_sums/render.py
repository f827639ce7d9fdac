"""Rendering of closed forms as text, LaTeX, or JSON, plus JSON parsing.

Text and LaTeX follow the usual presentation for these identities:
harmonic symbols carry the argument as a subscript and the order as a
parenthesized superscript, coefficients that equal (a multiple of) a
power-sum polynomial are displayed as H_n^(-p), and polynomial factors of
degree <= 2 with integer coefficients are split off for readability. All
of that is cosmetic; the JSON form is the contractual serialization and
round-trips bit-exactly.
"""

from __future__ import annotations

import json
from fractions import Fraction
from math import gcd, lcm

from .closed_form import ClosedForm, HarmonicSymbol, LinearArg
from .polynomial import Polynomial, RationalFunction, faulhaber_poly

__all__ = [
    "CLOSED_FORM_SCHEMA",
    "closed_form_to_json",
    "fraction_to_json",
    "parse_closed_form",
    "polynomial_text",
    "rational_function_text",
    "render",
]

FORMATS = ("text", "latex", "json")


# ---------------------------------------------------------------------------
# display factoring


def factor_for_display(
    poly: Polynomial,
) -> tuple[Fraction, list[tuple[Polynomial, int]]]:
    """Split a polynomial into content * product of integer-primitive factors.

    Pulls out powers of n and every rational linear root; whatever remains
    (degree >= 2, no rational roots) stays as one factor. The product of
    the returned parts is exactly the input.
    """
    if poly.is_zero:
        return Fraction(0), []
    numerators = gcd(*(c.numerator for c in poly.coeffs if c))
    denominators = lcm(*(c.denominator for c in poly.coeffs if c))
    content = Fraction(numerators, denominators)
    if poly.leading < 0:
        content = -content
    primitive = poly * (1 / content)
    if primitive.degree == 0:
        return content * primitive.coeffs[0], []

    factors: list[tuple[Polynomial, int]] = []
    low_zeros = 0
    while not primitive.coeffs[low_zeros]:
        low_zeros += 1
    if low_zeros:
        factors.append((Polynomial.variable(), low_zeros))
        primitive = Polynomial(primitive.coeffs[low_zeros:])

    while primitive.degree >= 1:
        root = _rational_root(primitive)
        if root is None:
            break
        factor = Polynomial.linear(root.denominator, -root.numerator)
        count = 0
        while True:
            quot, rem = primitive.divmod(factor)
            if not rem.is_zero:
                break
            primitive = quot
            count += 1
        factors.append((factor, count))
    if primitive.degree >= 1:
        factors.append((primitive, 1))
        primitive = Polynomial.constant(1)
    factors.sort(key=lambda fm: (fm[0].degree, fm[0].leading, fm[0].coeffs))
    return content * primitive.coeffs[0], factors


def _rational_root(poly: Polynomial) -> Fraction | None:
    const = poly.coeffs[0]
    lead = poly.leading
    for p in _divisors(abs(const.numerator)):
        for q in _divisors(abs(lead.numerator)):
            for cand in (Fraction(p, q), Fraction(-p, q)):
                if poly.evaluate(cand) == 0:
                    return cand
    return None


def _divisors(n: int) -> list[int]:
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)


# ---------------------------------------------------------------------------
# text / latex


def _fraction_text(q: Fraction, latex: bool) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    if latex:
        sign = "-" if q < 0 else ""
        return f"{sign}\\frac{{{abs(q.numerator)}}}{{{q.denominator}}}"
    return f"{q.numerator}/{q.denominator}"


def _monomial(power: int, latex: bool) -> str:
    if power == 0:
        return ""
    if power == 1:
        return "n"
    return f"n^{{{power}}}" if latex else f"n^{power}"


def _plain_poly(poly: Polynomial, latex: bool) -> str:
    """Unfactored rendering, descending powers: '2n^2+2n-1'."""
    if poly.is_zero:
        return "0"
    parts: list[str] = []
    for power in range(poly.degree, -1, -1):
        c = poly.coeffs[power]
        if not c:
            continue
        sign = "-" if c < 0 else ("+" if parts else "")
        mag = abs(c)
        mono = _monomial(power, latex)
        if mag == 1 and mono:
            parts.append(f"{sign}{mono}")
        else:
            body = _fraction_text(mag, latex)
            parts.append(f"{sign}{body}{mono}")
    return "".join(parts)


def polynomial_text(poly: Polynomial, latex: bool = False) -> str:
    """Factored display: content first, then factors, e.g. '1/4 n(n+1)'."""
    content, factors = factor_for_display(poly)
    if not factors:
        return _fraction_text(content, latex)
    pieces = []
    for factor, mult in factors:
        if factor == Polynomial.variable():
            base = "n"
        else:
            base = f"({_plain_poly(factor, latex)})"
        if mult > 1:
            exp = f"^{{{mult}}}" if latex else f"^{mult}"
            base += exp
        pieces.append(base)
    body = "".join(pieces)
    if content == 1:
        return body
    if content == -1:
        return f"-{body}"
    sep = "" if latex else " "
    return f"{_fraction_text(content, latex)}{sep}{body}"


def rational_function_text(rf: RationalFunction, latex: bool = False) -> str:
    if rf.is_polynomial:
        return polynomial_text(rf.num, latex)
    num = polynomial_text(rf.num, latex)
    den = polynomial_text(rf.den, latex)
    if latex:
        return f"\\frac{{{num}}}{{{den}}}"
    return f"({num})/({den})"


def _symbol_text(sym: HarmonicSymbol, latex: bool) -> str:
    arg = str(sym.arg)
    sub = arg if len(arg) == 1 else "{" + arg + "}"
    if sym.order == 1:
        sup = ""
    else:
        sup = f"^{{({sym.order})}}" if latex else f"^({sym.order})"
    return f"H_{sub}{sup}"


def _power_sum_label(p: int, latex: bool) -> str:
    return f"H_n^{{(-{p})}}" if latex else f"H_n^(-{p})"


def _match_power_sum(poly: Polynomial) -> tuple[Fraction, int] | None:
    """Detect poly == scalar * faulhaber_poly(q); returns (scalar, q).

    Degree-1 polynomials are excluded: a bare multiple of n reads better
    as n than as H_n^(-0).
    """
    q = poly.degree - 1
    if q < 1:
        return None
    reference = faulhaber_poly(q)
    scalar = poly.leading / reference.leading
    if poly == reference * scalar:
        return scalar, q
    return None


def _coefficient_piece(coeff: RationalFunction, latex: bool) -> tuple[int, str]:
    """(sign, body) for a symbol coefficient; body '' means bare +/-1."""
    if coeff.is_polynomial:
        poly = coeff.num
        match = _match_power_sum(poly)
        if match is not None:
            scalar, q = match
            sign = -1 if scalar < 0 else 1
            label = _power_sum_label(q, latex)
            if abs(scalar) == 1:
                return sign, label
            sep = "" if latex else " "
            return sign, f"{_fraction_text(abs(scalar), latex)}{sep}{label}"
        if poly.degree == 0:
            c = poly.coeffs[0]
            sign = -1 if c < 0 else 1
            if abs(c) == 1:
                return sign, ""
            return sign, _fraction_text(abs(c), latex)
        content, _ = factor_for_display(poly)
        sign = -1 if content < 0 else 1
        return sign, polynomial_text(poly * sign, latex)
    # general rational function: group it, keep the sign outside
    content, _ = factor_for_display(coeff.num)
    sign = -1 if content < 0 else 1
    scaled = RationalFunction(coeff.num * sign, coeff.den)
    body = rational_function_text(scaled, latex)
    if not latex:
        body = f"({body})"
    return sign, body


def _constant_piece(rf: RationalFunction, latex: bool) -> tuple[int, str]:
    if rf.is_zero:
        return 1, "0"
    content, _ = factor_for_display(rf.num)
    sign = -1 if content < 0 else 1
    scaled = RationalFunction(rf.num * sign, rf.den)
    if scaled.is_polynomial:
        return sign, polynomial_text(scaled.num, latex)
    return sign, rational_function_text(scaled, latex)


def render(cf: ClosedForm, fmt: str = "text") -> str:
    """Deterministic rendering of a closed form in the given format."""
    if fmt == "json":
        return json.dumps(closed_form_to_json(cf), indent=2)
    if fmt not in ("text", "latex"):
        raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")
    latex = fmt == "latex"
    pieces: list[tuple[int, str]] = []
    for sym, coeff in cf.terms:
        sign, body = _coefficient_piece(coeff, latex)
        sym_text = _symbol_text(sym, latex)
        pieces.append((sign, f"{body} {sym_text}" if body else sym_text))
    if not cf.constant.is_zero or not pieces:
        pieces.append(_constant_piece(cf.constant, latex))
    out = []
    for i, (sign, body) in enumerate(pieces):
        if i == 0:
            out.append(f"-{body}" if sign < 0 else body)
        else:
            out.append(f" - {body}" if sign < 0 else f" + {body}")
    return "".join(out)


# ---------------------------------------------------------------------------
# JSON (the contractual serialization)

_POLY_SCHEMA = {
    "type": "array",
    "items": {"type": "string", "pattern": "^-?[0-9]+$"},
}

_RATFUNC_SCHEMA = {
    "type": "object",
    "required": ["num", "den"],
    "additionalProperties": False,
    "properties": {"num": _POLY_SCHEMA, "den": _POLY_SCHEMA},
}

CLOSED_FORM_SCHEMA = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "type": "object",
    "required": ["constant", "terms"],
    "additionalProperties": False,
    "properties": {
        "constant": _RATFUNC_SCHEMA,
        "terms": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["order", "arg", "coeff"],
                "additionalProperties": False,
                "properties": {
                    "order": {"type": "integer", "minimum": 1},
                    "arg": {
                        "type": "object",
                        "required": ["a", "b"],
                        "additionalProperties": False,
                        "properties": {
                            "a": {"type": "integer", "minimum": 1},
                            "b": {"type": "integer"},
                        },
                    },
                    "coeff": _RATFUNC_SCHEMA,
                },
            },
        },
    },
}


def fraction_to_json(q: Fraction) -> dict[str, str]:
    """A bare rational as integer strings (consumers must not lose digits)."""
    return {"num": str(q.numerator), "den": str(q.denominator)}


def _rf_to_json(rf: RationalFunction) -> dict[str, list[str]]:
    scale = lcm(1, *(c.denominator for c in rf.num.coeffs + rf.den.coeffs))
    num = [c * scale for c in rf.num.coeffs]
    den = [c * scale for c in rf.den.coeffs]
    divisor = gcd(*(int(c) for c in num + den)) or 1
    return {
        "num": [str(int(c) // divisor) for c in num],
        "den": [str(int(c) // divisor) for c in den],
    }


def _rf_from_json(data: dict) -> RationalFunction:
    num = Polynomial(Fraction(int(c)) for c in data["num"])
    den = Polynomial(Fraction(int(c)) for c in data["den"])
    return RationalFunction(num, den)


def closed_form_to_json(cf: ClosedForm) -> dict:
    return {
        "constant": _rf_to_json(cf.constant),
        "terms": [
            {
                "order": sym.order,
                "arg": {"a": sym.arg.a, "b": sym.arg.b},
                "coeff": _rf_to_json(coeff),
            }
            for sym, coeff in cf.terms
        ],
    }


def parse_closed_form(data: dict | str) -> ClosedForm:
    """Inverse of the JSON rendering: parse(render(cf)) == cf."""
    if isinstance(data, str):
        data = json.loads(data)
    terms = [
        (
            HarmonicSymbol(
                LinearArg(term["arg"]["a"], term["arg"]["b"]), term["order"]
            ),
            _rf_from_json(term["coeff"]),
        )
        for term in data["terms"]
    ]
    return ClosedForm(_rf_from_json(data["constant"]), terms)
