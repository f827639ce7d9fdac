"""Randomized property suites over the closed-form algebra.

Each of the four core properties (basis-shift value preservation,
substitution/evaluation commutation, canonicalization idempotence, and
the offset-splitting law for direct harmonic numbers) runs on at least
200 generated instances.
"""

from fractions import Fraction

from hypothesis import given, settings, strategies as st

from harmonic_sums import (
    ClosedForm,
    HarmonicSymbol,
    LinearArg,
    Polynomial,
    RationalFunction,
    evaluate_cf,
    harmonic_direct,
    parse_closed_form,
    render,
    shift_basis,
    substitute_n,
)

MANY = settings(max_examples=200, deadline=None)

fractions = st.fractions(
    min_value=Fraction(-20), max_value=Fraction(20), max_denominator=12
)

polynomials = st.lists(fractions, min_size=0, max_size=4).map(Polynomial)

# Denominators (n + c) with c >= 1 have no roots at integer n >= 0, so
# every generated coefficient is evaluable on the whole test grid.
safe_denominators = st.one_of(
    st.just(Polynomial([1])),
    st.integers(min_value=1, max_value=5).map(lambda c: Polynomial([c, 1])),
)

coefficients = st.builds(
    lambda num, den: RationalFunction(num, den), polynomials, safe_denominators
)

symbols = st.builds(
    HarmonicSymbol,
    st.builds(
        LinearArg, st.integers(min_value=1, max_value=3), st.integers(min_value=0, max_value=3)
    ),
    st.integers(min_value=1, max_value=4),
)

closed_forms = st.builds(
    ClosedForm,
    coefficients,
    st.dictionaries(symbols, coefficients, min_size=0, max_size=4),
)


@MANY
@given(closed_forms, st.sets(symbols, max_size=3), st.integers(min_value=0, max_value=12))
def test_shift_basis_preserves_evaluation(cf, shifted_symbols, n):
    targets = frozenset(sym.arg.shifted(1) for sym in shifted_symbols)
    shifted = shift_basis(cf, targets)
    assert evaluate_cf(shifted, n) == evaluate_cf(cf, n)
    assert shift_basis(shifted, targets) == shifted


@MANY
@given(
    closed_forms,
    st.builds(
        LinearArg, st.integers(min_value=0, max_value=2), st.integers(min_value=0, max_value=3)
    ),
    st.integers(min_value=0, max_value=10),
)
def test_substitution_commutes_with_evaluation(cf, target, n):
    substituted = substitute_n(cf, target)
    assert evaluate_cf(substituted, n) == evaluate_cf(cf, target.at(n))


@MANY
@given(closed_forms)
def test_canonicalization_is_idempotent(cf):
    assert ClosedForm(cf.constant, cf.terms) == cf
    assert ClosedForm(cf.constant, dict(cf.terms)) == cf
    for _, coeff in cf.terms:
        assert RationalFunction(coeff.num, coeff.den) == coeff
        assert coeff.den.leading == 1


@MANY
@given(
    st.integers(min_value=0, max_value=30),
    st.integers(min_value=0, max_value=30),
    st.integers(min_value=-3, max_value=5),
)
def test_offset_harmonic_splits_into_difference(c, n, m):
    assert harmonic_direct(c, n, m) == harmonic_direct(0, c + n, m) - harmonic_direct(
        0, c, m
    )


@MANY
@given(closed_forms, closed_forms)
def test_addition_is_commutative(x, y):
    assert x + y == y + x


@MANY
@given(closed_forms, closed_forms, closed_forms)
def test_addition_is_associative(x, y, z):
    assert (x + y) + z == x + (y + z)


@MANY
@given(closed_forms, closed_forms, coefficients)
def test_scaling_distributes_over_addition(x, y, factor):
    assert (x + y).scale(factor) == x.scale(factor) + y.scale(factor)


@MANY
@given(closed_forms)
def test_subtraction_inverts_addition(x):
    assert (x - x).is_zero
    assert x + ClosedForm.zero() == x


@MANY
@given(closed_forms)
def test_json_round_trip(cf):
    assert parse_closed_form(render(cf, "json")) == cf
