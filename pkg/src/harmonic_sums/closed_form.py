"""Symbolic closed forms: linear combinations of harmonic-number symbols.

A closed form is a rational-function constant plus finitely many terms
coeff * H_{a*n+b}^{(m)} with rational-function coefficients. Canonical
forms never contain symbols of order <= 0 (those expand to power-sum
polynomials) or symbols with constant argument (those fold to exact
rationals), so structural equality decides mathematical equality on the
symbol family used here.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Union

from .exact import int_pow
from .polynomial import Polynomial, RationalFunction, faulhaber_poly

__all__ = [
    "ClosedForm",
    "DEFAULT_BASIS",
    "HarmonicSymbol",
    "LinearArg",
    "evaluate_cf",
    "harmonic_term",
    "harmonic_value",
    "shift_basis",
    "substitute_n",
]

Coefficient = Union["RationalFunction", Polynomial, int, Fraction]


@dataclass(frozen=True)
class LinearArg:
    """The linear form a*n + b used as a harmonic-symbol argument."""

    a: int
    b: int

    def __post_init__(self) -> None:
        if self.a < 0:
            raise ValueError(f"argument slope must be nonnegative, got {self.a}")
        if self.a == 0 and self.b < 0:
            raise ValueError(f"constant argument must be nonnegative, got {self.b}")

    @property
    def is_constant(self) -> bool:
        return self.a == 0

    def at(self, n: int) -> int:
        return self.a * n + self.b

    def as_poly(self) -> Polynomial:
        return Polynomial.linear(self.a, self.b)

    def shifted(self, d: int) -> LinearArg:
        return LinearArg(self.a, self.b + d)

    def __str__(self) -> str:
        if self.a == 0:
            return str(self.b)
        head = "n" if self.a == 1 else f"{self.a}n"
        if self.b == 0:
            return head
        return f"{head}{self.b:+d}"


@dataclass(frozen=True)
class HarmonicSymbol:
    """The symbol H_{a*n+b}^{(m)} with order m >= 1 and non-constant argument."""

    arg: LinearArg
    order: int

    def __post_init__(self) -> None:
        if self.order < 1:
            raise ValueError(
                f"symbol order must be >= 1, got {self.order} "
                "(nonpositive orders expand to polynomials)"
            )
        if self.arg.is_constant:
            raise ValueError("constant-argument symbols fold to rationals")

    def sort_key(self) -> tuple[int, int, int]:
        # descending order, then descending slope, then offset
        return (-self.order, -self.arg.a, self.arg.b)

    def __str__(self) -> str:
        arg = str(self.arg)
        sub = arg if len(arg) == 1 else "{" + arg + "}"
        sup = "" if self.order == 1 else f"^({self.order})"
        return f"H_{sub}{sup}"


# Direct-summation harmonic values, memoized per (order) as prefix lists.
# Kept local to this module so evaluation shares no code with the oracle.
_VALUE_CACHE: dict[int, list[Fraction]] = {}


def harmonic_value(c: int, order: int) -> Fraction:
    """H_c^(order) = sum_{k=1}^{c} k**(-order), by direct summation."""
    if c < 0:
        raise ValueError(f"harmonic number at negative argument {c}")
    prefix = _VALUE_CACHE.setdefault(order, [Fraction(0)])
    while len(prefix) <= c:
        k = len(prefix)
        prefix.append(prefix[-1] + int_pow(Fraction(k), -order))
    return prefix[c]


def _as_coeff(value: Coefficient) -> RationalFunction:
    if isinstance(value, RationalFunction):
        return value
    return RationalFunction(value)


class ClosedForm:
    """Canonical constant + sum of coeff * H_{a*n+b}^{(m)} terms."""

    __slots__ = ("constant", "terms")

    def __init__(
        self,
        constant: Coefficient = 0,
        terms: Mapping[HarmonicSymbol, Coefficient]
        | Iterable[tuple[HarmonicSymbol, Coefficient]] = (),
    ) -> None:
        items = terms.items() if isinstance(terms, Mapping) else terms
        merged: dict[HarmonicSymbol, RationalFunction] = {}
        for sym, coeff in items:
            coeff = _as_coeff(coeff)
            if sym in merged:
                coeff = merged[sym] + coeff
            merged[sym] = coeff
        self.constant: RationalFunction = _as_coeff(constant)
        self.terms: tuple[tuple[HarmonicSymbol, RationalFunction], ...] = tuple(
            sorted(
                ((s, c) for s, c in merged.items() if not c.is_zero),
                key=lambda item: item[0].sort_key(),
            )
        )

    @classmethod
    def zero(cls) -> ClosedForm:
        return cls()

    @property
    def is_zero(self) -> bool:
        return self.constant.is_zero and not self.terms

    @property
    def is_polynomial(self) -> bool:
        """True when there are no symbols and the constant is polynomial."""
        return not self.terms and self.constant.is_polynomial

    def coefficient(self, sym: HarmonicSymbol) -> RationalFunction:
        for s, c in self.terms:
            if s == sym:
                return c
        return RationalFunction(0)

    def symbols(self) -> tuple[HarmonicSymbol, ...]:
        return tuple(s for s, _ in self.terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ClosedForm):
            return NotImplemented
        return self.constant == other.constant and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.constant, self.terms))

    def __add__(self, other: ClosedForm) -> ClosedForm:
        if not isinstance(other, ClosedForm):
            return NotImplemented
        return ClosedForm(
            self.constant + other.constant, list(self.terms) + list(other.terms)
        )

    def __neg__(self) -> ClosedForm:
        return ClosedForm(-self.constant, [(s, -c) for s, c in self.terms])

    def __sub__(self, other: ClosedForm) -> ClosedForm:
        if not isinstance(other, ClosedForm):
            return NotImplemented
        return self + (-other)

    def scale(self, factor: Coefficient) -> ClosedForm:
        factor = _as_coeff(factor)
        return ClosedForm(
            self.constant * factor, [(s, c * factor) for s, c in self.terms]
        )

    def __repr__(self) -> str:
        from .render import render

        return f"ClosedForm({render(self, 'text')!r})"

    def __str__(self) -> str:
        from .render import render

        return render(self, "text")


def harmonic_term(arg: LinearArg, order: int) -> ClosedForm:
    """H_{arg}^(order) as a canonical closed form.

    Order <= 0 expands through the power-sum polynomial, a constant
    argument folds to an exact rational, and anything else is a genuine
    symbol.
    """
    if order <= 0:
        poly = faulhaber_poly(-order).compose_linear(arg.a, arg.b)
        return ClosedForm(poly)
    if arg.is_constant:
        return ClosedForm(harmonic_value(arg.b, order))
    return ClosedForm(0, {HarmonicSymbol(arg, order): 1})


def evaluate_cf(cf: ClosedForm, n: int) -> Fraction:
    """Exact value of the closed form at an integer n >= 0."""
    if n < 0:
        raise ValueError(f"closed forms are evaluated at n >= 0, got {n}")
    total = cf.constant.evaluate(n)
    for sym, coeff in cf.terms:
        total += coeff.evaluate(n) * harmonic_value(sym.arg.at(n), sym.order)
    return total


def substitute_n(cf: ClosedForm, t: LinearArg) -> ClosedForm:
    """Replace n by t.a*n + t.b throughout, keeping the result canonical.

    A constant substitution target folds the whole form to a number
    (symbols at negative constant arguments raise, matching evaluation).
    """
    if t.is_constant:
        return ClosedForm(evaluate_cf(cf, t.b))
    constant = cf.constant.compose_linear(t.a, t.b)
    terms = []
    for sym, coeff in cf.terms:
        arg = LinearArg(sym.arg.a * t.a, sym.arg.a * t.b + sym.arg.b)
        terms.append((HarmonicSymbol(arg, sym.order), coeff.compose_linear(t.a, t.b)))
    return ClosedForm(constant, terms)


DEFAULT_BASIS: frozenset[LinearArg] = frozenset({LinearArg(1, 1)})


def shift_basis(
    cf: ClosedForm, targets: frozenset[LinearArg] = DEFAULT_BASIS
) -> ClosedForm:
    """Rewrite symbols one step below a target argument up onto it.

    Uses H_c^(m) = H_{c+1}^(m) - 1/(c+1)**m, moving the correction into
    the constant. Symbols already on a target, or unrelated to every
    target, are left alone; the operation is idempotent.
    """
    constant = cf.constant
    terms: list[tuple[HarmonicSymbol, RationalFunction]] = []
    for sym, coeff in cf.terms:
        up = sym.arg.shifted(1)
        if sym.arg not in targets and up in targets:
            terms.append((HarmonicSymbol(up, sym.order), coeff))
            constant = constant - coeff * RationalFunction(1, up.as_poly() ** sym.order)
        else:
            terms.append((sym, coeff))
    return ClosedForm(constant, terms)
