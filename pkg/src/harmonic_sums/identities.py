"""Closed-form constructors and exact numeric checkers for harmonic sums.

The constructors produce canonical closed forms for

    sum_f:        sum_{k=0}^n k**p * H_k^(m)
    sum_g:        sum_{k=0}^n k**p * H_{n-k}^(m)
    offset_sum_f: sum_{k=0}^n k**p * H_{s+k}^(m)      (s = a*n+b, a,b >= 0)
    offset_sum_g: sum_{k=0}^n k**p * H_{s+n-k}^(m)

built exactly as linear combinations over the power-sum polynomials and
then shifted onto the presentation basis (H_{n+1} for the plain sums;
H_{(a+1)n+b+1} together with H_{an+b} for the offset sums). The
``offset_harmonic`` flag switches the offset constructors to the sums over
H_{s,k}^(m) = H_{s+k}^(m) - H_s^(m), which differ by an explicit
H_s^(m)-weighted correction.

The checkers verify the summation-by-parts identity and the two classical
H_k/k corollaries numerically, in exact rational arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .closed_form import (
    ClosedForm,
    LinearArg,
    harmonic_term,
    shift_basis,
    substitute_n,
)
from .exact import bernoulli_plus, binomial, int_pow
from .polynomial import Polynomial, RationalFunction, faulhaber_poly
from .oracle import harmonic_direct

__all__ = [
    "CheckRow",
    "IdentityReport",
    "build_closed_form",
    "corollary_check",
    "offset_basis",
    "offset_sum_f",
    "offset_sum_g",
    "sbp_check",
    "sum_f",
    "sum_g",
]

_ARG_N = LinearArg(1, 0)


def _require_exponent(p: int) -> None:
    if p < 0:
        raise ValueError(f"power exponent p must be nonnegative, got {p}")


def _require_offset(s: LinearArg) -> None:
    # must evaluate to a nonnegative integer for every n >= 0
    if s.b < 0:
        raise ValueError(f"offset {s} is negative at n = 0")


def _sum_f_terms(p: int, m: int) -> ClosedForm:
    """sum_{k=0}^n k**p H_k^(m) over the H_n basis (no final shift)."""
    total = harmonic_term(_ARG_N, m).scale(faulhaber_poly(p))
    total = total + harmonic_term(_ARG_N, m - p)
    for k in range(1, p + 2):
        c = Fraction(binomial(p + 1, k), p + 1) * bernoulli_plus(p - k + 1)
        total = total - harmonic_term(_ARG_N, m - k).scale(c)
    return total


def _sum_g_terms(p: int, m: int) -> ClosedForm:
    """sum_{k=0}^n k**p H_{n-k}^(m) over the H_n basis (no final shift)."""
    weight = faulhaber_poly(p) + (1 if p == 0 else 0)
    total = harmonic_term(_ARG_N, m).scale(weight)
    for k in range(1, p + 2):
        bracket = RationalFunction(bernoulli_plus(p - k + 1))
        if k <= p:  # the k = p+1 bracket term carries factor p-k+1 = 0
            bracket = bracket + (p - k + 1) * faulhaber_poly(p - k)
        c = Fraction((-1) ** k * binomial(p + 1, k), p + 1)
        total = total + harmonic_term(_ARG_N, m - k).scale(bracket * c)
    return total


def sum_f(p: int, m: int) -> ClosedForm:
    """Closed form of sum_{k=0}^n k**p H_k^(m), over the H_{n+1} basis."""
    _require_exponent(p)
    return shift_basis(_sum_f_terms(p, m))


def sum_g(p: int, m: int) -> ClosedForm:
    """Closed form of sum_{k=0}^n k**p H_{n-k}^(m), over the H_{n+1} basis."""
    _require_exponent(p)
    return shift_basis(_sum_g_terms(p, m))


def offset_basis(s: LinearArg) -> frozenset[LinearArg]:
    """Presentation basis for offset identities: H_{(a+1)n+b+1} and H_{an+b}."""
    targets = {LinearArg(s.a + 1, s.b + 1)}
    if s.a >= 1:
        targets.add(s)
    return frozenset(targets)


def offset_sum_f(
    p: int, m: int, s: LinearArg, offset_harmonic: bool = False
) -> ClosedForm:
    """Closed form of sum_{k=0}^n k**p H_{s+k}^(m) for the offset s = a*n+b.

    With ``offset_harmonic=True`` the summand is H_{s,k}^(m) instead,
    i.e. the H_s^(m) * (power sum + [p=0]) correction is subtracted.
    """
    _require_exponent(p)
    _require_offset(s)
    s_poly = s.as_poly()
    total = ClosedForm.zero()
    s_power = Polynomial((1,))  # s**0, honoring 0**0 = 1 when s = 0
    for k in range(p + 1):
        plain = _sum_f_terms(p - k, m)
        upper = substitute_n(plain, LinearArg(s.a + 1, s.b))
        if s.a == 0 and s.b == 0:
            lower = ClosedForm.zero()  # empty sum below the offset
        else:
            lower = substitute_n(plain, LinearArg(s.a, s.b - 1))
        factor = RationalFunction(s_power * ((-1) ** k * binomial(p, k)))
        total = total + (upper - lower).scale(factor)
        s_power = s_power * s_poly
    if offset_harmonic:
        total = total - _offset_correction(p, m, s)
    return shift_basis(total, offset_basis(s))


def offset_sum_g(
    p: int, m: int, s: LinearArg, offset_harmonic: bool = False
) -> ClosedForm:
    """Closed form of sum_{k=0}^n k**p H_{s+n-k}^(m) for the offset s = a*n+b."""
    _require_exponent(p)
    _require_offset(s)
    total = substitute_n(_sum_g_terms(p, m), LinearArg(s.a + 1, s.b))
    shift = Polynomial.linear(1, 1)  # n + 1
    for k in range(p + 1):
        if s.a == 0 and s.b == 0:
            break  # every lower piece is the empty sum
        lower = substitute_n(_sum_g_terms(k, m), LinearArg(s.a, s.b - 1))
        factor = RationalFunction(shift ** (p - k) * binomial(p, k))
        total = total - lower.scale(factor)
    if offset_harmonic:
        total = total - _offset_correction(p, m, s)
    return shift_basis(total, offset_basis(s))


def _offset_correction(p: int, m: int, s: LinearArg) -> ClosedForm:
    """H_s^(m) * (power-sum(p) + [p=0]), the H_{s,k} vs H_{s+k} difference."""
    weight = faulhaber_poly(p) + (1 if p == 0 else 0)
    return harmonic_term(s, m).scale(weight)


def build_closed_form(family: str, p: int, m: int, s: LinearArg) -> ClosedForm:
    """Constructor dispatch keyed by family name ('F' or 'G')."""
    if family.upper() == "F":
        return offset_sum_f(p, m, s)
    if family.upper() == "G":
        return offset_sum_g(p, m, s)
    raise ValueError(f"unknown family {family!r}; expected 'F' or 'G'")


# ---------------------------------------------------------------------------
# numeric identity checkers


@dataclass(frozen=True)
class CheckRow:
    n: int
    lhs: Fraction
    rhs: Fraction

    @property
    def passed(self) -> bool:
        return self.lhs == self.rhs


@dataclass(frozen=True)
class IdentityReport:
    """Outcome of checking one identity at one or more points, exactly."""

    family: str
    params: dict = field(hash=False)
    rows: tuple[CheckRow, ...] = ()

    @property
    def all_passed(self) -> bool:
        return all(row.passed for row in self.rows)

    def failures(self) -> tuple[CheckRow, ...]:
        return tuple(row for row in self.rows if not row.passed)


def sbp_check(m: int, w: int, n: int) -> IdentityReport:
    """Check sum_{k=0}^n [(k+1)**w - k**w] H_k^(m) == (n+1)**w H_n^(m) - H_n^(m-w).

    Both sides are computed by direct rational summation. The k = 0 term
    is zero regardless of w because H_0 = 0, so it is skipped and the
    0**w pole for negative w never materializes.
    """
    lhs = Fraction(0)
    for k in range(1, n + 1):
        weight = int_pow(Fraction(k + 1), w) - int_pow(Fraction(k), w)
        lhs += weight * harmonic_direct(0, k, m)
    rhs = int_pow(Fraction(n + 1), w) * harmonic_direct(0, n, m) - harmonic_direct(
        0, n, m - w
    )
    return IdentityReport("sbp", {"m": m, "w": w}, (CheckRow(n, lhs, rhs),))


def corollary_check(which: str, n: int) -> IdentityReport:
    """Check one of the classical weighted harmonic sum identities at n.

    'inv_k':        sum_{k=1}^n H_k / k     == (H_n**2 + H_n^(2)) / 2
    'inv_k_plus_1': sum_{k=0}^n H_k / (k+1) == (H_{n+1}**2 - H_{n+1}^(2)) / 2
    """
    if which == "inv_k":
        if n < 1:
            raise ValueError("inv_k requires n >= 1")
        lhs = sum(harmonic_direct(0, k, 1) / k for k in range(1, n + 1))
        h = harmonic_direct(0, n, 1)
        rhs = (h * h + harmonic_direct(0, n, 2)) / 2
    elif which == "inv_k_plus_1":
        if n < 0:
            raise ValueError("inv_k_plus_1 requires n >= 0")
        lhs = sum(harmonic_direct(0, k, 1) / (k + 1) for k in range(n + 1))
        h = harmonic_direct(0, n + 1, 1)
        rhs = (h * h - harmonic_direct(0, n + 1, 2)) / 2
    else:
        raise ValueError(f"unknown corollary {which!r}")
    return IdentityReport("corollary", {"which": which}, (CheckRow(n, lhs, rhs),))
