"""The standard catalogue of identities emitted by the `table` command.

Covers the power-sum polynomials up to p = 5, the plain weighted sums up
to (p, m) = (5, 4) for the forward family and (5, 3) for the reversed
family, and the offset families for s = n (orders 1 and 2 forward, order
1 reversed) and s = 2n (order 1 forward). Everything is computed by the
constructors; nothing here is hard-coded.
"""

from __future__ import annotations

from dataclasses import dataclass

from .closed_form import ClosedForm, LinearArg
from .identities import offset_sum_f, offset_sum_g, sum_f, sum_g
from .polynomial import RationalFunction, faulhaber_poly

__all__ = ["CatalogEntry", "catalog_entries"]

_ZERO_OFFSET = LinearArg(0, 0)


@dataclass(frozen=True)
class CatalogEntry:
    kind: str  # 'power_sum', 'f' or 'g'
    p: int
    m: int | None
    offset: LinearArg
    closed_form: ClosedForm

    def lhs_label(self, fmt: str) -> str:
        latex = fmt == "latex"
        if self.kind == "power_sum":
            return f"H_n^{{(-{self.p})}}" if latex else f"H_n^(-{self.p})"
        weight = _power_text(self.p, latex)
        arg = _summand_arg(self.kind, self.offset)
        if latex:
            sup = "" if self.m == 1 else f"^{{({self.m})}}"
            return f"\\sum_{{k=0}}^{{n}} {weight}H_{{{arg}}}{sup}"
        sup = "" if self.m == 1 else f"^({self.m})"
        sub = arg if len(arg) == 1 else "{" + arg + "}"
        return f"sum_(k=0..n) {weight}H_{sub}{sup}"


def _power_text(p: int, latex: bool) -> str:
    if p == 0:
        return ""
    if p == 1:
        return "k "
    return f"k^{{{p}}} " if latex else f"k^{p} "


def _summand_arg(kind: str, offset: LinearArg) -> str:
    if kind == "f":
        slope, shift, tail = offset.a, offset.b, "+k"
    else:
        slope, shift, tail = offset.a + 1, offset.b, "-k"
    if slope == 0:
        body = str(shift) if shift else ""
    else:
        head = "n" if slope == 1 else f"{slope}n"
        body = head + (f"{shift:+d}" if shift else "")
    if not body:
        return tail[1:]  # plain k
    return body + tail


def catalog_entries() -> list[CatalogEntry]:
    entries: list[CatalogEntry] = []
    for p in range(6):
        poly_form = ClosedForm(RationalFunction(faulhaber_poly(p)))
        entries.append(CatalogEntry("power_sum", p, None, _ZERO_OFFSET, poly_form))
    for m in range(1, 5):
        for p in range(6):
            entries.append(CatalogEntry("f", p, m, _ZERO_OFFSET, sum_f(p, m)))
    for m in range(1, 4):
        for p in range(6):
            entries.append(CatalogEntry("g", p, m, _ZERO_OFFSET, sum_g(p, m)))
    for s, top_order in ((LinearArg(1, 0), 2), (LinearArg(2, 0), 1)):
        for m in range(1, top_order + 1):
            for p in range(6):
                entries.append(CatalogEntry("f", p, m, s, offset_sum_f(p, m, s)))
    s = LinearArg(1, 0)
    for p in range(6):
        entries.append(CatalogEntry("g", p, 1, s, offset_sum_g(p, 1, s)))
    return entries
