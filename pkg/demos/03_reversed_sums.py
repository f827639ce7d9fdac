"""Closed forms for the reversed family sum_{k=0}^n k**p H_{n-k}^(m).

Reversing the harmonic index couples the weight to n, so the closed
forms pick up extra polynomial-weighted lower-order symbols compared to
the forward family. At p = 0 both families are literally the same sum.
"""

from harmonic_sums import LinearArg, evaluate_cf, lhs_direct, render, sum_f, sum_g

print("A few members of the reversed family:")
for p, m in [(1, 1), (2, 1), (3, 2), (4, 3)]:
    weight = "k " if p == 1 else f"k^{p} "
    order = "" if m == 1 else f"^({m})"
    print(f"  sum {weight}H_(n-k){order} = {render(sum_g(p, m))}")
print()

print("At p = 0 the reversed sum IS the forward sum, canonically:")
for m in (1, 2, 3):
    assert sum_g(0, m) == sum_f(0, m)
    print(f"  m = {m}: sum_g(0, m) == sum_f(0, m)")
print()

print("Forward and reversed sums share every harmonic value, so their")
print("difference is a plain polynomial identity:")
p, m = 3, 1
diff_at = lambda n: lhs_direct("F", p, m, LinearArg(0, 0), n) - lhs_direct(
    "G", p, m, LinearArg(0, 0), n
)
print(f"  p={p}, m={m}: differences at n = 0..6: {[diff_at(n) for n in range(7)]}")
print()

print("Exact verification of the reversed family:")
for p, m in [(2, 1), (5, 3)]:
    cf = sum_g(p, m)
    ok = all(evaluate_cf(cf, n) == lhs_direct("G", p, m, LinearArg(0, 0), n) for n in range(30))
    print(f"  (p={p}, m={m}): closed form == brute force for n = 0..29: {ok}")
    assert ok
