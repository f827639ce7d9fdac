"""Closed forms for sum_{k=0}^n k**p H_k^(m).

The forward family: a weighted sum of generalized harmonic numbers turns
into a short combination of H_{n+1}^(j) symbols with polynomial
coefficients. The closed forms are exact identities, valid for every
n >= 0, and the script verifies a few of them against brute force.
"""

from harmonic_sums import LinearArg, evaluate_cf, lhs_direct, render, sum_f

print("A few members of the forward family:")
for p, m in [(0, 1), (1, 1), (2, 2), (4, 3), (5, 4)]:
    cf = sum_f(p, m)
    weight = "" if p == 0 else ("k " if p == 1 else f"k^{p} ")
    order = "" if m == 1 else f"^({m})"
    print(f"  sum {weight}H_k{order} = {render(cf)}")
print()

print("LaTeX output for the same identity:")
print("  " + render(sum_f(2, 2), "latex"))
print()

print("Verification against the literal double sum (exact):")
s0 = LinearArg(0, 0)
for p, m in [(1, 1), (3, 2), (5, 4)]:
    cf = sum_f(p, m)
    ok = all(evaluate_cf(cf, n) == lhs_direct("F", p, m, s0, n) for n in range(30))
    print(f"  (p={p}, m={m}): closed form == brute force for n = 0..29: {ok}")
    assert ok
print()

print("Nonpositive orders collapse the whole sum to a polynomial:")
cf = sum_f(2, -1)
print(f"  sum k^2 H_k^(-1) = {render(cf)}   (a pure polynomial: {cf.is_polynomial})")
