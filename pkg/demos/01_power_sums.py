"""Power sums and Bernoulli numbers.

Every identity in this package bottoms out in the classical power-sum
polynomials: sum_{k=1}^n k**p is a polynomial in n of degree p+1 whose
coefficients come from the Bernoulli numbers (taken with B_1 = +1/2).
This script builds the first few, prints them, and checks them against
plain loops.
"""

from harmonic_sums import bernoulli_plus, faulhaber_poly
from harmonic_sums.render import polynomial_text

print("Bernoulli numbers (B_1 = +1/2 convention):")
print("  " + ", ".join(f"B+({k}) = {bernoulli_plus(k)}" for k in range(9)))
print()

print("Power-sum polynomials:")
for p in range(6):
    poly = faulhaber_poly(p)
    print(f"  sum_(k=1..n) k^{p} = {polynomial_text(poly)}")
print()

print("Cross-check against direct summation (exact, no tolerance):")
for p in range(6):
    poly = faulhaber_poly(p)
    ok = all(poly.evaluate(n) == sum(k**p for k in range(1, n + 1)) for n in range(51))
    print(f"  p = {p}: agrees with the loop for n = 0..50: {ok}")
    assert ok

print()
print("Evaluation is exact rational arithmetic, so big inputs stay exact:")
value = faulhaber_poly(5).evaluate(10**6)
print(f"  sum_(k=1..10^6) k^5 = {value}")
assert value == sum(k**5 for k in range(1, 10**6 + 1))
print("  (matches the literal seven-figure-term loop)")
