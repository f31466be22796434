"""A walking tour of the exact q-expansion engine.

Every coefficient printed here is exact: rational numbers inside a
cyclotomic field, no floats anywhere.  Fractional exponents (like the
q^{1/24} in front of eta) are carried as genuine Puiseux exponents.
"""
from fractions import Fraction as F

from modunits.classical import discriminant, eta, j_function, theta_classical
from modunits.qseries import PuiseuxSeries, product_family

print("=" * 60)
print("Dedekind eta: q^{1/24} * prod (1 - q^n)")
print("=" * 60)
series = eta(4)
for e in series.exponents():
    print(f"  q^{e} : {series.coefficient(e)}")

# The pentagonal-number pattern is visible once the q^{1/24} is stripped:
# exponents n(3n-1)/2 get coefficient (-1)^n.
euler = eta(16) * PuiseuxSeries.monomial(1, F(-1, 24), 16)
print("\nEuler product coefficients up to q^15:")
print(" ", [str(euler.coefficient(k).rational_value()) for k in range(16)])

print()
print("=" * 60)
print("Classical theta constants")
print("=" * 60)
t2 = theta_classical(2, 6)
t3 = theta_classical(3, 6)
t4 = theta_classical(4, 6)
print("theta2 exponents:", [str(e) for e in t2.exponents()])
print("theta3 exponents:", [str(e) for e in t3.exponents()])

jacobi = t2**4 + t4**4 - t3**4
print("theta2^4 + theta4^4 - theta3^4 is zero through the cutoff:", jacobi.is_zero())

print()
print("=" * 60)
print("Discriminant and the j-invariant")
print("=" * 60)
delta = discriminant(8)
eta24 = (eta(9) ** 24).with_two_pi_i_power(12)
print("Delta = eta^24 through q^7:", delta.first_mismatch(eta24.truncated_to(8)) is None)
print("Delta carries a (2 pi i)^12 normalization tag:", delta.two_pi_i_power)

j = j_function(6)
print("\nj-invariant coefficients:")
for k in range(-1, 5):
    print(f"  q^{k:>2} : {j.coefficient(k)}")

print()
print("=" * 60)
print("Building your own products")
print("=" * 60)
# prod_{n<6} (1 + q^n)^{-8} (1 + q^{2n})^{-8}; each factor is (coeff, exp, mult)
factors = [(-1, n, -8) for n in range(1, 6)] + [(-1, 2 * n, -8) for n in range(1, 3)]
inv = product_family(factors, trunc=F(6))
print("q * eta^8 / eta(4 tau)^8 head:",
      [str(inv.coefficient(k)) for k in range(5)])
