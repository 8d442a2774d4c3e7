#!/usr/bin/env python3
"""A walk through the continued-fraction layer.

Run:  python demos/continued_fractions_tour.py
"""

from fractions import Fraction

from ostro import cf_from_decimal, cf_from_quadratic, cf_from_terms
from ostro.errors import PrecisionError, RationalInputError

# Three classical irrationals, given exactly as (p + sqrt(d)) / q.
golden = cf_from_quadratic(5, 1, 2)   # (1 + sqrt(5)) / 2
sqrt2 = cf_from_quadratic(2, 0, 1)
sqrt3 = cf_from_quadratic(3, 0, 1)

print("partial quotients")
for name, cf in (("golden", golden), ("sqrt2", sqrt2), ("sqrt3", sqrt3)):
    print(f"  {name:6s} -> {cf.partial_quotients(10)}")

print("\nconvergents p_k/q_k of sqrt(2), with the signed error D_k = q_k a - p_k")
for conv in sqrt2.convergents(8):
    print(f"  k={conv.k}  {conv.p:5d}/{conv.q:<5d}  D_k ~ {float(conv.D):+.3e}"
          f"   |D_k|*q_(k+1) = {float(abs(conv.D)) * sqrt2.convergent(conv.k+1).q:.6f}")

# The sign alternates and |D_k| q_{k+1} <= 1; both checks are exact, not
# floating point: the D values carry their closed form.
d5 = sqrt2.d_value(5)
print(f"\nD_5 in closed form: {d5.exact}")

# Decimal sources certify quotients only while the whole uncertainty
# interval agrees, then refuse.
pi = cf_from_decimal("3.14159265358979323846", 20)
print(f"\npi from 20 digits: horizon k = {pi.horizon}")
print(f"  certified quotients: {pi.partial_quotients(pi.horizon + 1)}")
try:
    pi.partial_quotient(pi.horizon + 1)
except PrecisionError as exc:
    print(f"  one more digit -> {exc}")

try:
    cf_from_decimal("0.5", 1)
except RationalInputError as exc:
    print(f"\n'0.5' at one digit of precision -> {exc}")

# A periodic quotient list is resolved back to an exact quadratic value.
again = cf_from_terms([1], [2])
print(f"\n[1; 2, 2, 2, ...] solved exactly: {again.alpha_exact()}")
narrow = again.alpha_value(Fraction(1, 10**12))
print(f"alpha to width 1e-12: [{float(narrow.lo):.15f}, {float(narrow.hi):.15f}]")
