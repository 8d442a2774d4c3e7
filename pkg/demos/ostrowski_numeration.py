#!/usr/bin/env python3
"""Ostrowski digits: integers over q_k, reals over D_k.

Run:  python demos/ostrowski_numeration.py
"""

from fractions import Fraction

from ostro import (cf_from_quadratic, ostrowski_int,
                   ostrowski_int_reconstruct, ostrowski_real, real_residual,
                   tail_sign)

golden = cf_from_quadratic(5, 1, 2)
sqrt2 = cf_from_quadratic(2, 0, 1)

# Over the golden ratio the q_k are Fibonacci numbers, so the integer
# expansion is the Zeckendorf representation.
for n in (10, 100, 1971):
    exp = ostrowski_int(golden, n)
    parts = [f"q_{k}={golden.convergent(k).q}" for k, c in
             enumerate(exp.coeffs) if c]
    print(f"{n:5d} = sum of {parts}   digits {exp.coeffs}")
    assert ostrowski_int_reconstruct(exp, golden) == n

# Real expansion of 1/3 over sqrt(2): gamma = sum b_{k+1} D_k with the
# residual after K digits certified below |D_{K-1}|.
gamma = Fraction(1, 3)
exp = ostrowski_real(sqrt2, gamma, 14)
print(f"\n1/3 over sqrt(2): digits {exp.coeffs}")
for upto in (4, 8, 12):
    res = abs(real_residual(sqrt2, exp, upto))
    cap = sqrt2.d_abs(upto - 1)
    print(f"  after {upto:2d} digits: |residual| ~ {float(res):.3e}"
          f"  <=  |D_{upto-1}| ~ {float(cap):.3e}")

# The tail starting at any index m >= 4 with a nonzero leading digit has
# sign (-1)^m; the certification is exact, not numerical.
print("\ntail signs:")
for m in range(4, 14):
    if exp.coeffs[m]:
        print(f"  m={m}: sign {tail_sign(sqrt2, exp, m):+d}"
              f"  (expected {(-1)**m:+d})")
