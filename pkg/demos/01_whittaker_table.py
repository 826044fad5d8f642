"""
Whittaker values of a GL(3) newform on the torus
================================================

A newform of conductor > 0 on GL(3) has an L-factor of degree at most 2, so
its Satake parameters are (a1, a2, 0). Its Whittaker function on
diag(p^f1, p^f2, 1) is a power of q^(1/2) times a Schur polynomial.
"""

from fractions import Fraction

from newform_whittaker import modulus_sqrt, schur, whittaker_table, whittaker_value

alpha = (Fraction(1, 2), Fraction(1, 3), Fraction(0))

# every value is exact; v stands for q^(1/2)
table = whittaker_table(alpha, max_weight=3)
for f, value in table.entries.items():
    print(f, value)

# the value factors as modulus character times a Schur polynomial
f = (2, 1)
print(whittaker_value(f, alpha), "=", modulus_sqrt(f), "*", schur(f + (0,), alpha))

# off the dominant cone the function vanishes
print(whittaker_value((0, 1), alpha), whittaker_value((1, -1), alpha))

# numeric display for a concrete residue field, q = 5
print({f: round(v.numeric(5), 6) for f, v in table.entries.items()})
