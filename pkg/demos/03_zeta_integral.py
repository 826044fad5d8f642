"""
The zeta integral of the newform is the L-factor
================================================

Integrating W(diag(a, 1, ..., 1)) |a|^(s - (n-1)/2) over F^x gives a power
series in X = q^-s. Here both sides are compared as truncated series.
"""

from fractions import Fraction

from newform_whittaker import lfactor_series, zeta_equals_lfactor, zeta_series

for alpha in [
    (Fraction(1, 2), Fraction(0)),
    (Fraction(1, 2), Fraction(1, 3), Fraction(0)),
    (Fraction(3), Fraction(-2, 7), Fraction(1, 5), Fraction(4)),  # unramified GL(4)
]:
    z = zeta_series(alpha, 6)
    print("Z:", z)
    print("L:", lfactor_series(alpha, 6))
    print("equal to order 30:", zeta_equals_lfactor(alpha, 30).passed)
    print()
