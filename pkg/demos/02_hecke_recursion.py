"""
Hecke eigenvalues and the difference equations
==============================================

The eigenvalues of the Hecke operators T_i on the newform determine the
L-factor, and the Whittaker values satisfy a system of difference equations
whose coefficients are those eigenvalues. Solving that system from scratch
reproduces the closed form.
"""

from fractions import Fraction

from newform_whittaker import (
    eigen_from_satake,
    lfactor_den_from_eigen,
    solve_recursion_linear,
    verify_recursion,
    whittaker_value,
)
from newform_whittaker.scalars import format_poly

alpha = (Fraction(2, 3), Fraction(-1, 4), Fraction(5), Fraction(0))  # GL(4), conductor > 0

lambdas = eigen_from_satake(alpha)
for i, lam in enumerate(lambdas, start=1):
    print(f"lambda_{i} =", lam)

# the eigenvalues give back the L-factor denominator, as a polynomial in X = q^-s
print("1/L =", format_poly(lfactor_den_from_eigen(lambdas)))

report = verify_recursion(alpha, weight_bound=4)
print("recursion holds on", len(report), "pairs:", report.passed)

table = solve_recursion_linear(alpha, weight_bound=5)
agree = all(table[f] == whittaker_value(f, alpha) for f in table.signatures())
print("linear solve of", len(table), "unknowns agrees with closed form:", agree)

# for an unramified parameter list the (n-1)-variable recursion does not apply
print("unramified GL(2):", verify_recursion((Fraction(1, 2), Fraction(1, 3)), 3).passed)
