"""
Coset representatives for the Hecke operators, checked by brute force
=====================================================================

Modulo p^2, the representatives (a x; 0 1) are compared with every element
of K_1 to check that each element lies in exactly one coset.
"""

from newform_whittaker.cosets import CosetSpec, gaussian_binomial, verify_coset_transversal

for n, p, i in [(2, 2, 1), (2, 3, 1), (3, 2, 1), (3, 2, 2)]:
    report = verify_coset_transversal(CosetSpec(n, p, 1, i))
    print(
        f"n={n} p={p} i={i}: {len(report.representatives)} representatives "
        f"= {p}^{i} * {gaussian_binomial(n - 1, i, p)}, "
        f"{report.enumerated} elements of K_1 checked, passed={report.passed}"
    )

# one representative, printed as a matrix mod p^2
print(report.representatives[-1].as_array())
