from fractions import Fraction
from itertools import product

import numpy as np
import pytest

from newform_whittaker.cosets import (
    CosetSpec,
    ResidueMatrix,
    _gamma_mask,
    gaussian_binomial,
    km_elements,
    km_membership,
    lattice_transversal,
    parabolic_transversal,
    subgroup_membership,
    verify_coset_transversal,
)


def brute_subspace_count(m, i, p):
    vecs = list(product(range(p), repeat=m))
    spans = set()
    for basis in product(vecs, repeat=i):
        span = frozenset(
            tuple(sum(c * b[r] for c, b in zip(co, basis)) % p for r in range(m))
            for co in product(range(p), repeat=i)
        )
        if len(span) == p**i:
            spans.add(span)
    return len(spans)


def test_gaussian_binomial_counts_subspaces():
    for m, i, p in [(2, 1, 2), (2, 1, 3), (2, 2, 3), (3, 1, 2), (3, 2, 2), (3, 1, 3)]:
        assert gaussian_binomial(m, i, p) == brute_subspace_count(m, i, p)
    assert gaussian_binomial(4, 5, 2) == 0


def test_residue_matrix_inverse():
    M = ResidueMatrix(((1, 2, 3), (0, 5, 7), (4, 0, 1)), 3, 2)
    assert M.is_invertible()
    assert M @ M.inverse() == ResidueMatrix.identity(3, 3, 2)
    with pytest.raises(ZeroDivisionError):
        ResidueMatrix(((3, 0), (0, 1)), 3, 2).inverse()


def test_km_membership_examples():
    for m in (1, 2):
        assert km_membership(ResidueMatrix.identity(3, 2, 2), m)
    d = ResidueMatrix(((1, 0), (0, 3)), 2, 2)
    assert km_membership(d, 1)
    assert not km_membership(d, 2)
    assert not km_membership(ResidueMatrix(((1, 0), (1, 1)), 2, 2), 1)
    assert not km_membership(ResidueMatrix(((2, 0), (0, 1)), 2, 2), 1)


def test_subgroup_membership_examples():
    assert subgroup_membership(ResidueMatrix.identity(2, 2, 2), CosetSpec(2, 2, 1, 1))
    assert not subgroup_membership(ResidueMatrix(((1, 1), (0, 1)), 2, 2), CosetSpec(2, 2, 1, 1))
    spec = CosetSpec(3, 2, 1, 1)
    # rows <= i, columns > i must vanish mod p; the opposite corner is free
    upper = ResidueMatrix(((1, 1, 0), (0, 1, 0), (0, 0, 1)), 2, 2)
    lower = ResidueMatrix(((1, 0, 0), (1, 1, 0), (0, 0, 1)), 2, 2)
    assert not subgroup_membership(upper, spec)
    assert subgroup_membership(lower, spec)


def test_subgroup_matches_conjugation_over_rationals():
    # Gamma = {g in K_m : d^{-1} g d in K_m}, d = diag(p^f), computed literally with Fractions
    for n, p, i in [(3, 3, 2), (3, 2, 1), (2, 3, 1)]:
        spec = CosetSpec(n, p, 1, i)
        f = (1,) * i + (0,) * (n - i)
        for batch in km_elements(n, p, 1, 2):
            for row in batch[:: max(1, len(batch) // 150)].tolist():
                M = ResidueMatrix(tuple(map(tuple, row)), p, 2)
                conj = [[Fraction(p) ** (f[l] - f[j]) * M.rows[j][l] for l in range(n)] for j in range(n)]
                integral = all(c.denominator == 1 for r in conj for c in r)
                inside = integral and km_membership(
                    ResidueMatrix(tuple(tuple(int(c) for c in r) for r in conj), p, 2), 1
                )
                assert subgroup_membership(M, spec) == inside


def test_parabolic_transversal_examples():
    for p in (2, 3, 5):
        assert len(parabolic_transversal(1, 1, p)) == 1
    assert len(parabolic_transversal(2, 1, 2)) == 3
    assert len(parabolic_transversal(2, 2, 3)) == 1
    for size, i, p in [(2, 1, 3), (3, 1, 2), (3, 2, 2)]:
        assert len(parabolic_transversal(size, i, p)) == gaussian_binomial(size, i, p)


def test_lattice_index_independent_of_representative():
    for size, i, p in [(2, 1, 2), (2, 1, 3), (2, 2, 3), (3, 1, 2), (3, 2, 2)]:
        for a in parabolic_transversal(size, i, p):
            assert len(lattice_transversal(a, i, p)) == p**i


def test_km_elements_match_full_scan():
    n, p, m, N = 2, 2, 1, 2
    mod = p**N
    brute = set()
    for entries in product(range(mod), repeat=n * n):
        M = ResidueMatrix((entries[:2], entries[2:]), p, N)
        if km_membership(M, m):
            brute.add(M.rows)
    got = [tuple(map(tuple, g)) for batch in km_elements(n, p, m, N) for g in batch.tolist()]
    assert len(got) == len(set(got))
    assert set(got) == brute


def test_vector_mask_matches_scalar_membership():
    spec = CosetSpec(3, 2, 1, 1)
    keep = list(range(spec.i)) + [spec.n - 1]
    rng = np.random.default_rng(0)
    batch = rng.integers(0, 4, size=(500, 3, 3))
    scalar = [subgroup_membership(ResidueMatrix(tuple(map(tuple, g)), 2, 2), spec) for g in batch.tolist()]
    invertible = [ResidueMatrix(tuple(map(tuple, g)), 2, 2).is_invertible() for g in batch.tolist()]
    vector = _gamma_mask(batch[:, keep, :], spec)
    assert [s for s in scalar] == [bool(v) and inv for v, inv in zip(vector, invertible)]


@pytest.mark.parametrize("n, p, i, count", [(2, 2, 1, 2), (3, 2, 1, 6), (3, 3, 2, 9), (2, 3, 1, 3), (3, 2, 2, 4)])
def test_verify_coset_transversal(n, p, i, count):
    report = verify_coset_transversal(CosetSpec(n, p, 1, i))
    assert len(report.representatives) == count == report.expected_count
    assert report.distinct and report.index_ok and report.coverage_ok
    assert report.passed


def test_higher_level():
    report = verify_coset_transversal(CosetSpec(2, 2, 2, 1))
    assert report.passed and len(report.representatives) == 2


def test_broken_transversals_are_caught(monkeypatch):
    import newform_whittaker.cosets as cosets

    honest = cosets.lattice_transversal
    spec = CosetSpec(3, 2, 1, 1)

    monkeypatch.setattr(cosets, "lattice_transversal", lambda a, i, p: honest(a, i, p)[:-1])
    short = verify_coset_transversal(spec)
    assert short.uncovered > 0 and not short.count_ok and not short.passed

    monkeypatch.setattr(cosets, "lattice_transversal", lambda a, i, p: honest(a, i, p) + [honest(a, i, p)[0]])
    doubled = verify_coset_transversal(spec)
    assert not doubled.distinct and doubled.multiply_covered > 0 and not doubled.passed


def test_spec_validation():
    with pytest.raises(ValueError):
        CosetSpec(3, 4, 1, 1)
    with pytest.raises(ValueError):
        CosetSpec(3, 2, 0, 1)
    with pytest.raises(ValueError):
        CosetSpec(3, 2, 1, 3)
    with pytest.raises(ValueError):
        CosetSpec(3, 2, 1, 1, N=1)
    with pytest.raises(ValueError):
        verify_coset_transversal(CosetSpec(4, 3, 1, 1))
