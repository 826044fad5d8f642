"""Exit criteria. Every check is exact; each also has a wall-clock bound.

One PASS/FAIL line per criterion is printed in the terminal summary.
"""

import json
import random
import time
from fractions import Fraction

from newform_whittaker.cli import run
from newform_whittaker.scalars import Laurent, poly_from_inverse_roots
from newform_whittaker.symfunc import (
    dominant_signatures,
    elementary_e,
    pieri_expand,
    schur_bialternant,
    schur_jacobi_trudi,
    schur_ssyt_oracle,
)
from newform_whittaker.whittaker import eigen_from_satake, lfactor_den_from_eigen, whittaker_value

from conftest import random_alpha, random_rational

RESULTS = []


def record(number, title, ok, elapsed, limit, detail=""):
    status = "PASS" if ok and elapsed < limit else "FAIL"
    RESULTS.append(f"[{status}] criterion {number}: {title} ({elapsed:.2f}s, limit {limit:g}s) {detail}".rstrip())
    return status == "PASS"


def alpha_arg(xs):
    return ",".join(f"{x.numerator}/{x.denominator}" for x in xs)


def test_criterion_1_closed_form_vs_recursion():
    rng = random.Random(101)
    start = time.perf_counter()
    failures = []
    runs = 0
    for n in (2, 3, 4):
        for _ in range(20):
            xs = random_alpha(rng, n)
            for cmd in ("recursion-check", "solve-check"):
                status, out = run([cmd, "--n", str(n), "--alpha", alpha_arg(xs), "--max-weight", "6"])
                runs += 1
                if status != 0:
                    failures.append((cmd, n, xs, out))
    elapsed = time.perf_counter() - start
    ok = not failures
    assert record(1, "closed form = Hecke recursion (recursion-check, solve-check)", ok, elapsed, 30,
                  f"{runs} runs"), failures[:3]


def test_criterion_2_zeta_equals_lfactor():
    rng = random.Random(202)
    start = time.perf_counter()
    failures = []
    runs = 0
    for n in (2, 3, 4, 5):
        for k in range(20):
            xs = random_alpha(rng, n, ramified=k % 2 == 0)
            status, out = run(["zeta-check", "--n", str(n), "--alpha", alpha_arg(xs), "--terms", "30"])
            runs += 1
            if status != 0 or out != "OK: coefficients agree to order 30\n":
                failures.append((n, xs, out))
    elapsed = time.perf_counter() - start
    assert record(2, "zeta integral = L-factor to order 30", not failures, elapsed, 10, f"{runs} runs"), failures[:3]


def test_criterion_3_pieri_identity():
    rng = random.Random(303)
    start = time.perf_counter()
    checked = 0
    failures = []
    for n in (2, 3, 4, 5):
        for _ in range(10):
            xs = random_alpha(rng, n)
            for f in dominant_signatures(n - 1, 8):
                s_f = schur_bialternant(f, xs)
                for i in range(1, n):
                    rhs = sum((schur_bialternant(g, xs) for g in pieri_expand(f, i)), Fraction(0))
                    checked += 1
                    if elementary_e(i, xs) * s_f != rhs:
                        failures.append((n, xs, f, i))
    elapsed = time.perf_counter() - start
    assert record(3, "Pieri identity e_i s_f = sum s_(f+eps)", not failures, elapsed, 60,
                  f"{checked} identities"), failures[:3]


def _schur_test_points(rng):
    r = lambda: random_rational(rng, nonzero=True)  # noqa: E731
    points = []
    for n in (1, 2, 3, 4):
        for _ in range(3):
            points.append(tuple(random_rational(rng) for _ in range(n)))
        points.append(tuple(r() for _ in range(n - 1)) + (Fraction(0),))
        if n >= 2:
            a = r()
            points.append((a, a) + tuple(r() for _ in range(n - 2)))
            points.append((Fraction(0),) * 2 + tuple(r() for _ in range(n - 2)))
            points.append((Fraction(1),) * n)
        if n >= 3:
            a, b = r(), r()
            points.append((a, b, a) + (b,) * (n - 3))
    return points


def test_criterion_4_schur_oracle_triangle():
    rng = random.Random(404)
    start = time.perf_counter()
    checked = 0
    failures = []
    for xs in _schur_test_points(rng):
        for f in dominant_signatures(len(xs), 6):
            values = (schur_bialternant(f, xs), schur_jacobi_trudi(f, xs), schur_ssyt_oracle(f, xs))
            checked += 1
            if len(set(values)) != 1:
                failures.append((xs, f, values))
    elapsed = time.perf_counter() - start
    assert record(4, "bialternant = Jacobi-Trudi = SSYT sum", not failures, elapsed, 60,
                  f"{checked} evaluations"), failures[:3]


def test_criterion_5_eigen_lfactor_roundtrip():
    rng = random.Random(505)
    start = time.perf_counter()
    failures = []
    for _ in range(50):
        xs = random_alpha(rng, rng.randint(2, 6))
        if lfactor_den_from_eigen(eigen_from_satake(xs)) != poly_from_inverse_roots(xs):
            failures.append(xs)
    elapsed = time.perf_counter() - start
    assert record(5, "Hecke eigenvalues -> L-factor denominator roundtrip", not failures, elapsed, 5,
                  "50 parameter sets"), failures[:3]


def test_criterion_6_coset_transversal():
    start = time.perf_counter()
    failures = []
    counts = {}
    for n in (2, 3):
        for p in (2, 3):
            for i in range(1, n):
                status, out = run(["coset-verify", "--n", str(n), "--p", str(p), "--i", str(i), "--m", "1",
                                   "--format", "json"])
                data = json.loads(out)
                counts[n, p, i] = data["representatives"]
                if status != 0 or not data["passed"] or data["representatives"] != data["expected"]:
                    failures.append(((n, p, i), data))
    elapsed = time.perf_counter() - start
    cited = counts[2, 2, 1], counts[3, 2, 1], counts[3, 3, 2]
    ok = not failures and cited == (2, 6, 9)
    assert record(6, "coset representatives: distinct, counted, covering", ok, elapsed, 300,
                  f"counts {counts}"), failures


def test_criterion_7_support_condition():
    rng = random.Random(707)
    signatures = []
    while len(signatures) < 1000:
        n = rng.randint(2, 6)
        f = tuple(rng.randint(-5, 5) for _ in range(n - 1))
        if all(a >= b for a, b in zip(f, f[1:])) and f[-1] >= 0:
            continue
        signatures.append((f, random_alpha(rng, n)))
    start = time.perf_counter()
    failures = [(f, xs) for f, xs in signatures if whittaker_value(f, xs) != Laurent()]
    elapsed = time.perf_counter() - start
    assert record(7, "W vanishes off the dominant cone", not failures, elapsed, 1,
                  "1000 signatures"), failures[:3]


def test_criterion_8_gl2_unramified():
    rng = random.Random(808)
    start = time.perf_counter()
    failures = []
    for _ in range(10):
        a1 = random_rational(rng, nonzero=True)
        a2 = random_rational(rng, nonzero=True)
        while a2 == a1:
            a2 = random_rational(rng, nonzero=True)
        for k in range(21):
            expected = Laurent.monomial(-k, (a1 ** (k + 1) - a2 ** (k + 1)) / (a1 - a2))
            if whittaker_value((k,), (a1, a2)) != expected:
                failures.append((a1, a2, k))
    elapsed = time.perf_counter() - start
    assert record(8, "GL(2) unramified formula for k <= 20", not failures, elapsed, 1,
                  "10 parameter pairs"), failures[:3]
